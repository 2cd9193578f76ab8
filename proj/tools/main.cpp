#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hebg2p/corpus.hpp"
#include "hebg2p/diacritizer.hpp"
#include "hebg2p/lexicon.hpp"
#include "hebg2p/metrics.hpp"
#include "hebg2p/pipeline.hpp"
#include "hebg2p/pseudo_gt.hpp"
#include "hebg2p/rules.hpp"

namespace {

using namespace hebg2p;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

// Lines per processing chunk; bounds memory on large inputs.
constexpr std::size_t kChunkLines = 512;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string convention = "broad";
  std::string stress = "syllable";
  std::string provider = "passthrough";
  std::string lexicon;
  std::string diacritizer_url;
  int diacritizer_timeout_ms = 5000;
  std::string format = "text";
  bool json = false;
  std::size_t jobs = 1;
  std::string input = "-";
  std::string output = "-";

  // annotate
  bool no_r1 = false;
  bool no_r2 = false;
  bool no_r3 = false;
  // correct
  std::string corrections;
  // evaluate
  std::string ref;
  std::string hyp;
  std::string corpus;
  std::string label;
  // validate, lexicon check
  std::string path;
};

class Input {
 public:
  explicit Input(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open input '" + path + "'");
    }
  }
  std::istream& stream() { return file_.is_open() ? static_cast<std::istream&>(file_) : std::cin; }

  // Up to `max` lines; false once the stream is exhausted and nothing was read.
  bool read_chunk(std::vector<std::string>& lines, std::size_t max) {
    lines.clear();
    std::string line;
    while (lines.size() < max && std::getline(stream(), line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
    }
    return !lines.empty();
  }

 private:
  std::ifstream file_;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> read_lines(const std::string& path) {
  Input in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in.stream(), line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

Convention make_convention(const Options& o) {
  Convention c;
  c.narrowness = o.convention == "narrow" ? Narrowness::Narrow : Narrowness::Broad;
  c.stress = o.stress == "vowel" ? StressPosition::BeforeVowel : StressPosition::BeforeSyllable;
  return c;
}

PipelineConfig make_pipeline_config(const Options& o) {
  PipelineConfig config;
  config.convention = make_convention(o);
  config.provider = *parse_provider_kind(o.provider);
  config.jobs = o.jobs;
  config.remote = RemoteConfig::from_environment();
  if (!o.diacritizer_url.empty()) config.remote.endpoint = o.diacritizer_url;
  config.remote.timeout_ms = o.diacritizer_timeout_ms;
  if (config.provider == ProviderKind::Remote && config.remote.endpoint.empty()) {
    throw UsageError("--provider remote needs --diacritizer-url or " + std::string(kDiacritizerUrlEnv));
  }
  if (config.remote.timeout_ms <= 0) throw UsageError("--diacritizer-timeout-ms must be positive");
  if (config.jobs == 0) throw UsageError("--jobs must be at least 1");
  if (!o.lexicon.empty()) config.lexicon = std::make_shared<const Lexicon>(Lexicon::load(o.lexicon));
  return config;
}

void report_provider(const std::vector<ProviderDiagnostic>& diags, std::size_t first_line) {
  for (const auto& d : diags) {
    std::cerr << "provider: ";
    if (d.line) std::cerr << "line " << first_line + *d.line + 1 << ": ";
    std::cerr << d.message << " (falling back to defaults)\n";
  }
}

int cmd_phonemize(const Options& o) {
  const Pipeline pipeline(make_pipeline_config(o));
  Input in(o.input);
  Output out(o.output);
  std::vector<std::string> chunk;
  std::size_t line_no = 0;
  while (in.read_chunk(chunk, kChunkLines)) {
    ChunkResult r = pipeline.run(chunk);
    // Provider line indices are relative to the chunk.
    report_provider(r.provider_diagnostics, line_no);
    for (std::size_t i = 0; i < r.lines.size(); ++i) {
      const auto& res = r.lines[i];
      for (const auto& d : res.phonemes.diagnostics) {
        std::cerr << "line " << line_no + i + 1 << ": " << d.message << "\n";
      }
      if (o.format == "jsonl") {
        nlohmann::json diags = nlohmann::json::array();
        for (const auto& d : res.phonemes.diagnostics) {
          diags.push_back({{"kind", to_string(d.kind)}, {"word", d.word}, {"message", d.message}});
        }
        const nlohmann::json j = {{"line", line_no + i + 1},
                                  {"text", chunk[i]},
                                  {"enhanced", res.enhanced},
                                  {"ipa", res.phonemes.ipa},
                                  {"diagnostics", diags}};
        out.stream() << j.dump() << '\n';
      } else {
        out.stream() << res.phonemes.ipa << '\n';
      }
    }
    line_no += chunk.size();
  }
  out.stream().flush();
  return kExitOk;
}

int cmd_annotate(const Options& o) {
  ShvaRules rules;
  rules.adjacent_shvas = !o.no_r1;
  rules.geminate = !o.no_r2;
  rules.clitic_prefix = !o.no_r3;

  Input in(o.input);
  Output out(o.output);
  std::vector<std::string> chunk;
  std::size_t line_no = 0;
  int status = kExitOk;
  while (in.read_chunk(chunk, kChunkLines)) {
    std::vector<std::string> rendered(chunk.size());
    std::vector<std::string> errors(chunk.size());
    parallel_for(chunk.size(), o.jobs, [&](std::size_t i) {
      if (chunk[i].empty()) return;
      try {
        const AnnotatedLine line = annotate_jsonl(chunk[i], line_no + i + 1, rules);
        rendered[i] = o.format == "jsonl" ? line.to_jsonl() : line.enhanced();
      } catch (const AnnotationError& e) {
        errors[i] = e.what();
      }
    });
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      if (!errors[i].empty()) {
        std::cerr << errors[i] << "\n";
        status = kExitError;
      }
      // Failed lines still produce an (empty) output line.
      out.stream() << rendered[i] << '\n';
    }
    line_no += chunk.size();
  }
  return status;
}

int cmd_review(const Options& o) {
  Input in(o.input);
  Output out(o.output);
  ReviewCounter counter;
  std::string line;
  while (std::getline(in.stream(), line)) counter.add_line(line);
  out.stream() << counter.to_tsv();
  return kExitOk;
}

int cmd_correct(const Options& o) {
  const CorrectionFile corrections = CorrectionFile::parse(read_file(o.corrections));
  Input in(o.input);
  Output out(o.output);
  std::size_t total = 0;
  std::string line;
  while (std::getline(in.stream(), line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const CorrectedLine c = apply_corrections(line, corrections);
    total += c.replacements;
    out.stream() << c.text << '\n';
  }
  std::cerr << "replacements: " << total << "\n";
  return kExitOk;
}

int cmd_evaluate(const Options& o) {
  std::vector<EvalPair> pairs;
  std::string label = o.label;
  if (!o.corpus.empty()) {
    if (!o.ref.empty() || !o.hyp.empty()) throw UsageError("--corpus excludes --ref/--hyp");
    const auto items = load_metadata(o.corpus);
    const Pipeline pipeline(make_pipeline_config(o));
    std::vector<std::string> hebrew;
    for (const auto& item : items) hebrew.push_back(item.hebrew);
    ChunkResult r = pipeline.run(hebrew);
    report_provider(r.provider_diagnostics, 0);
    for (std::size_t i = 0; i < items.size(); ++i) {
      pairs.push_back({items[i].id, items[i].ipa, r.lines[i].phonemes.ipa});
    }
    if (label.empty()) label = o.provider;
  } else {
    if (o.ref.empty() || o.hyp.empty()) throw UsageError("evaluate needs --ref and --hyp, or --corpus");
    const auto refs = read_lines(o.ref);
    const auto hyps = read_lines(o.hyp);
    if (refs.size() != hyps.size()) {
      std::cerr << "error: " << o.ref << " has " << refs.size() << " lines but " << o.hyp << " has " << hyps.size()
                << "\n";
      return kExitError;
    }
    for (std::size_t i = 0; i < refs.size(); ++i) pairs.push_back({std::to_string(i + 1), refs[i], hyps[i]});
    if (label.empty()) label = "hyp";
  }
  const EvalReport report = evaluate_corpus(pairs);
  if (o.json) {
    std::cout << report.to_json() << "\n";
  } else {
    std::cout << report.to_table(label);
  }
  return kExitOk;
}

int cmd_validate(const Options& o) {
  std::vector<CorpusError> errors;
  const auto items = parse_metadata_collect(read_file(o.path), o.path, errors);
  for (const auto& e : errors) std::cerr << e.what() << "\n";
  if (!errors.empty()) return kExitError;
  std::cout << o.path << ": " << items.size() << " items OK\n";
  return kExitOk;
}

int cmd_normalize(const Options& o) {
  Input in(o.input);
  Output out(o.output);
  std::string line;
  while (std::getline(in.stream(), line)) out.stream() << normalize(line) << '\n';
  return kExitOk;
}

int cmd_lexicon_check(const Options& o) {
  std::vector<LexiconError> errors;
  const Lexicon lex = Lexicon::parse_collect(read_file(o.path), o.path, errors);
  for (const auto& e : errors) std::cerr << e.what() << "\n";
  if (!errors.empty()) return kExitError;
  std::cout << o.path << ": " << lex.size() << " entries OK\n";
  return kExitOk;
}

int cmd_dump_rules(const Options&) {
  std::cout << RuleTable::builtin().dump_tsv();
  return kExitOk;
}

void add_pipeline_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--convention", o.convention, "Output symbols")
      ->check(CLI::IsMember({"broad", "narrow"}))
      ->capture_default_str();
  cmd->add_option("--stress", o.stress, "Stress mark before the syllable or before the vowel")
      ->check(CLI::IsMember({"syllable", "vowel"}))
      ->capture_default_str();
  cmd->add_option("--provider", o.provider, "Diacritization provider")
      ->check(CLI::IsMember({"passthrough", "defaults", "remote"}))
      ->capture_default_str();
  cmd->add_option("--lexicon", o.lexicon, "Lexicon TSV replacing the built-in one");
  cmd->add_option("--diacritizer-url", o.diacritizer_url,
                  "Remote diacritizer endpoint (default: $" + std::string(kDiacritizerUrlEnv) + ")");
  cmd->add_option("--diacritizer-timeout-ms", o.diacritizer_timeout_ms, "Remote request timeout")
      ->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
}

void add_io_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("-i,--input", o.input, "Input file, - for stdin")->capture_default_str();
  cmd->add_option("-o,--output", o.output, "Output file, - for stdout")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hebrew grapheme-to-phoneme conversion"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hebg2p 0.1.0");

  Options o;

  auto* phonemize = app.add_subcommand("phonemize", "Convert Hebrew text to IPA, one line per input line");
  add_pipeline_flags(phonemize, o);
  add_io_flags(phonemize, o);
  phonemize->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "jsonl"}))
      ->capture_default_str();

  auto* annotate = app.add_subcommand("annotate", "Apply morphological hints from JSONL to produce enhanced text");
  add_io_flags(annotate, o);
  annotate->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "jsonl"}))
      ->capture_default_str();
  annotate->add_flag("--no-r1", o.no_r1, "Disable the adjacent-shva rule");
  annotate->add_flag("--no-r2", o.no_r2, "Disable the geminate rule");
  annotate->add_flag("--no-r3", o.no_r3, "Disable the clitic-prefix rule");
  annotate->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();

  auto* review = app.add_subcommand("review", "Word types by frequency, as TSV");
  add_io_flags(review, o);

  auto* correct = app.add_subcommand("correct", "Replace word types from a corrections TSV");
  add_io_flags(correct, o);
  correct->add_option("--corrections", o.corrections, "surface<TAB>corrected file")->required();

  auto* evaluate = app.add_subcommand("evaluate", "WER, WER without stress, and CER");
  add_pipeline_flags(evaluate, o);
  evaluate->add_option("--ref", o.ref, "Reference IPA, one item per line");
  evaluate->add_option("--hyp", o.hyp, "Hypothesis IPA, line-aligned with --ref");
  evaluate->add_option("--corpus", o.corpus, "id|hebrew|ipa metadata to phonemize and score");
  evaluate->add_option("--label", o.label, "Row label in the report");
  evaluate->add_flag("--json", o.json, "Emit JSON instead of a table");

  auto* validate = app.add_subcommand("validate", "Check id|hebrew|ipa metadata");
  validate->add_option("path", o.path, "Metadata file")->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "Canonicalize Hebrew text");
  add_io_flags(normalize_cmd, o);

  auto* lexicon = app.add_subcommand("lexicon", "Lexicon tools");
  lexicon->require_subcommand(1);
  auto* lexicon_check = lexicon->add_subcommand("check", "Validate a lexicon TSV");
  lexicon_check->add_option("path", o.path, "Lexicon file")->required();

  auto* dump_rules = app.add_subcommand("dump-rules", "Print the transducer rule table as TSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*phonemize) return cmd_phonemize(o);
    if (*annotate) return cmd_annotate(o);
    if (*review) return cmd_review(o);
    if (*correct) return cmd_correct(o);
    if (*evaluate) return cmd_evaluate(o);
    if (*validate) return cmd_validate(o);
    if (*normalize_cmd) return cmd_normalize(o);
    if (*lexicon_check) return cmd_lexicon_check(o);
    if (*dump_rules) return cmd_dump_rules(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
