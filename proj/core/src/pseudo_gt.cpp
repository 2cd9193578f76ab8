#include "hebg2p/pseudo_gt.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hebg2p/g2p.hpp"
#include "json.hpp"

namespace hebg2p {

namespace {

bool is_bgdkpt(char32_t c) {
  switch (c) {
    case cp::kBet: case cp::kGimel: case cp::kDalet: case cp::kKaf: case cp::kFinalKaf:
    case cp::kPe: case cp::kFinalPe: case cp::kTav:
      return true;
    default:
      return false;
  }
}

// Final forms compare equal to their medial letters.
char32_t base_letter(char32_t c) {
  switch (c) {
    case cp::kFinalKaf: return cp::kKaf;
    case cp::kFinalMem: return cp::kMem;
    case cp::kFinalNun: return cp::kNun;
    case cp::kFinalPe: return cp::kPe;
    case cp::kFinalTsadi: return cp::kTsadi;
    default: return c;
  }
}

bool has_full_vowel(const GraphemeCluster& c) {
  const auto v = c.vowel();
  return v && *v != MarkKind::Shva;
}

bool is_dagesh_forte(const std::vector<GraphemeCluster>& cs, std::size_t i) {
  const GraphemeCluster& c = cs[i];
  if (!c.has(MarkKind::Dagesh)) return false;
  if (!is_bgdkpt(c.letter)) return true;
  return i > 0 && has_full_vowel(cs[i - 1]);
}

bool silent_shva(const GraphemeCluster& c) { return c.has(MarkKind::Shva) && !c.has(MarkKind::VocalShva); }

std::optional<std::size_t> resolve_stress(const std::vector<Phone>& phones, const std::vector<std::size_t>& candidates,
                                          std::optional<std::size_t> marked) {
  if (candidates.empty()) return std::nullopt;
  if (marked) {
    for (std::size_t idx : candidates) {
      if (phones[idx].source >= static_cast<int>(*marked)) return idx;
    }
  }
  return candidates.back();
}

std::string normalize_single_word(std::string_view text, Word& out) {
  const std::string norm = normalize(text);
  const Document doc = tokenize(norm);
  if (doc.segments.size() != 1 || doc.segments.front().kind != SegmentKind::Word) {
    throw std::invalid_argument("not a single Hebrew word: '" + std::string(text) + "'");
  }
  out = parse_word(norm);
  return norm;
}

}  // namespace

Word apply_shva_rules(const Word& word, const ShvaRules& rules) {
  Word out = word;
  auto& cs = out.clusters;
  const std::size_t n = cs.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!silent_shva(cs[i])) continue;
    const bool not_final = i + 1 < n;
    bool vocal = false;
    if (rules.adjacent_shvas && i >= 2 && not_final && silent_shva(cs[i - 1])) vocal = true;
    if (rules.geminate && not_final) {
      if (is_dagesh_forte(cs, i)) vocal = true;
      if (i > 0 && base_letter(cs[i - 1].letter) == base_letter(cs[i].letter)) vocal = true;
      if (base_letter(cs[i + 1].letter) == base_letter(cs[i].letter)) vocal = true;
    }
    if (rules.clitic_prefix && i == 0 && n > 1 && cs[1].has(MarkKind::Shva)) {
      const char32_t l = cs[0].letter;
      if (l == cp::kBet || l == cp::kKaf || l == cp::kLamed || l == cp::kVav) vocal = true;
    }
    if (vocal) cs[i].marks.insert(MarkKind::VocalShva);
  }
  return out;
}

std::string_view to_string(AnnotationErrorKind kind) {
  switch (kind) {
    case AnnotationErrorKind::SyllableOutOfRange: return "SyllableOutOfRange";
    case AnnotationErrorKind::PrefixOutOfRange: return "PrefixOutOfRange";
    case AnnotationErrorKind::StressConflict: return "StressConflict";
    case AnnotationErrorKind::InvalidRecord: return "InvalidRecord";
    case AnnotationErrorKind::InvalidCorrection: return "InvalidCorrection";
  }
  return "?";
}

AnnotationError::AnnotationError(AnnotationErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                         std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      line_(line) {}

Word mark_stress(const AnnotationRecord& record) {
  const Word& word = record.token;
  if (!record.stress_syllable) return word;
  const std::size_t k = *record.stress_syllable;

  std::vector<Phone> phones;
  try {
    phones = transduce(word);
  } catch (const UnmappableCluster& e) {
    throw AnnotationError(AnnotationErrorKind::InvalidRecord, 0, e.what());
  }
  const auto candidates = stressable_vowels(phones);
  if (k == 0 || k > candidates.size()) {
    throw AnnotationError(AnnotationErrorKind::SyllableOutOfRange, 0,
                          "syllable " + std::to_string(k) + " of a word with " +
                              std::to_string(candidates.size()) + " vowels");
  }
  const std::size_t target = candidates[candidates.size() - k];

  if (const auto marked = word.stressed_cluster()) {
    if (resolve_stress(phones, candidates, marked) != target) {
      throw AnnotationError(AnnotationErrorKind::StressConflict, 0, "word is already stressed on another vowel");
    }
    return word;
  }
  if (k == 1) return word;
  Word out = word;
  out.clusters[static_cast<std::size_t>(phones[target].source)].marks.insert(MarkKind::Stress);
  return out;
}

Word mark_prefixes(const AnnotationRecord& record) {
  const std::size_t n = record.token.size();
  if (record.prefix_len >= n && !(record.prefix_len == 0 && n == 0)) {
    throw AnnotationError(AnnotationErrorKind::PrefixOutOfRange, 0,
                          "prefix of " + std::to_string(record.prefix_len) + " letters in a " + std::to_string(n) +
                              "-letter word");
  }
  Word out = record.token;
  if (record.prefix_len > 0) out.clusters[record.prefix_len - 1].prefix_boundary_after = true;
  return out;
}

Word annotate(const AnnotationRecord& record, const ShvaRules& rules) {
  AnnotationRecord r = record;
  r.token = mark_prefixes(r);
  r.token = apply_shva_rules(r.token, rules);
  return mark_stress(r);
}

std::string AnnotatedLine::enhanced() const {
  std::string out;
  for (const auto& w : tokens) {
    if (!out.empty()) out += ' ';
    out += serialize(w);
  }
  return out;
}

std::string AnnotatedLine::to_jsonl() const {
  nlohmann::json j;
  j["text"] = text;
  j["enhanced"] = enhanced();
  auto& arr = j["tokens"] = nlohmann::json::array();
  for (const auto& w : tokens) arr.push_back(serialize(w));
  return j.dump();
}

AnnotatedLine annotate_jsonl(std::string_view json_line, std::size_t line_no, const ShvaRules& rules) {
  const auto invalid = [&](const std::string& what) {
    return AnnotationError(AnnotationErrorKind::InvalidRecord, line_no, what);
  };
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_line);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid(e.what());
  }
  if (!j.is_object() || !j.contains("tokens") || !j["tokens"].is_array()) {
    throw invalid("expected an object with a \"tokens\" array");
  }

  AnnotatedLine out;
  if (j.contains("text")) {
    if (!j["text"].is_string()) throw invalid("\"text\" must be a string");
    out.text = j["text"].get<std::string>();
  }
  for (const auto& t : j["tokens"]) {
    if (!t.is_object() || !t.contains("voc") || !t["voc"].is_string()) {
      throw invalid("every token needs a string \"voc\"");
    }
    AnnotationRecord record;
    try {
      normalize_single_word(t["voc"].get<std::string>(), record.token);
    } catch (const std::exception& e) {
      throw invalid(e.what());
    }
    if (t.contains("prefix_len") && !t["prefix_len"].is_null()) {
      if (!t["prefix_len"].is_number_unsigned()) throw invalid("\"prefix_len\" must be a non-negative integer");
      record.prefix_len = t["prefix_len"].get<std::size_t>();
    }
    if (t.contains("stress_syllable") && !t["stress_syllable"].is_null()) {
      if (!t["stress_syllable"].is_number_unsigned()) {
        throw invalid("\"stress_syllable\" must be a positive integer");
      }
      record.stress_syllable = t["stress_syllable"].get<std::size_t>();
    }
    try {
      out.tokens.push_back(annotate(record, rules));
    } catch (const AnnotationError& e) {
      throw AnnotationError(e.kind(), line_no, e.what());
    }
  }
  return out;
}

void ReviewCounter::add_line(std::string_view text) {
  for (const auto& seg : tokenize(normalize(text)).segments) {
    if (seg.kind == SegmentKind::Word) ++counts_[seg.text];
  }
}

std::vector<ReviewCounter::Row> ReviewCounter::rows() const {
  std::vector<Row> rows;
  rows.reserve(counts_.size());
  for (const auto& [surface, count] : counts_) rows.push_back({surface, count});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.surface < b.surface;
  });
  return rows;
}

std::string ReviewCounter::to_tsv() const {
  std::string out;
  for (const auto& r : rows()) {
    out += r.surface;
    out += '\t';
    out += std::to_string(r.count);
    out += '\n';
  }
  return out;
}

std::string build_review_list(const std::vector<std::string>& lines) {
  ReviewCounter counter;
  for (const auto& l : lines) counter.add_line(l);
  return counter.to_tsv();
}

CorrectionFile CorrectionFile::parse(std::string_view content) {
  CorrectionFile file;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto bad = [&](const std::string& what) {
      return AnnotationError(AnnotationErrorKind::InvalidCorrection, line_no, what);
    };
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      throw bad("expected `surface<TAB>corrected`");
    }
    Word ignored;
    std::string surface;
    std::string corrected;
    try {
      surface = normalize_single_word(line.substr(0, tab), ignored);
      corrected = normalize_single_word(line.substr(tab + 1), ignored);
    } catch (const std::exception& e) {
      throw bad(e.what());
    }
    if (!file.map_.emplace(surface, corrected).second) throw bad("duplicate surface '" + surface + "'");
  }
  return file;
}

CorrectionFile CorrectionFile::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AnnotationError(AnnotationErrorKind::InvalidCorrection, 0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const std::string* CorrectionFile::find(std::string_view surface) const {
  auto it = map_.find(std::string(surface));
  return it == map_.end() ? nullptr : &it->second;
}

CorrectedLine apply_corrections(std::string_view line, const CorrectionFile& corrections) {
  CorrectedLine out;
  for (const auto& seg : tokenize(normalize(line)).segments) {
    const std::string* fix = seg.kind == SegmentKind::Word ? corrections.find(seg.text) : nullptr;
    if (fix) {
      out.text += *fix;
      ++out.replacements;
    } else {
      out.text += seg.text;
    }
  }
  return out;
}

}  // namespace hebg2p
