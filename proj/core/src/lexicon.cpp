#include "hebg2p/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "builtin_data.hpp"
#include "hebg2p/phoneme.hpp"

namespace hebg2p {

namespace {

std::vector<std::string_view> split_lines(std::string_view content, bool& trailing_newline) {
  std::vector<std::string_view> lines;
  trailing_newline = content.empty() || content.back() == '\n';
  std::size_t begin = 0;
  while (begin < content.size()) {
    const std::size_t nl = content.find('\n', begin);
    if (nl == std::string_view::npos) {
      lines.push_back(content.substr(begin));
      break;
    }
    lines.push_back(content.substr(begin, nl - begin));
    begin = nl + 1;
  }
  return lines;
}

bool is_raw_line(std::string_view line) { return line.empty() || line.front() == '#'; }

}  // namespace

std::string_view to_string(LexiconErrorKind kind) {
  switch (kind) {
    case LexiconErrorKind::Io: return "IoError";
    case LexiconErrorKind::ParseError: return "ParseError";
    case LexiconErrorKind::InvalidKey: return "InvalidKey";
    case LexiconErrorKind::InvalidIpa: return "InvalidIpa";
    case LexiconErrorKind::DuplicateKey: return "DuplicateKey";
  }
  return "?";
}

LexiconError::LexiconError(LexiconErrorKind kind, std::string source, std::size_t line, const std::string& detail)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      line_(line) {}

void validate_entry(std::string_view key, std::string_view ipa, const std::string& source, std::size_t line) {
  if (key.empty()) throw LexiconError(LexiconErrorKind::InvalidKey, source, line, "empty key");
  if (!is_normalized(key)) throw LexiconError(LexiconErrorKind::InvalidKey, source, line, "key is not normalized");
  const Document doc = tokenize(key);
  if (doc.segments.size() != 1 || doc.segments.front().kind != SegmentKind::Word) {
    throw LexiconError(LexiconErrorKind::InvalidKey, source, line, "key is not a single Hebrew word");
  }
  Word word;
  try {
    word = parse_word(key);
  } catch (const WordError& e) {
    throw LexiconError(LexiconErrorKind::InvalidKey, source, line, e.what());
  }
  for (const auto& c : word.clusters) {
    if (c.has(MarkKind::Stress) || c.prefix_boundary_after) {
      throw LexiconError(LexiconErrorKind::InvalidKey, source, line, "key carries a stress mark or prefix separator");
    }
  }

  if (ipa.find(' ') != std::string_view::npos) {
    throw LexiconError(LexiconErrorKind::InvalidIpa, source, line, "value must be a single word");
  }
  try {
    const IpaWord parsed = parse_ipa_word(ipa, Narrowness::Broad);
    if (parsed.stressed) {
      const std::size_t mark = ipa.find(kStressMark);
      const std::string_view after = ipa.substr(mark + kStressMark.size(), 1);
      if (!is_vowel_symbol(after)) {
        throw LexiconError(LexiconErrorKind::InvalidIpa, source, line,
                           "stress mark must directly precede the stressed vowel");
      }
    }
  } catch (const IpaError& e) {
    throw LexiconError(LexiconErrorKind::InvalidIpa, source, line, e.what());
  }
}

Lexicon Lexicon::parse_collect(std::string_view content, std::string source, std::vector<LexiconError>& errors) {
  Lexicon lex;
  lex.source_ = std::move(source);
  const auto lines = split_lines(content, lex.trailing_newline_);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = lines[i];
    if (is_raw_line(line)) {
      lex.lines_.push_back({std::string(line), -1});
      continue;
    }
    try {
      const std::size_t tab = line.find('\t');
      if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
        throw LexiconError(LexiconErrorKind::ParseError, lex.source_, line_no, "expected exactly one tab");
      }
      const std::string_view key = line.substr(0, tab);
      const std::string_view ipa = line.substr(tab + 1);
      if (ipa.empty()) throw LexiconError(LexiconErrorKind::ParseError, lex.source_, line_no, "empty value");
      validate_entry(key, ipa, lex.source_, line_no);
      if (auto it = lex.index_.find(std::string(key)); it != lex.index_.end()) {
        throw LexiconError(LexiconErrorKind::DuplicateKey, lex.source_, line_no,
                           "first defined on line " + std::to_string(lex.entries_[it->second].line));
      }
      lex.index_.emplace(std::string(key), lex.entries_.size());
      lex.lines_.push_back({{}, static_cast<std::ptrdiff_t>(lex.entries_.size())});
      lex.entries_.push_back({std::string(key), std::string(ipa), line_no});
    } catch (const LexiconError& e) {
      errors.push_back(e);
    }
  }
  return lex;
}

Lexicon Lexicon::parse(std::string_view content, std::string source) {
  std::vector<LexiconError> errors;
  Lexicon lex = parse_collect(content, std::move(source), errors);
  if (!errors.empty()) throw errors.front();
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError(LexiconErrorKind::Io, path.string(), 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon lex = parse(builtin::lexicon_tsv(), "<builtin>");
  return lex;
}

std::string Lexicon::serialize() const {
  std::string out;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    const auto& l = lines_[i];
    if (l.entry >= 0) {
      const auto& e = entries_[static_cast<std::size_t>(l.entry)];
      out += e.key;
      out += '\t';
      out += e.ipa;
    } else {
      out += l.raw;
    }
    if (i + 1 < lines_.size() || trailing_newline_) out += '\n';
  }
  return out;
}

void Lexicon::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LexiconError(LexiconErrorKind::Io, path.string(), 0, "cannot write file");
  out << serialize();
}

const LexiconEntry* Lexicon::find(std::string_view key) const {
  auto it = index_.find(std::string(key));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

void Lexicon::add(std::string key, std::string ipa) {
  const std::size_t line_no = lines_.size() + 1;
  validate_entry(key, ipa, source_, line_no);
  if (index_.count(key) != 0) throw LexiconError(LexiconErrorKind::DuplicateKey, source_, line_no, key);
  index_.emplace(key, entries_.size());
  lines_.push_back({{}, static_cast<std::ptrdiff_t>(entries_.size())});
  entries_.push_back({std::move(key), std::move(ipa), line_no});
  trailing_newline_ = true;
}

std::string lexicon_key(const Word& word, std::size_t begin, std::size_t end) {
  Word stem;
  for (std::size_t i = begin; i < end && i < word.clusters.size(); ++i) {
    GraphemeCluster c = word.clusters[i];
    c.marks.erase(MarkKind::Stress);
    c.prefix_boundary_after = false;
    stem.clusters.push_back(c);
  }
  return serialize(stem);
}

std::optional<LexiconEntry> lookup_stem(const Lexicon& lexicon, const Word& word) {
  const std::size_t begin = word.stem_begin();
  if (begin >= word.size()) return std::nullopt;
  if (const auto* e = lexicon.find(lexicon_key(word, begin, word.size()))) return *e;
  // Shva annotation added by the defaults pass should not hide an entry
  // stored without it.
  Word plain = word;
  bool changed = false;
  for (std::size_t i = begin; i < plain.size(); ++i) {
    if (plain.clusters[i].has(MarkKind::VocalShva)) {
      plain.clusters[i].marks.erase(MarkKind::VocalShva);
      changed = true;
    }
  }
  if (changed) {
    if (const auto* e = lexicon.find(lexicon_key(plain, begin, plain.size()))) return *e;
  }
  return std::nullopt;
}

}  // namespace hebg2p
