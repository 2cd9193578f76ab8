#include "hebg2p/hebrew_text.hpp"

#include <algorithm>
#include <array>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "hebg2p/utf8.hpp"

namespace hebg2p {

namespace {

struct MarkInfo {
  MarkKind kind;
  char32_t codepoint;
  std::string_view name;
};

// Indexed by MarkKind.
constexpr std::array<MarkInfo, kMarkKindCount> kMarks{{
    {MarkKind::Dagesh, 0x05BC, "DAGESH"},
    {MarkKind::ShinDot, 0x05C1, "SHIN_DOT"},
    {MarkKind::SinDot, 0x05C2, "SIN_DOT"},
    {MarkKind::Shva, 0x05B0, "SHVA"},
    {MarkKind::HatafSegol, 0x05B1, "HATAF_SEGOL"},
    {MarkKind::HatafPatah, 0x05B2, "HATAF_PATAH"},
    {MarkKind::HatafQamats, 0x05B3, "HATAF_QAMATS"},
    {MarkKind::Hiriq, 0x05B4, "HIRIQ"},
    {MarkKind::Tsere, 0x05B5, "TSERE"},
    {MarkKind::Segol, 0x05B6, "SEGOL"},
    {MarkKind::Patah, 0x05B7, "PATAH"},
    {MarkKind::Qamats, 0x05B8, "QAMATS"},
    {MarkKind::Holam, 0x05B9, "HOLAM"},
    {MarkKind::HolamHaserForVav, 0x05BA, "HOLAM_HASER_FOR_VAV"},
    {MarkKind::Qubuts, 0x05BB, "QUBUTS"},
    {MarkKind::Stress, 0x05AB, "STRESS"},
    {MarkKind::VocalShva, 0x05BD, "VOCAL_SHVA"},
    {MarkKind::PrefixSep, 0x05C0, "PREFIX_SEP"},
}};

constexpr char32_t kPrefixSep = 0x05C0;

bool is_stripped(char32_t c) {
  if (c >= 0x0591 && c <= 0x05AF) return c != 0x05AB;
  return c == cp::kRafe || c == 0x05C4 || c == 0x05C5;
}

bool is_presentation_form(char32_t c) { return c >= 0xFB1D && c <= 0xFB4F; }

bool in_letter_tail(char32_t c) {
  return is_attached_mark(c) || c == kPrefixSep || c == cp::kGeresh;
}

int tail_rank(char32_t c) {
  if (c == cp::kGeresh) return 0;
  if (c == kPrefixSep) return 100;
  if (auto k = mark_from_codepoint(c)) return 1 + static_cast<int>(*k);
  return 50;
}

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || n == nullptr) throw std::runtime_error("ICU NFC normalizer unavailable");
  return *n;
}

const icu::Normalizer2& nfkd() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFKDInstance(status);
  if (U_FAILURE(status) || n == nullptr) throw std::runtime_error("ICU NFKD normalizer unavailable");
  return *n;
}

std::u32string to_u32(const icu::UnicodeString& s) {
  std::u32string out;
  out.reserve(static_cast<std::size_t>(s.length()));
  for (int32_t i = 0; i < s.length();) {
    UChar32 c = s.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

icu::UnicodeString to_icu(std::u32string_view s) {
  return icu::UnicodeString::fromUTF32(reinterpret_cast<const UChar32*>(s.data()),
                                       static_cast<int32_t>(s.size()));
}

}  // namespace

char32_t codepoint(MarkKind kind) { return kMarks[static_cast<std::size_t>(kind)].codepoint; }

std::string_view mark_name(MarkKind kind) { return kMarks[static_cast<std::size_t>(kind)].name; }

std::optional<MarkKind> mark_from_codepoint(char32_t c) {
  for (const auto& m : kMarks) {
    if (m.codepoint == c) return m.kind;
  }
  return std::nullopt;
}

bool is_vowel_mark(MarkKind kind) {
  return kind >= MarkKind::Shva && kind <= MarkKind::Qubuts;
}

bool is_enhanced_mark(MarkKind kind) {
  return kind == MarkKind::Stress || kind == MarkKind::VocalShva || kind == MarkKind::PrefixSep;
}

bool is_hebrew_letter(char32_t c) { return c >= cp::kAlef && c <= cp::kTav; }

bool is_attached_mark(char32_t c) {
  if (c == kPrefixSep) return false;
  return mark_from_codepoint(c).has_value();
}

std::optional<MarkKind> MarkSet::vowel() const {
  for (auto k = static_cast<unsigned>(MarkKind::Shva); k <= static_cast<unsigned>(MarkKind::Qubuts);
       ++k) {
    if (contains(static_cast<MarkKind>(k))) return static_cast<MarkKind>(k);
  }
  return std::nullopt;
}

std::vector<MarkKind> MarkSet::ordered() const {
  std::vector<MarkKind> out;
  for (unsigned k = 0; k < kMarkKindCount; ++k) {
    if (contains(static_cast<MarkKind>(k))) out.push_back(static_cast<MarkKind>(k));
  }
  return out;
}

std::optional<std::size_t> Word::stressed_cluster() const {
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (clusters[i].has(MarkKind::Stress)) return i;
  }
  return std::nullopt;
}

std::size_t Word::stem_begin() const {
  std::size_t begin = 0;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (clusters[i].prefix_boundary_after) begin = i + 1;
  }
  return begin;
}

std::size_t Document::word_count() const {
  return static_cast<std::size_t>(std::count_if(
      segments.begin(), segments.end(), [](const Segment& s) { return s.kind == SegmentKind::Word; }));
}

std::string Document::text() const {
  std::string out;
  for (const auto& s : segments) out += s.text;
  return out;
}

std::string_view to_string(WordErrorKind kind) {
  switch (kind) {
    case WordErrorKind::MalformedWord: return "MalformedWord";
    case WordErrorKind::DuplicateMark: return "DuplicateMark";
    case WordErrorKind::DuplicateStress: return "DuplicateStress";
  }
  return "?";
}

WordError::WordError(WordErrorKind kind, std::size_t offset, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what + " (byte " +
                         std::to_string(offset) + ")"),
      kind_(kind),
      offset_(offset) {}

std::string normalize(std::string_view text) {
  if (text.empty()) return {};
  std::u32string folded;
  folded.reserve(text.size());
  for (char32_t c : utf8::decode(text)) {
    if (is_presentation_form(c)) {
      UErrorCode status = U_ZERO_ERROR;
      icu::UnicodeString one(static_cast<UChar32>(c));
      icu::UnicodeString decomposed = nfkd().normalize(one, status);
      if (U_FAILURE(status)) throw std::runtime_error("ICU NFKD failed");
      for (char32_t d : to_u32(decomposed)) folded.push_back(d);
    } else {
      folded.push_back(c);
    }
  }

  std::u32string stripped;
  stripped.reserve(folded.size());
  for (char32_t c : folded) {
    if (is_stripped(c)) continue;
    stripped.push_back(c == cp::kQamatsQatan ? codepoint(MarkKind::Qamats) : c);
  }

  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString composed = nfc().normalize(to_icu(stripped), status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC failed");
  std::u32string out = to_u32(composed);

  for (std::size_t i = 0; i < out.size();) {
    if (!is_hebrew_letter(out[i])) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < out.size() && in_letter_tail(out[j])) ++j;
    std::stable_sort(out.begin() + static_cast<std::ptrdiff_t>(i + 1),
                     out.begin() + static_cast<std::ptrdiff_t>(j),
                     [](char32_t a, char32_t b) { return tail_rank(a) < tail_rank(b); });
    i = j;
  }
  return utf8::encode(out);
}

bool is_normalized(std::string_view text) { return normalize(text) == text; }

Document tokenize(std::string_view text) {
  Document doc;
  std::size_t pos = 0;
  auto peek = [&](std::size_t at) -> std::pair<char32_t, std::size_t> {
    std::size_t p = at;
    char32_t c = utf8::next(text, p);
    return {c, p};
  };
  auto starts_word = [](char32_t c) { return is_hebrew_letter(c) || is_attached_mark(c); };

  while (pos < text.size()) {
    const std::size_t begin = pos;
    auto [c, after] = peek(pos);
    if (starts_word(c)) {
      pos = after;
      while (pos < text.size()) {
        auto [c2, after2] = peek(pos);
        if (is_hebrew_letter(c2) || is_attached_mark(c2) || c2 == cp::kGeresh) {
          pos = after2;
        } else if (c2 == kPrefixSep && after2 < text.size() && is_hebrew_letter(peek(after2).first)) {
          pos = after2;
        } else {
          break;
        }
      }
      doc.segments.push_back(
          {SegmentKind::Word, std::string(text.substr(begin, pos - begin)), {begin, pos}});
    } else {
      pos = after;
      while (pos < text.size()) {
        auto [c2, after2] = peek(pos);
        if (starts_word(c2)) break;
        pos = after2;
      }
      doc.segments.push_back(
          {SegmentKind::Passthrough, std::string(text.substr(begin, pos - begin)), {begin, pos}});
    }
  }
  return doc;
}

Word parse_word(std::string_view run, std::size_t base_offset) {
  Word word;
  word.raw_span = {base_offset, base_offset + run.size()};
  std::vector<std::size_t> cluster_offsets;
  bool stress_seen = false;

  std::size_t pos = 0;
  while (pos < run.size()) {
    const std::size_t at = pos;
    const char32_t c = utf8::next(run, pos);
    GraphemeCluster* open = word.clusters.empty() ? nullptr : &word.clusters.back();

    if (is_hebrew_letter(c)) {
      word.clusters.push_back(GraphemeCluster{c, false, {}, false});
      cluster_offsets.push_back(at);
      continue;
    }
    if (c == cp::kGeresh) {
      if (open == nullptr) throw WordError(WordErrorKind::MalformedWord, at, "geresh without a base letter");
      if (open->geresh) throw WordError(WordErrorKind::DuplicateMark, at, "repeated geresh");
      open->geresh = true;
      continue;
    }
    if (c == kPrefixSep) {
      if (open == nullptr) throw WordError(WordErrorKind::MalformedWord, at, "prefix separator without a base letter");
      if (open->prefix_boundary_after) throw WordError(WordErrorKind::DuplicateMark, at, "repeated prefix separator");
      open->prefix_boundary_after = true;
      continue;
    }
    const auto mark = mark_from_codepoint(c);
    if (!mark) throw WordError(WordErrorKind::MalformedWord, at, "unexpected codepoint in word");
    if (open == nullptr) throw WordError(WordErrorKind::MalformedWord, at, "combining mark without a base letter");

    const MarkKind k = *mark;
    if (k == MarkKind::Stress) {
      if (stress_seen) throw WordError(WordErrorKind::DuplicateStress, at, "second stress mark in word");
      stress_seen = true;
    } else if (open->has(k)) {
      throw WordError(WordErrorKind::DuplicateMark, at, "repeated " + std::string(mark_name(k)));
    }
    if (is_vowel_mark(k) && open->vowel()) {
      throw WordError(WordErrorKind::DuplicateMark, at,
                      "second vowel " + std::string(mark_name(k)) + " on one letter");
    }
    if (k == MarkKind::ShinDot || k == MarkKind::SinDot) {
      if (open->letter != cp::kShin) throw WordError(WordErrorKind::MalformedWord, at, "shin/sin dot on a letter other than shin");
      if (open->has(MarkKind::ShinDot) || open->has(MarkKind::SinDot)) {
        throw WordError(WordErrorKind::DuplicateMark, at, "both shin dot and sin dot");
      }
    }
    open->marks.insert(k);
  }

  for (std::size_t i = 0; i < word.clusters.size(); ++i) {
    const auto& cl = word.clusters[i];
    if (cl.has(MarkKind::VocalShva) && !cl.has(MarkKind::Shva)) {
      throw WordError(WordErrorKind::MalformedWord, cluster_offsets[i], "vocal-shva mark without shva");
    }
  }
  return word;
}

std::string serialize(const Word& word) {
  std::string out;
  for (const auto& cl : word.clusters) {
    utf8::append(out, cl.letter);
    if (cl.geresh) utf8::append(out, cp::kGeresh);
    for (MarkKind k : cl.marks.ordered()) {
      if (k == MarkKind::PrefixSep) continue;
      utf8::append(out, codepoint(k));
    }
    if (cl.prefix_boundary_after) utf8::append(out, kPrefixSep);
  }
  return out;
}

}  // namespace hebg2p
