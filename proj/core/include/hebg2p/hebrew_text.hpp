#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hebg2p {

// Declaration order is the canonical in-cluster order used by normalize()
// and serialize(): dagesh, shin/sin dot, vowel, then the enhanced marks.
enum class MarkKind : std::uint8_t {
  Dagesh,
  ShinDot,
  SinDot,
  Shva,
  HatafSegol,
  HatafPatah,
  HatafQamats,
  Hiriq,
  Tsere,
  Segol,
  Patah,
  Qamats,
  Holam,
  HolamHaserForVav,
  Qubuts,
  Stress,
  VocalShva,
  PrefixSep,
};

inline constexpr std::size_t kMarkKindCount = 18;

namespace cp {
inline constexpr char32_t kAlef = 0x05D0;
inline constexpr char32_t kBet = 0x05D1;
inline constexpr char32_t kGimel = 0x05D2;
inline constexpr char32_t kDalet = 0x05D3;
inline constexpr char32_t kHe = 0x05D4;
inline constexpr char32_t kVav = 0x05D5;
inline constexpr char32_t kZayin = 0x05D6;
inline constexpr char32_t kHet = 0x05D7;
inline constexpr char32_t kTet = 0x05D8;
inline constexpr char32_t kYod = 0x05D9;
inline constexpr char32_t kFinalKaf = 0x05DA;
inline constexpr char32_t kKaf = 0x05DB;
inline constexpr char32_t kLamed = 0x05DC;
inline constexpr char32_t kFinalMem = 0x05DD;
inline constexpr char32_t kMem = 0x05DE;
inline constexpr char32_t kFinalNun = 0x05DF;
inline constexpr char32_t kNun = 0x05E0;
inline constexpr char32_t kSamekh = 0x05E1;
inline constexpr char32_t kAyin = 0x05E2;
inline constexpr char32_t kFinalPe = 0x05E3;
inline constexpr char32_t kPe = 0x05E4;
inline constexpr char32_t kFinalTsadi = 0x05E5;
inline constexpr char32_t kTsadi = 0x05E6;
inline constexpr char32_t kQof = 0x05E7;
inline constexpr char32_t kResh = 0x05E8;
inline constexpr char32_t kShin = 0x05E9;
inline constexpr char32_t kTav = 0x05EA;

inline constexpr char32_t kGeresh = 0x05F3;
inline constexpr char32_t kGershayim = 0x05F4;
inline constexpr char32_t kMaqaf = 0x05BE;
inline constexpr char32_t kRafe = 0x05BF;
inline constexpr char32_t kQamatsQatan = 0x05C7;
}  // namespace cp

char32_t codepoint(MarkKind kind);
std::optional<MarkKind> mark_from_codepoint(char32_t c);
std::string_view mark_name(MarkKind kind);

// SHVA, the three hatafs, hiriq .. qubuts.
bool is_vowel_mark(MarkKind kind);
// STRESS, VOCAL_SHVA, PREFIX_SEP.
bool is_enhanced_mark(MarkKind kind);

// One of the 27 letterforms U+05D0..U+05EA.
bool is_hebrew_letter(char32_t c);
// A codepoint that attaches to the preceding letter inside a word
// (standard points plus STRESS and VOCAL_SHVA; excludes PREFIX_SEP and geresh).
bool is_attached_mark(char32_t c);

class MarkSet {
 public:
  constexpr MarkSet() = default;

  bool contains(MarkKind k) const { return (bits_ >> static_cast<unsigned>(k)) & 1U; }
  void insert(MarkKind k) { bits_ |= 1U << static_cast<unsigned>(k); }
  void erase(MarkKind k) { bits_ &= ~(1U << static_cast<unsigned>(k)); }
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }

  // The vowel-class mark, if any.
  std::optional<MarkKind> vowel() const;

  // Marks in canonical order.
  std::vector<MarkKind> ordered() const;

  bool operator==(const MarkSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

struct GraphemeCluster {
  char32_t letter = 0;
  bool geresh = false;
  MarkSet marks;
  bool prefix_boundary_after = false;

  bool has(MarkKind k) const { return marks.contains(k); }
  std::optional<MarkKind> vowel() const { return marks.vowel(); }

  bool operator==(const GraphemeCluster&) const = default;
};

struct ByteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const ByteSpan&) const = default;
};

struct Word {
  std::vector<GraphemeCluster> clusters;
  ByteSpan raw_span;

  bool empty() const { return clusters.empty(); }
  std::size_t size() const { return clusters.size(); }

  // Index of the cluster carrying STRESS, if any.
  std::optional<std::size_t> stressed_cluster() const;
  // First cluster after the last prefix boundary (0 when there is none).
  std::size_t stem_begin() const;

  // Raw spans are source metadata and do not take part in equality.
  bool operator==(const Word& other) const { return clusters == other.clusters; }
};

enum class SegmentKind { Word, Passthrough };

struct Segment {
  SegmentKind kind = SegmentKind::Passthrough;
  std::string text;
  ByteSpan span;
};

struct Document {
  std::vector<Segment> segments;

  std::size_t word_count() const;
  // Concatenated segment text; equals the tokenized input.
  std::string text() const;
};

enum class WordErrorKind { MalformedWord, DuplicateMark, DuplicateStress };

std::string_view to_string(WordErrorKind kind);

class WordError : public std::runtime_error {
 public:
  WordError(WordErrorKind kind, std::size_t offset, const std::string& what);

  WordErrorKind kind() const { return kind_; }
  // Byte offset of the offending codepoint within the parsed run.
  std::size_t offset() const { return offset_; }

 private:
  WordErrorKind kind_;
  std::size_t offset_;
};

// Canonical form: NFC, Hebrew presentation forms decomposed, cantillation
// other than STRESS stripped, rafe stripped, qamats qatan folded to qamats,
// and each letter's marks reordered to (geresh, dagesh, dot, vowel, STRESS,
// VOCAL_SHVA) with PREFIX_SEP trailing. Idempotent.
std::string normalize(std::string_view text);

bool is_normalized(std::string_view text);

// Splits normalized text into Hebrew word runs and verbatim passthrough.
Document tokenize(std::string_view normalized);

// Throws WordError. `base_offset` is added to the resulting raw_span.
Word parse_word(std::string_view run, std::size_t base_offset = 0);

std::string serialize(const Word& word);

}  // namespace hebg2p
