#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hebg2p/hebrew_text.hpp"

namespace hebg2p {

// Vocal-shva rules; each can be switched off independently. Shvas no rule
// claims stay silent.
struct ShvaRules {
  bool adjacent_shvas = true;   // R1: second of two adjacent medial shvas
  bool geminate = true;         // R2: shva on a doubled consonant
  bool clitic_prefix = true;    // R3: one-letter prefix before another shva
};

// Adds VOCAL_SHVA where a rule fires; never removes a mark. Idempotent.
Word apply_shva_rules(const Word& word, const ShvaRules& rules = {});

struct AnnotationRecord {
  Word token;
  std::size_t prefix_len = 0;
  // 1-based, counted from the end of the word over stressable vowels.
  std::optional<std::size_t> stress_syllable;
};

enum class AnnotationErrorKind {
  SyllableOutOfRange,
  PrefixOutOfRange,
  StressConflict,
  InvalidRecord,
  InvalidCorrection,
};

std::string_view to_string(AnnotationErrorKind kind);

class AnnotationError : public std::runtime_error {
 public:
  AnnotationError(AnnotationErrorKind kind, std::size_t line, const std::string& detail);

  AnnotationErrorKind kind() const { return kind_; }
  // 1-based input line, 0 when not tied to a line.
  std::size_t line() const { return line_; }

 private:
  AnnotationErrorKind kind_;
  std::size_t line_;
};

// Syllable 1 adds nothing: final stress is the unmarked default. A word
// already stressed on the requested vowel is returned unchanged; stressed
// elsewhere is a StressConflict.
Word mark_stress(const AnnotationRecord& record);
Word mark_prefixes(const AnnotationRecord& record);

// Prefix boundaries, then shva rules, then stress.
Word annotate(const AnnotationRecord& record, const ShvaRules& rules = {});

struct AnnotatedLine {
  std::string text;
  std::vector<Word> tokens;

  // Annotated tokens joined by single spaces.
  std::string enhanced() const;
  std::string to_jsonl() const;
};

// One JSONL input object:
// {"text": "...", "tokens": [{"voc": "...", "prefix_len": n, "stress_syllable": k}]}
AnnotatedLine annotate_jsonl(std::string_view json_line, std::size_t line_no = 0, const ShvaRules& rules = {});

// Word types of normalized text with their counts.
class ReviewCounter {
 public:
  void add_line(std::string_view text);

  struct Row {
    std::string surface;
    std::size_t count;
  };
  // Count descending, then surface ascending (bytewise).
  std::vector<Row> rows() const;
  std::string to_tsv() const;

 private:
  std::unordered_map<std::string, std::size_t> counts_;
};

std::string build_review_list(const std::vector<std::string>& lines);

// surface -> corrected form, both single normalized words.
class CorrectionFile {
 public:
  // TSV `surface<TAB>corrected`; blank and '#' lines are ignored.
  // Throws AnnotationError(InvalidCorrection) naming the line.
  static CorrectionFile parse(std::string_view content);
  static CorrectionFile load(const std::string& path);

  const std::string* find(std::string_view surface) const;
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }

 private:
  std::unordered_map<std::string, std::string> map_;
};

struct CorrectedLine {
  std::string text;
  std::size_t replacements = 0;
};

CorrectedLine apply_corrections(std::string_view line, const CorrectionFile& corrections);

}  // namespace hebg2p
