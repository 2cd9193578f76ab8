#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hebg2p/hebrew_text.hpp"
#include "hebg2p/lexicon.hpp"
#include "hebg2p/phoneme.hpp"
#include "hebg2p/rules.hpp"

namespace hebg2p {

class UnmappableCluster : public std::runtime_error {
 public:
  UnmappableCluster(std::size_t cluster_index, const std::string& what);

  std::size_t cluster_index() const { return cluster_index_; }

 private:
  std::size_t cluster_index_;
};

// A word's phones in broad symbols, with the stressed vowel resolved.
struct WordTranscription {
  std::vector<Phone> phones;
  std::optional<std::size_t> stressed;  // index into phones
  bool from_lexicon = false;

  // Renders under a convention: stress mark placement, then narrow symbols.
  std::string render(const Convention& convention) const;
};

// Rule-only transduction of the whole word (no lexicon, no stress choice).
// Each phone records its source cluster. Throws UnmappableCluster.
std::vector<Phone> transduce(const Word& word, const RuleTable& rules = RuleTable::builtin());

// Indices into `phones` of the vowels that can carry stress.
std::vector<std::size_t> stressable_vowels(const std::vector<Phone>& phones);

// Lexicon lookup on the prefix-stripped stem, otherwise rules; then stress
// from the STRESS mark or the final-stress default.
WordTranscription transcribe(const Word& word, const Lexicon& lexicon, const RuleTable& rules = RuleTable::builtin());

std::string phonemize_word(const Word& word, const Convention& convention, const Lexicon& lexicon);

enum class DiagnosticKind { UnmappableCluster, MalformedWord };

std::string_view to_string(DiagnosticKind kind);

struct Diagnostic {
  DiagnosticKind kind = DiagnosticKind::UnmappableCluster;
  ByteSpan span;       // byte range of the word in the normalized text
  std::string word;    // the offending word run
  std::string message;
};

struct PhonemizeResult {
  std::string ipa;  // words joined by single spaces
  std::vector<Diagnostic> diagnostics;
};

// Words are phonemized independently; passthrough collapses to a single
// space; failed words are skipped and reported.
PhonemizeResult phonemize_text(const Document& doc, const Convention& convention, const Lexicon& lexicon);

// normalize + tokenize + phonemize_text.
PhonemizeResult phonemize(std::string_view text, const Convention& convention, const Lexicon& lexicon);

// A reusable, immutable phonemizer bound to a lexicon and a convention.
// Safe to share between threads.
class Engine {
 public:
  explicit Engine(std::shared_ptr<const Lexicon> lexicon = nullptr, Convention convention = kBroadSyllable);

  PhonemizeResult phonemize(std::string_view text) const;
  const Convention& convention() const { return convention_; }
  const Lexicon& lexicon() const { return *lexicon_; }

 private:
  std::shared_ptr<const Lexicon> lexicon_;
  Convention convention_;
};

}  // namespace hebg2p
