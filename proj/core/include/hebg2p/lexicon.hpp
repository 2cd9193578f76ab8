#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hebg2p/hebrew_text.hpp"

namespace hebg2p {

// key: normalized vocalized stem without STRESS or prefix separators.
// ipa: broad transcription with the stress mark directly before the vowel.
struct LexiconEntry {
  std::string key;
  std::string ipa;
  std::size_t line = 0;

  bool operator==(const LexiconEntry&) const = default;
};

enum class LexiconErrorKind { Io, ParseError, InvalidKey, InvalidIpa, DuplicateKey };

std::string_view to_string(LexiconErrorKind kind);

class LexiconError : public std::runtime_error {
 public:
  LexiconError(LexiconErrorKind kind, std::string source, std::size_t line, const std::string& detail);

  LexiconErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  LexiconErrorKind kind_;
  std::size_t line_;
};

// Irregular-word dictionary. Stores the file's comment and blank lines so
// that save() reproduces a loaded file byte for byte.
class Lexicon {
 public:
  Lexicon() = default;

  // Throws LexiconError on the first invalid line.
  static Lexicon load(const std::filesystem::path& path);
  static Lexicon parse(std::string_view content, std::string source = "<memory>");
  // Parses everything and reports every invalid line instead of throwing.
  static Lexicon parse_collect(std::string_view content, std::string source, std::vector<LexiconError>& errors);
  // The starter lexicon compiled into the library.
  static const Lexicon& builtin();

  std::string serialize() const;
  void save(const std::filesystem::path& path) const;

  const LexiconEntry* find(std::string_view key) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  const std::string& source() const { return source_; }

  // Appends an entry, validating it like a loaded line.
  void add(std::string key, std::string ipa);

 private:
  struct Line {
    std::string raw;            // comment or blank line
    std::ptrdiff_t entry = -1;  // index into entries_ when this is an entry
  };

  std::string source_ = "<memory>";
  std::vector<LexiconEntry> entries_;
  std::vector<Line> lines_;
  std::unordered_map<std::string, std::size_t> index_;
  bool trailing_newline_ = true;
};

// Lexicon key of clusters [begin, end) of `word`: serialized with STRESS and
// prefix separators removed.
std::string lexicon_key(const Word& word, std::size_t begin, std::size_t end);

// Looks up the stem after the word's last prefix separator. Falls back to
// the stem without VOCAL_SHVA marks when the exact key misses.
std::optional<LexiconEntry> lookup_stem(const Lexicon& lexicon, const Word& word);

// Throws LexiconError(InvalidKey / InvalidIpa) if the pair cannot be stored.
void validate_entry(std::string_view key, std::string_view ipa, const std::string& source, std::size_t line);

}  // namespace hebg2p
