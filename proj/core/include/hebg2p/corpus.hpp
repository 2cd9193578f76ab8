#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hebg2p/phoneme.hpp"

namespace hebg2p {

// One `id|hebrew|ipa` metadata record.
struct CorpusItem {
  std::string id;
  std::string hebrew;
  std::string ipa;
  std::size_t line = 0;

  bool operator==(const CorpusItem& o) const { return id == o.id && hebrew == o.hebrew && ipa == o.ipa; }
};

enum class CorpusErrorKind { Io, BadDelimiterCount, DuplicateId, InvalidIpa, EmptyField };

std::string_view to_string(CorpusErrorKind kind);

class CorpusError : public std::runtime_error {
 public:
  CorpusError(CorpusErrorKind kind, std::string source, std::size_t line, const std::string& detail);

  CorpusErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  CorpusErrorKind kind_;
  std::size_t line_;
};

// Blank lines are skipped; everything else must be a valid record.
std::vector<CorpusItem> parse_metadata(std::string_view content, const std::string& source = "<memory>");
// Reports every bad line instead of stopping at the first.
std::vector<CorpusItem> parse_metadata_collect(std::string_view content, const std::string& source,
                                               std::vector<CorpusError>& errors);
std::vector<CorpusItem> load_metadata(const std::filesystem::path& path);

std::string serialize_metadata(const std::vector<CorpusItem>& items);
void save_metadata(const std::filesystem::path& path, const std::vector<CorpusItem>& items);

struct GoldenExample {
  std::string vocalized;  // enhanced-vocalized Hebrew
  std::string ipa;
  Convention convention;
  std::string_view note;
};

// Pronunciation pairs with known readings, used as the golden acceptance set.
const std::vector<GoldenExample>& golden_examples();

// Unvocalized text of the "North Wind and the Sun" fable.
std::string_view north_wind_text();

}  // namespace hebg2p
