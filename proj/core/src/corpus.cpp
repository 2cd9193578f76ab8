#include "hebg2p/corpus.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "builtin_data.hpp"

namespace hebg2p {

std::string_view to_string(CorpusErrorKind kind) {
  switch (kind) {
    case CorpusErrorKind::Io: return "IoError";
    case CorpusErrorKind::BadDelimiterCount: return "BadDelimiterCount";
    case CorpusErrorKind::DuplicateId: return "DuplicateId";
    case CorpusErrorKind::InvalidIpa: return "InvalidIpa";
    case CorpusErrorKind::EmptyField: return "EmptyField";
  }
  return "?";
}

CorpusError::CorpusError(CorpusErrorKind kind, std::string source, std::size_t line, const std::string& detail)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      line_(line) {}

std::vector<CorpusItem> parse_metadata_collect(std::string_view content, const std::string& source,
                                               std::vector<CorpusError>& errors) {
  std::vector<CorpusItem> items;
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    try {
      const std::size_t a = line.find('|');
      const std::size_t b = a == std::string_view::npos ? a : line.find('|', a + 1);
      if (b == std::string_view::npos || line.find('|', b + 1) != std::string_view::npos) {
        throw CorpusError(CorpusErrorKind::BadDelimiterCount, source, line_no, "expected exactly two '|'");
      }
      CorpusItem item{std::string(line.substr(0, a)), std::string(line.substr(a + 1, b - a - 1)),
                      std::string(line.substr(b + 1)), line_no};
      if (item.id.empty() || item.hebrew.empty() || item.ipa.empty()) {
        throw CorpusError(CorpusErrorKind::EmptyField, source, line_no, "id, hebrew and ipa must be nonempty");
      }
      if (auto err = validate_ipa(item.ipa)) throw CorpusError(CorpusErrorKind::InvalidIpa, source, line_no, *err);
      if (auto it = seen.find(item.id); it != seen.end()) {
        throw CorpusError(CorpusErrorKind::DuplicateId, source, line_no,
                          "'" + item.id + "' first used on line " + std::to_string(it->second));
      }
      seen.emplace(item.id, line_no);
      items.push_back(std::move(item));
    } catch (const CorpusError& e) {
      errors.push_back(e);
    }
  }
  return items;
}

std::vector<CorpusItem> parse_metadata(std::string_view content, const std::string& source) {
  std::vector<CorpusError> errors;
  auto items = parse_metadata_collect(content, source, errors);
  if (!errors.empty()) throw errors.front();
  return items;
}

std::vector<CorpusItem> load_metadata(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError(CorpusErrorKind::Io, path.string(), 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_metadata(buf.str(), path.string());
}

std::string serialize_metadata(const std::vector<CorpusItem>& items) {
  std::string out;
  for (const auto& item : items) {
    out += item.id;
    out += '|';
    out += item.hebrew;
    out += '|';
    out += item.ipa;
    out += '\n';
  }
  return out;
}

void save_metadata(const std::filesystem::path& path, const std::vector<CorpusItem>& items) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusError(CorpusErrorKind::Io, path.string(), 0, "cannot write file");
  out << serialize_metadata(items);
}

const std::vector<GoldenExample>& golden_examples() {
  // Marks are in normalized order. U+05AB is STRESS, U+05BD VOCAL_SHVA and
  // U+05C0 the prefix separator.
  static const std::vector<GoldenExample> examples = {
      {"סֵ֫פֶר", "ˈsefer", kBroadSyllable, "homograph: book"},
      {"סַפָּר", "saˈpar", kBroadSyllable, "homograph: barber"},
      {"סָפַר", "saˈfar", kBroadSyllable, "homograph: counted"},
      {"סְפָר", "ˈsfar", kBroadSyllable, "homograph: frontier"},
      {"בִּ֫ירָה", "ˈbira", kBroadSyllable, "stress minimal pair: beer"},
      {"בִּירָה", "biˈra", kBroadSyllable, "stress minimal pair: capital city"},
      {"תְּחִ֫ינָה", "ˈtxina", kBroadSyllable, "stress minimal pair: tahini"},
      {"תְּחִינָה", "txiˈna", kBroadSyllable, "stress minimal pair: plea"},
      {"בְּֽלוֹ֫נְדוֹן", "beˈlondon", kBroadSyllable, "vocal shva: London"},
      {"בְּלוֹנְדִ֫ינִי", "blonˈdini", kBroadSyllable, "silent initial shva: blonde"},
      {"פִּינְגְּוִין", "ˈpingwin", kBroadSyllable, "loanword from the lexicon: penguin"},
      {"לֶ֫חֶם", "ˈlexem", kBroadSyllable, "penultimate stress: bread"},
      {"הַ׀קּוֹד", "haˈkod", kBroadSyllable, "prefix boundary: the code"},
      {"בּוֹ֫קֶר טוֹב", "ˈboker ˈtov", kBroadSyllable, "two words: good morning"},
      {"רוּחַ", "ˈruax", kBroadSyllable, "furtive patah: wind"},
      {"רוּחַ", "ʁˈuaχ", kNarrowVowel, "furtive patah, narrow symbols with stress before the vowel"},
      {"מְֽתִיחָה", "metiˈxa", kBroadSyllable, "vocal shva: stretching"},
  };
  return examples;
}

std::string_view north_wind_text() { return builtin::north_wind_text(); }

}  // namespace hebg2p
