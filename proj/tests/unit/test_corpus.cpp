#include <filesystem>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "hebg2p/corpus.hpp"
#include "hebg2p/hebrew_text.hpp"
#include "hebg2p/utf8.hpp"

namespace hebg2p {
namespace {

CorpusErrorKind error_kind(std::string_view content) {
  try {
    parse_metadata(content);
  } catch (const CorpusError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << content;
  return CorpusErrorKind::Io;
}

TEST(Metadata, ParsesRecords) {
  const auto items = parse_metadata("1|בֹּקֶר טוֹב|ˈboker ˈtov\r\n\n2|לַיְלָה|ˈlajla\n");
  ASSERT_EQ(items.size(), 2U);
  EXPECT_EQ(items[0].id, "1");
  EXPECT_EQ(items[0].ipa, "ˈboker ˈtov");
  EXPECT_EQ(items[1].line, 3U);
}

TEST(Metadata, Errors) {
  EXPECT_EQ(error_kind("1|x\n"), CorpusErrorKind::BadDelimiterCount);
  EXPECT_EQ(error_kind("1|x|ˈa|b\n"), CorpusErrorKind::BadDelimiterCount);
  EXPECT_EQ(error_kind("|x|ˈa\n"), CorpusErrorKind::EmptyField);
  EXPECT_EQ(error_kind("1||ˈa\n"), CorpusErrorKind::EmptyField);
  EXPECT_EQ(error_kind("1|x|\n"), CorpusErrorKind::EmptyField);
  EXPECT_EQ(error_kind("1|x|boker\n"), CorpusErrorKind::InvalidIpa);
  EXPECT_EQ(error_kind("1|x|ˈbo  ˈker\n"), CorpusErrorKind::InvalidIpa);
  EXPECT_EQ(error_kind("1|x|ˈa\n1|y|ˈe\n"), CorpusErrorKind::DuplicateId);
}

TEST(Metadata, ErrorNamesTheLine) {
  try {
    parse_metadata("1|x|ˈa\n\nbroken\n", "meta.txt");
    FAIL();
  } catch (const CorpusError& e) {
    EXPECT_EQ(e.line(), 3U);
    EXPECT_NE(std::string(e.what()).find("meta.txt:3"), std::string::npos);
  }
}

TEST(Metadata, CollectKeepsGoodLines) {
  std::vector<CorpusError> errors;
  const auto items = parse_metadata_collect("1|x|ˈa\nbad\n2|y|ˈe\n1|z|ˈo\n", "m", errors);
  EXPECT_EQ(items.size(), 2U);
  ASSERT_EQ(errors.size(), 2U);
  EXPECT_EQ(errors[0].kind(), CorpusErrorKind::BadDelimiterCount);
  EXPECT_EQ(errors[1].kind(), CorpusErrorKind::DuplicateId);
}

TEST(Metadata, SerializeParseIsIdentity) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<CorpusItem> items;
    const std::size_t n = 1 + testing::pick(rng, 20);
    for (std::size_t i = 0; i < n; ++i) {
      std::string hebrew = serialize(testing::random_word(rng));
      if (testing::chance(rng, 0.5)) hebrew += " " + serialize(testing::random_word(rng));
      items.push_back({"utt" + std::to_string(i), hebrew, testing::random_ipa(rng), 0});
    }
    const std::string text = serialize_metadata(items);
    ASSERT_EQ(parse_metadata(text), items);
    ASSERT_EQ(serialize_metadata(parse_metadata(text)), text);
  }
}

TEST(Metadata, SaveLoad) {
  const auto path = std::filesystem::temp_directory_path() / "hebg2p_metadata.txt";
  const std::vector<CorpusItem> items = {{"a", "שָׁלוֹם", "ʃaˈlom", 0}};
  save_metadata(path, items);
  EXPECT_EQ(load_metadata(path), items);
  std::filesystem::remove(path);
  try {
    load_metadata(path);
    FAIL();
  } catch (const CorpusError& e) {
    EXPECT_EQ(e.kind(), CorpusErrorKind::Io);
  }
}

TEST(Golden, EntriesAreWellFormed) {
  for (const auto& g : golden_examples()) {
    EXPECT_TRUE(is_normalized(g.vocalized)) << g.note;
    EXPECT_FALSE(validate_ipa(g.ipa, g.convention.narrowness)) << g.ipa;
  }
}

TEST(NorthWind, FixtureIsUnvocalizedHebrew) {
  const std::string text(north_wind_text());
  ASSERT_FALSE(text.empty());
  const std::u32string s = utf8::decode(text);
  std::size_t letters = 0;
  for (char32_t c : s) {
    const bool mark = (c >= 0x0591 && c <= 0x05BD) || c == 0x05BF || c == 0x05C1 || c == 0x05C2 || c == 0x05C7;
    EXPECT_FALSE(mark) << "unexpected mark U+" << std::hex << static_cast<unsigned>(c);
    if (c >= 0x05D0 && c <= 0x05EA) ++letters;
  }
  EXPECT_GT(letters, 100U);
}

}  // namespace
}  // namespace hebg2p
