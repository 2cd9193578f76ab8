#include <gtest/gtest.h>

#include "hebg2p/phoneme.hpp"

namespace hebg2p {
namespace {

std::vector<Phone> phones(std::initializer_list<std::string_view> symbols) {
  std::vector<Phone> out;
  for (auto s : symbols) out.push_back(Phone{*intern_symbol(s), is_vowel_symbol(s), true, -1});
  return out;
}

TEST(Inventory, ConventionsDifferOnlyInTheUvulars) {
  const auto broad = inventory(Narrowness::Broad);
  const auto narrow = inventory(Narrowness::Narrow);
  ASSERT_EQ(broad.size(), narrow.size());
  int differences = 0;
  for (std::size_t i = 0; i < broad.size(); ++i) {
    if (broad[i] != narrow[i]) {
      ++differences;
      EXPECT_EQ(to_narrow(broad[i]), narrow[i]);
    }
  }
  EXPECT_EQ(differences, 2);
}

TEST(PlaceStress, BeforeVowel) {
  const auto p = phones({"l", "e", "x", "e", "m"});
  EXPECT_EQ(place_stress(p, 1, StressPosition::BeforeVowel), "lˈexem");
  EXPECT_EQ(place_stress(p, 3, StressPosition::BeforeVowel), "lexˈem");
}

TEST(PlaceStress, BeforeSyllableTakesOneOnsetConsonant) {
  const auto p = phones({"l", "e", "x", "e", "m"});
  EXPECT_EQ(place_stress(p, 1, StressPosition::BeforeSyllable), "ˈlexem");
  EXPECT_EQ(place_stress(p, 3, StressPosition::BeforeSyllable), "leˈxem");
}

TEST(PlaceStress, FirstSyllableTakesTheWholeCluster) {
  const auto p = phones({"s", "f", "a", "r"});
  EXPECT_EQ(place_stress(p, 2, StressPosition::BeforeSyllable), "ˈsfar");
  const auto q = phones({"b", "l", "o", "n", "d", "i", "n", "i"});
  // A medial cluster splits: the last consonant is the onset.
  EXPECT_EQ(place_stress(q, 5, StressPosition::BeforeSyllable), "blonˈdini");
}

TEST(PlaceStress, VowelInitialAndHiatus) {
  const auto p = phones({"a", "b", "a"});
  EXPECT_EQ(place_stress(p, 0, StressPosition::BeforeSyllable), "ˈaba");
  const auto q = phones({"r", "u", "a", "x"});
  EXPECT_EQ(place_stress(q, 2, StressPosition::BeforeSyllable), "ruˈax");
}

TEST(PlaceStress, RejectsConsonantIndex) {
  const auto p = phones({"t", "o", "v"});
  EXPECT_THROW(place_stress(p, 0, StressPosition::BeforeVowel), StressError);
  EXPECT_THROW(place_stress(p, 9, StressPosition::BeforeVowel), StressError);
}

TEST(ToNarrow, ReplacesOnlyXAndR) {
  EXPECT_EQ(to_narrow("ˈruax"), "ˈʁuaχ");
  EXPECT_EQ(to_narrow("ʃaˈlom"), "ʃaˈlom");
}

TEST(StripStress, RemovesEveryMark) {
  EXPECT_EQ(strip_stress("ˈboker ˈtov"), "boker tov");
  EXPECT_EQ(strip_stress(""), "");
}

TEST(ParseIpaWord, GreedyLongestMatch) {
  const IpaWord w = parse_ipa_word("ˈtsitʃ");
  ASSERT_EQ(w.phones.size(), 3U);
  EXPECT_EQ(w.phones[0].symbol, "ts");
  EXPECT_EQ(w.phones[2].symbol, "tʃ");
  EXPECT_EQ(w.stressed, 1U);
}

TEST(ParseIpaWord, Errors) {
  EXPECT_THROW(parse_ipa_word(""), IpaError);
  EXPECT_THROW(parse_ipa_word("ˈqa"), IpaError);
  EXPECT_THROW(parse_ipa_word("ˈaˈa"), IpaError);
  EXPECT_THROW(parse_ipa_word("taˈ"), IpaError);
  EXPECT_THROW(parse_ipa_word("tov"), IpaError);
  EXPECT_NO_THROW(parse_ipa_word("v"));
}

TEST(ParseIpaWord, ConventionRestrictsSymbols) {
  EXPECT_THROW(parse_ipa_word("ˈʁuaχ", Narrowness::Broad), IpaError);
  EXPECT_THROW(parse_ipa_word("ˈruax", Narrowness::Narrow), IpaError);
  EXPECT_NO_THROW(parse_ipa_word("ˈʁuaχ", Narrowness::Narrow));
  EXPECT_NO_THROW(parse_ipa_word("ˈʁuax"));
}

TEST(ValidateIpa, WholeStringGrammar) {
  EXPECT_FALSE(validate_ipa("ˈboker ˈtov"));
  EXPECT_FALSE(validate_ipa(""));
  EXPECT_TRUE(validate_ipa("ˈboker  ˈtov"));
  EXPECT_TRUE(validate_ipa(" ˈtov"));
  EXPECT_TRUE(validate_ipa("ˈtov "));
  EXPECT_TRUE(validate_ipa("boker"));
}

}  // namespace
}  // namespace hebg2p
