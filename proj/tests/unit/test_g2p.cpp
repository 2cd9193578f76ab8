#include <algorithm>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "hebg2p/corpus.hpp"
#include "hebg2p/g2p.hpp"

namespace hebg2p {
namespace {

std::string ipa(std::string_view hebrew, const Convention& c = kBroadSyllable) {
  const auto r = phonemize(hebrew, c, Lexicon::builtin());
  EXPECT_TRUE(r.diagnostics.empty()) << hebrew << ": " << r.diagnostics.front().message;
  return r.ipa;
}

std::size_t count_marks(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t pos = s.find(kStressMark); pos != s.npos; pos = s.find(kStressMark, pos + 1)) ++n;
  return n;
}

bool has_vowel(std::string_view s) { return s.find_first_of("aeiou") != s.npos; }

TEST(Golden, EveryExamplePhonemizesExactly) {
  const auto& golden = golden_examples();
  ASSERT_GE(golden.size(), 10U);
  for (const auto& g : golden) EXPECT_EQ(ipa(g.vocalized, g.convention), g.ipa) << g.note;
}

struct Case {
  const char* hebrew;
  const char* expected;
};

class Readings : public ::testing::TestWithParam<Case> {};

TEST_P(Readings, Broad) { EXPECT_EQ(ipa(GetParam().hebrew), GetParam().expected); }

INSTANTIATE_TEST_SUITE_P(
    Rules, Readings,
    ::testing::Values(
        Case{"שָׁלוֹם", "ʃaˈlom"},            // holam male
        Case{"שׁוּק", "ˈʃuk"},                 // shuruk
        Case{"וּבַיִת", "uvaˈjit"},             // word-initial shuruk, consonantal yod
        Case{"מִזְבֵּחַ", "mizˈbeax"},           // furtive patah after tsere
        Case{"כָּל", "ˈkol"},                  // qamats qatan from the word list
        Case{"חָכְמָה", "xoxˈma"},
        Case{"צָהֳרַיִם", "tsohoraˈjim"},        // hataf qamats
        Case{"בֵּית", "ˈbejt"},                // tsere followed by yod
        Case{"יָדָיו", "jaˈdav"},              // -ָיו
        Case{"רֹאשׁ", "ˈroʃ"},                 // silent alef after a vowel
        Case{"יָפֶה", "jaˈfe"},                // silent final he
        Case{"אַרְצָהּ", "ʔarˈtsa"},            // mappiq he
        Case{"ג׳ִירָפָה", "dʒiraˈfa"},          // geresh readings
        Case{"צ׳ִיפְּס", "ˈtʃips"},
        Case{"ז׳ָקֶט", "ʒaˈket"},
        Case{"רַווָק", "raˈvak"},              // doubled vav
        Case{"מִצְוֺת", "mitsˈvot"},            // holam haser for vav
        Case{"שָׂדֶה", "saˈde"},               // sin dot
        Case{"הַ׀פִּינְגְּוִין", "haˈpingwin"}),  // prefixed lexicon stem
    [](const ::testing::TestParamInfo<Case>& info) { return "word" + std::to_string(info.index); });

TEST(Phonemize, PassthroughCollapsesToSingleSpaces) {
  EXPECT_EQ(ipa("שָׁלוֹם,   עוֹלָם!"), "ʃaˈlom ʔoˈlam");
  EXPECT_EQ(ipa("123 abc"), "");
  EXPECT_EQ(ipa(""), "");
}

TEST(Phonemize, UnmappableClusterIsReportedAndSkipped) {
  const auto r = phonemize("בּ׳ טוֹב", kBroadSyllable, Lexicon::builtin());
  EXPECT_EQ(r.ipa, "ˈtov");
  ASSERT_EQ(r.diagnostics.size(), 1U);
  EXPECT_EQ(r.diagnostics[0].kind, DiagnosticKind::UnmappableCluster);
  EXPECT_EQ(r.diagnostics[0].span.begin, 0U);
}

TEST(Phonemize, MalformedWordIsReportedAndSkipped) {
  const auto r = phonemize("בַָ טוֹב", kBroadSyllable, Lexicon::builtin());
  EXPECT_EQ(r.ipa, "ˈtov");
  ASSERT_EQ(r.diagnostics.size(), 1U);
  EXPECT_EQ(r.diagnostics[0].kind, DiagnosticKind::MalformedWord);
}

TEST(Phonemize, StressMarkSelectsTheVowel) {
  EXPECT_EQ(ipa("לֶ֫חֶם"), "ˈlexem");
  EXPECT_EQ(ipa("לֶחֶם"), "leˈxem");
  EXPECT_EQ(ipa("לֶ֫חֶם", kStorageConvention), "lˈexem");
}

TEST(Phonemize, VocalShva) {
  EXPECT_EQ(ipa("בְּלוֹנְדוֹן"), "blonˈdon");
  EXPECT_EQ(ipa("בְּֽלוֹנְדוֹן"), "belonˈdon");
}

TEST(Phonemize, LexiconOverridesRules) {
  Lexicon lex = Lexicon::parse(normalize("שָׁלוֹם") + "\tʃˈalom\n");
  EXPECT_EQ(phonemize("שָׁלוֹם", kBroadSyllable, lex).ipa, "ˈʃalom");
  EXPECT_EQ(phonemize("שָׁלוֹם", kBroadSyllable, Lexicon()).ipa, "ʃaˈlom");
}

TEST(Engine, DefaultsToBuiltinLexiconAndBroadSyllable) {
  const Engine engine;
  EXPECT_EQ(engine.phonemize("פִּינְגְּוִין").ipa, "ˈpingwin");
  EXPECT_EQ(engine.convention(), kBroadSyllable);
}

class Properties : public ::testing::Test {
 protected:
  testing::Rng rng{314159};
  const Lexicon empty;
};

TEST_F(Properties, ExactlyOneStressPerVoweledWord) {
  for (int i = 0; i < 10000; ++i) {
    const Word w = testing::random_word(rng);
    const std::string out = phonemize_word(w, kBroadSyllable, empty);
    ASSERT_EQ(count_marks(out), has_vowel(out) ? 1U : 0U) << serialize(w) << " -> " << out;
  }
}

TEST_F(Properties, OutputIsInventoryValidForEveryConvention) {
  const Convention conventions[] = {kBroadSyllable, kStorageConvention, kNarrowVowel,
                                    {StressPosition::BeforeSyllable, Narrowness::Narrow}};
  for (int i = 0; i < 10000; ++i) {
    const Word w = testing::random_word(rng);
    for (const auto& c : conventions) {
      const std::string out = phonemize_word(w, c, empty);
      if (out.empty()) continue;
      ASSERT_FALSE(validate_ipa(out, c.narrowness)) << serialize(w) << " -> " << out << ": "
                                                    << *validate_ipa(out, c.narrowness);
    }
  }
}

TEST_F(Properties, ConventionsCommute) {
  // Narrowing is a symbol substitution independent of stress placement, and
  // placement never changes the segment string.
  for (int i = 0; i < 5000; ++i) {
    const Word w = testing::random_word(rng);
    const auto t = transcribe(w, empty);
    const std::string broad_syl = t.render(kBroadSyllable);
    const std::string broad_vow = t.render(kStorageConvention);
    EXPECT_EQ(t.render({StressPosition::BeforeSyllable, Narrowness::Narrow}), to_narrow(broad_syl));
    EXPECT_EQ(t.render(kNarrowVowel), to_narrow(broad_vow));
    EXPECT_EQ(strip_stress(broad_syl), strip_stress(broad_vow));
  }
}

TEST_F(Properties, UnmarkedWordsTakeFinalStress) {
  testing::WordShape shape;
  shape.stress_p = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Word w = testing::random_word(rng, shape);
    const auto t = transcribe(w, empty);
    const auto vowels = stressable_vowels(t.phones);
    if (vowels.empty()) {
      ASSERT_FALSE(t.stressed.has_value());
      continue;
    }
    ASSERT_EQ(t.stressed, vowels.back()) << serialize(w);
    // Only a furtive vowel may follow the stressed one.
    for (std::size_t k = *t.stressed + 1; k < t.phones.size(); ++k) {
      if (t.phones[k].vowel) {
        ASSERT_FALSE(t.phones[k].stressable) << serialize(w);
      }
    }
  }
}

TEST_F(Properties, MarkedStressLandsOnOrAfterTheMarkedCluster) {
  testing::WordShape shape;
  shape.stress_p = 1.0;
  for (int i = 0; i < 10000; ++i) {
    const Word w = testing::random_word(rng, shape);
    const auto t = transcribe(w, empty);
    if (!t.stressed) continue;
    const auto marked = static_cast<int>(*w.stressed_cluster());
    const auto vowels = stressable_vowels(t.phones);
    const bool any_after = std::any_of(vowels.begin(), vowels.end(),
                                       [&](std::size_t v) { return t.phones[v].source >= marked; });
    if (any_after) {
      ASSERT_GE(t.phones[*t.stressed].source, marked) << serialize(w);
    } else {
      ASSERT_EQ(t.stressed, vowels.back());
    }
  }
}

TEST_F(Properties, Deterministic) {
  for (int i = 0; i < 1000; ++i) {
    const Word w = testing::random_word(rng);
    ASSERT_EQ(phonemize_word(w, kBroadSyllable, empty), phonemize_word(w, kBroadSyllable, empty));
  }
}

}  // namespace
}  // namespace hebg2p
