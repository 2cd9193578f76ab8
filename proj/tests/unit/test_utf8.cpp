#include <gtest/gtest.h>

#include "generators.hpp"
#include "hebg2p/utf8.hpp"

namespace hebg2p {
namespace {

TEST(Utf8, DecodesEveryWidth) {
  EXPECT_EQ(utf8::decode("aéא\U0001F600"), U"aéא\U0001F600");
  EXPECT_EQ(utf8::length("ˈboker"), 6U);
}

TEST(Utf8, IllFormedBytesBecomeReplacementOneAtATime) {
  EXPECT_EQ(utf8::decode("\xff"), std::u32string(1, utf8::kReplacement));
  EXPECT_EQ(utf8::decode("\xd7"), std::u32string(1, utf8::kReplacement));  // truncated
  EXPECT_EQ(utf8::decode("\xc0\xaf"), std::u32string(2, utf8::kReplacement));  // overlong
  EXPECT_EQ(utf8::decode("\xed\xa0\x80").front(), utf8::kReplacement);  // surrogate
  EXPECT_EQ(utf8::decode("\xd7x"), (std::u32string{utf8::kReplacement, U'x'}));
}

TEST(Utf8, EncodeDecodeRoundTrip) {
  testing::Rng rng(3);
  for (int i = 0; i < 5000; ++i) {
    std::u32string s;
    const std::size_t n = testing::pick(rng, 12);
    for (std::size_t k = 0; k < n; ++k) {
      char32_t c;
      do {
        c = static_cast<char32_t>(testing::pick(rng, 0x110000));
      } while (c >= 0xD800 && c <= 0xDFFF);
      s.push_back(c);
    }
    const std::string bytes = utf8::encode(s);
    ASSERT_EQ(utf8::decode(bytes), s);
    ASSERT_EQ(utf8::length(bytes), s.size());
  }
}

TEST(Utf8, NextAdvances) {
  const std::string s = "אb";
  std::size_t pos = 0;
  EXPECT_EQ(utf8::next(s, pos), U'א');
  EXPECT_EQ(pos, 2U);
  EXPECT_EQ(utf8::next(s, pos), U'b');
  EXPECT_EQ(pos, 3U);
}

}  // namespace
}  // namespace hebg2p
