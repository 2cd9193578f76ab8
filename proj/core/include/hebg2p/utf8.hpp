#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hebg2p::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes one scalar at `pos` and advances it. Ill-formed sequences decode to
// U+FFFD and consume a single byte.
char32_t next(std::string_view s, std::size_t& pos);

void append(std::string& out, char32_t c);

std::u32string decode(std::string_view s);
std::string encode(std::u32string_view s);

std::size_t length(std::string_view s);

}  // namespace hebg2p::utf8
