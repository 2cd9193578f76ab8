#pragma once

#include <string_view>

namespace hebg2p::builtin {

// Contents of core/data/, embedded at configure time.
std::string_view lexicon_tsv();
std::string_view north_wind_text();

}  // namespace hebg2p::builtin
