#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hebg2p {

enum class StressPosition { BeforeSyllable, BeforeVowel };
enum class Narrowness { Broad, Narrow };

struct Convention {
  StressPosition stress = StressPosition::BeforeSyllable;
  Narrowness narrowness = Narrowness::Broad;

  bool operator==(const Convention&) const = default;
};

// Stress before the syllable, /x r/: the common linguistic convention.
inline constexpr Convention kBroadSyllable{StressPosition::BeforeSyllable, Narrowness::Broad};
// Stress before the vowel, broad symbols: how lexicon values are stored.
inline constexpr Convention kStorageConvention{StressPosition::BeforeVowel, Narrowness::Broad};
// Stress before the vowel, uvular symbols.
inline constexpr Convention kNarrowVowel{StressPosition::BeforeVowel, Narrowness::Narrow};

inline constexpr std::string_view kStressMark = "ˈ";

std::string_view to_string(StressPosition p);
std::string_view to_string(Narrowness n);

// Symbols of the convention's inventory, consonants first.
std::span<const std::string_view> inventory(Narrowness n);
std::span<const std::string_view> vowel_symbols();

bool is_vowel_symbol(std::string_view symbol);

// The static inventory entry equal to `symbol` (either convention), or nullopt.
std::optional<std::string_view> intern_symbol(std::string_view symbol);

struct Phone {
  std::string_view symbol;  // always points into the static inventory
  bool vowel = false;
  // Furtive vowels never carry stress.
  bool stressable = true;
  // Cluster index of the grapheme that produced this phone, -1 if none.
  int source = -1;

  bool operator==(const Phone& o) const {
    return symbol == o.symbol && vowel == o.vowel && stressable == o.stressable;
  }
};

class StressError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Renders `phones` with the stress mark placed for the vowel at
// `stressed_index` (an index into `phones`). Throws StressError when that
// phone is not a vowel. BEFORE_SYLLABLE takes every leading consonant as the
// onset of a first-vowel stress, otherwise at most the one consonant
// directly before the vowel.
std::string place_stress(std::span<const Phone> phones, std::size_t stressed_index, StressPosition position);

// Joins the symbols without a stress mark.
std::string render_unstressed(std::span<const Phone> phones);

// x -> χ, r -> ʁ.
std::string to_narrow(std::string_view broad);
std::string strip_stress(std::string_view ipa);

struct IpaWord {
  std::vector<Phone> phones;
  std::optional<std::size_t> stressed;  // index into phones
};

class IpaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Tokenizes one word (no spaces) into phones by longest match against the
// inventory. Throws IpaError on unknown symbols, a repeated stress mark, a
// trailing stress mark, or a voweled word without stress. nullopt accepts
// either convention's symbols.
IpaWord parse_ipa_word(std::string_view word, std::optional<Narrowness> narrowness = std::nullopt);

// Checks the whole-string grammar: words separated by single spaces, every
// word inventory-valid with exactly one stress mark when it has a vowel.
// Returns an error message, or nullopt when valid.
std::optional<std::string> validate_ipa(std::string_view text,
                                        std::optional<Narrowness> narrowness = std::nullopt);

}  // namespace hebg2p
