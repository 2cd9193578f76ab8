#include "hebg2p/phoneme.hpp"

#include <algorithm>
#include <array>

namespace hebg2p {

namespace {

constexpr std::array<std::string_view, 29> kBroad{
    "b", "v", "g", "dʒ", "d", "h", "w", "z", "ʒ", "x", "t", "j", "k", "l", "m",
    "n", "s", "ʔ", "p", "f", "ts", "tʃ", "r", "ʃ", "a", "e", "i", "o", "u",
};

constexpr std::array<std::string_view, 29> kNarrow{
    "b", "v", "g", "dʒ", "d", "h", "w", "z", "ʒ", "χ", "t", "j", "k", "l", "m",
    "n", "s", "ʔ", "p", "f", "ts", "tʃ", "ʁ", "ʃ", "a", "e", "i", "o", "u",
};

constexpr std::array<std::string_view, 5> kVowels{"a", "e", "i", "o", "u"};

// Union of both conventions, longest symbols first for greedy matching.
const std::vector<std::string_view>& match_order(std::optional<Narrowness> n) {
  auto build = [](std::initializer_list<std::span<const std::string_view>> sets) {
    std::vector<std::string_view> out;
    for (auto s : sets) {
      for (auto sym : s) {
        if (std::find(out.begin(), out.end(), sym) == out.end()) out.push_back(sym);
      }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](std::string_view a, std::string_view b) { return a.size() > b.size(); });
    return out;
  };
  static const std::vector<std::string_view> broad = build({kBroad});
  static const std::vector<std::string_view> narrow = build({kNarrow});
  static const std::vector<std::string_view> both = build({kBroad, kNarrow});
  if (!n) return both;
  return *n == Narrowness::Broad ? broad : narrow;
}

}  // namespace

std::string_view to_string(StressPosition p) {
  return p == StressPosition::BeforeSyllable ? "syllable" : "vowel";
}

std::string_view to_string(Narrowness n) { return n == Narrowness::Broad ? "broad" : "narrow"; }

std::span<const std::string_view> inventory(Narrowness n) {
  return n == Narrowness::Broad ? std::span<const std::string_view>(kBroad)
                                : std::span<const std::string_view>(kNarrow);
}

std::span<const std::string_view> vowel_symbols() { return kVowels; }

bool is_vowel_symbol(std::string_view symbol) {
  return std::find(kVowels.begin(), kVowels.end(), symbol) != kVowels.end();
}

std::optional<std::string_view> intern_symbol(std::string_view symbol) {
  for (auto s : match_order(std::nullopt)) {
    if (s == symbol) return s;
  }
  return std::nullopt;
}

std::string place_stress(std::span<const Phone> phones, std::size_t stressed_index, StressPosition position) {
  if (stressed_index >= phones.size() || !phones[stressed_index].vowel) {
    throw StressError("stress index " + std::to_string(stressed_index) + " does not point at a vowel");
  }
  std::size_t insert_at = stressed_index;
  if (position == StressPosition::BeforeSyllable) {
    const auto first_vowel = static_cast<std::size_t>(
        std::find_if(phones.begin(), phones.end(), [](const Phone& p) { return p.vowel; }) - phones.begin());
    if (stressed_index == first_vowel) {
      insert_at = 0;
    } else if (stressed_index > 0 && !phones[stressed_index - 1].vowel) {
      insert_at = stressed_index - 1;
    }
  }
  std::string out;
  for (std::size_t i = 0; i < phones.size(); ++i) {
    if (i == insert_at) out += kStressMark;
    out += phones[i].symbol;
  }
  return out;
}

std::string render_unstressed(std::span<const Phone> phones) {
  std::string out;
  for (const auto& p : phones) out += p.symbol;
  return out;
}

std::string to_narrow(std::string_view broad) {
  std::string out;
  out.reserve(broad.size() + 8);
  for (char ch : broad) {
    if (ch == 'x') {
      out += "χ";
    } else if (ch == 'r') {
      out += "ʁ";
    } else {
      out.push_back(ch);
    }
  }
  return out;
}

std::string strip_stress(std::string_view ipa) {
  std::string out;
  out.reserve(ipa.size());
  for (std::size_t pos = 0; pos < ipa.size();) {
    if (ipa.substr(pos, kStressMark.size()) == kStressMark) {
      pos += kStressMark.size();
    } else {
      out.push_back(ipa[pos++]);
    }
  }
  return out;
}

IpaWord parse_ipa_word(std::string_view word, std::optional<Narrowness> narrowness) {
  if (word.empty()) throw IpaError("empty word");
  const auto& symbols = match_order(narrowness);
  IpaWord out;
  bool pending_stress = false;
  bool stress_seen = false;
  std::size_t pos = 0;
  while (pos < word.size()) {
    if (word.substr(pos, kStressMark.size()) == kStressMark) {
      if (stress_seen) throw IpaError("more than one stress mark in '" + std::string(word) + "'");
      stress_seen = true;
      pending_stress = true;
      pos += kStressMark.size();
      continue;
    }
    auto it = std::find_if(symbols.begin(), symbols.end(),
                           [&](std::string_view s) { return word.substr(pos, s.size()) == s; });
    if (it == symbols.end()) {
      throw IpaError("symbol outside the inventory at byte " + std::to_string(pos) + " of '" +
                     std::string(word) + "'");
    }
    const bool vowel = is_vowel_symbol(*it);
    if (vowel && pending_stress) {
      out.stressed = out.phones.size();
      pending_stress = false;
    }
    out.phones.push_back(Phone{*it, vowel, true, -1});
    pos += it->size();
  }
  if (pending_stress) throw IpaError("stress mark not followed by a vowel in '" + std::string(word) + "'");
  const bool has_vowel = std::any_of(out.phones.begin(), out.phones.end(), [](const Phone& p) { return p.vowel; });
  if (has_vowel && !stress_seen) throw IpaError("voweled word without stress: '" + std::string(word) + "'");
  return out;
}

std::optional<std::string> validate_ipa(std::string_view text, std::optional<Narrowness> narrowness) {
  if (text.empty()) return std::nullopt;
  std::size_t begin = 0;
  while (true) {
    const std::size_t space = text.find(' ', begin);
    const std::string_view word = text.substr(begin, space == std::string_view::npos ? text.npos : space - begin);
    if (word.empty()) return std::string("empty word (leading, trailing or double space)");
    try {
      parse_ipa_word(word, narrowness);
    } catch (const IpaError& e) {
      return std::string(e.what());
    }
    if (space == std::string_view::npos) break;
    begin = space + 1;
  }
  return std::nullopt;
}

}  // namespace hebg2p
