#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hebg2p/hebrew_text.hpp"

namespace hebg2p {

// One input symbol of the transducer: a cluster plus word-level flags
// resolved before transduction.
struct TransducerSymbol {
  GraphemeCluster cluster;
  bool qamats_qatan = false;
};

// The transducer state at one position: the current symbol and up to two
// symbols of context on each side. Out-of-word positions are null.
class Window {
 public:
  static constexpr int kReach = 2;

  Window(std::span<const TransducerSymbol> word, std::size_t index);

  // offset in [-kReach, kReach]; null outside the word.
  const GraphemeCluster* at(int offset) const;
  const TransducerSymbol* symbol(int offset) const;
  const GraphemeCluster& self() const { return *at(0); }
  bool is_last() const { return at(1) == nullptr; }
  bool is_first() const { return at(-1) == nullptr; }

  // The same word shifted by `offset`; the caller guarantees in-range.
  Window shifted(int offset) const;

 private:
  std::span<const TransducerSymbol> word_;
  std::size_t index_;
};

enum class Tape { Consonant, Vowel };
enum class Placement { AfterConsonant, BeforeConsonant };
enum class GereshPolicy { Forbidden, Required, Any };

struct Transition {
  std::string_view id;
  Tape tape;
  std::u32string_view letters;  // empty = any letter
  GereshPolicy geresh;
  std::string_view condition;   // human-readable guard, for the audit dump
  bool (*guard)(const Window&);
  std::string_view output;      // IPA symbol, empty when silent
  Placement placement = Placement::AfterConsonant;
  bool stressable = true;

  bool matches(const Window& w) const;
};

class RuleTable {
 public:
  static const RuleTable& builtin();

  std::span<const Transition> transitions() const { return transitions_; }
  std::size_t size() const { return transitions_.size(); }

  // First transition on `tape` whose letter set and guard accept the window,
  // or null when the cluster is not covered.
  const Transition* find(Tape tape, const Window& w) const;
  // Every matching transition; a well-formed table yields at most one.
  std::vector<const Transition*> find_all(Tape tape, const Window& w) const;

  // Header plus one row per transition:
  // id, tape, letters, geresh, condition, output, placement, stressable.
  std::string dump_tsv() const;

 private:
  explicit RuleTable(std::vector<Transition> transitions);

  std::vector<Transition> transitions_;
  // Per-letter candidate lists, indexed by letter - U+05D0.
  std::array<std::vector<std::size_t>, 27> by_letter_;
};

// Letters with a geresh digraph reading.
bool takes_geresh(char32_t letter);

}  // namespace hebg2p
