#include "hebg2p/rules.hpp"

#include <algorithm>
#include <optional>

#include "hebg2p/utf8.hpp"

namespace hebg2p {

Window::Window(std::span<const TransducerSymbol> word, std::size_t index) : word_(word), index_(index) {}

const TransducerSymbol* Window::symbol(int offset) const {
  const auto pos = static_cast<std::ptrdiff_t>(index_) + offset;
  if (offset < -kReach || offset > kReach || pos < 0 || pos >= static_cast<std::ptrdiff_t>(word_.size())) {
    return nullptr;
  }
  return &word_[static_cast<std::size_t>(pos)];
}

const GraphemeCluster* Window::at(int offset) const {
  const auto* s = symbol(offset);
  return s == nullptr ? nullptr : &s->cluster;
}

Window Window::shifted(int offset) const {
  return Window(word_, static_cast<std::size_t>(static_cast<std::ptrdiff_t>(index_) + offset));
}

bool takes_geresh(char32_t letter) {
  return letter == cp::kGimel || letter == cp::kZayin || letter == cp::kTsadi || letter == cp::kFinalTsadi;
}

namespace {

using MK = MarkKind;

bool silent_shva(const GraphemeCluster& c) { return c.has(MK::Shva) && !c.has(MK::VocalShva); }

bool vowel_is(const GraphemeCluster* c, MK k) { return c != nullptr && c->vowel() == k; }

bool no_vowel(const GraphemeCluster& c) { return !c.vowel().has_value(); }

bool is_shuruk(const Window& w) {
  const auto& c = w.self();
  const auto* prev = w.at(-1);
  return c.letter == cp::kVav && c.has(MK::Dagesh) && no_vowel(c) && (prev == nullptr || no_vowel(*prev));
}

bool is_holam_male(const Window& w) {
  const auto& c = w.self();
  const auto* prev = w.at(-1);
  return c.letter == cp::kVav && !c.has(MK::Dagesh) && c.vowel() == MK::Holam && prev != nullptr &&
         no_vowel(*prev);
}

bool is_vav_after_holam(const Window& w) {
  const auto& c = w.self();
  return c.letter == cp::kVav && !c.has(MK::Dagesh) && no_vowel(c) && vowel_is(w.at(-1), MK::Holam);
}

bool is_consonantal_vav(const Window& w) {
  return w.self().letter == cp::kVav && !is_shuruk(w) && !is_holam_male(w) && !is_vav_after_holam(w);
}

bool is_doubled_vav_first(const Window& w) {
  const auto& c = w.self();
  const auto* next = w.at(1);
  return c.letter == cp::kVav && !c.has(MK::Dagesh) && no_vowel(c) && !is_vav_after_holam(w) &&
         next != nullptr && next->letter == cp::kVav && is_consonantal_vav(w.shifted(1));
}

bool is_yod_absorbed(const Window& w) {
  const auto& c = w.self();
  return c.letter == cp::kYod && !c.has(MK::Dagesh) && no_vowel(c) && vowel_is(w.at(-1), MK::Hiriq);
}

bool is_yod_before_final_vav(const Window& w) {
  const auto& c = w.self();
  const auto* prev = w.at(-1);
  const auto* next = w.at(1);
  if (c.letter != cp::kYod || c.has(MK::Dagesh) || !no_vowel(c)) return false;
  if (!vowel_is(prev, MK::Patah) && !vowel_is(prev, MK::Qamats)) return false;
  return next != nullptr && w.at(2) == nullptr && next->letter == cp::kVav && next->marks.empty() &&
         !next->geresh;
}

bool is_he_silent(const Window& w) {
  const auto& c = w.self();
  return c.letter == cp::kHe && w.is_last() && (no_vowel(c) || c.has(MK::Dagesh));
}

bool prev_is_sounded(const Window& w) {
  const auto* prev = w.at(-1);
  if (prev == nullptr) return false;
  if (prev->vowel() && !silent_shva(*prev)) return true;
  return is_shuruk(w.shifted(-1));
}

bool is_alef_silent(const Window& w) {
  const auto& c = w.self();
  return c.letter == cp::kAlef && no_vowel(c) && (w.is_last() || prev_is_sounded(w));
}

bool is_qamats_qatan(const Window& w) {
  if (w.self().vowel() != MK::Qamats) return false;
  return w.symbol(0)->qamats_qatan || vowel_is(w.at(1), MK::HatafQamats);
}

// Vowel quality written by the cluster's own vowel mark.
std::optional<char> mark_quality(const Window& w) {
  const auto v = w.self().vowel();
  if (!v) return std::nullopt;
  switch (*v) {
    case MK::Shva: return w.self().has(MK::VocalShva) ? std::optional<char>('e') : std::nullopt;
    case MK::HatafSegol:
    case MK::Tsere:
    case MK::Segol: return 'e';
    case MK::HatafPatah:
    case MK::Patah: return 'a';
    case MK::Qamats: return is_qamats_qatan(w) ? 'o' : 'a';
    case MK::HatafQamats:
    case MK::Holam:
    case MK::HolamHaserForVav: return 'o';
    case MK::Hiriq: return 'i';
    case MK::Qubuts: return 'u';
    default: return std::nullopt;
  }
}

// Quality of the vowel nucleus directly before the current cluster, looking
// through a shuruk vav or an unpointed yod/alef mater.
std::optional<char> nucleus_before(const Window& w) {
  const auto* prev = w.at(-1);
  if (prev == nullptr) return std::nullopt;
  const Window p = w.shifted(-1);
  if (prev->vowel()) return mark_quality(p);
  if (is_shuruk(p)) return 'u';
  if ((prev->letter == cp::kYod || prev->letter == cp::kAlef) && !prev->has(MK::Dagesh)) {
    const auto* prev2 = w.at(-2);
    if (prev2 != nullptr && prev2->vowel()) return mark_quality(w.shifted(-2));
  }
  return std::nullopt;
}

bool is_furtive(const Window& w) {
  const auto& c = w.self();
  if (c.vowel() != MK::Patah || !w.is_last()) return false;
  const bool guttural = c.letter == cp::kHet || c.letter == cp::kAyin || (c.letter == cp::kHe && c.has(MK::Dagesh));
  if (!guttural) return false;
  const auto q = nucleus_before(w);
  return q.has_value() && *q != 'a';
}

template <MK K>
bool has_vowel(const Window& w) {
  return w.self().vowel() == K;
}

std::vector<Transition> builtin_transitions() {
  using enum Tape;
  using enum GereshPolicy;
  const auto always = [](const Window&) { return true; };
  const auto dagesh = [](const Window& w) { return w.self().has(MK::Dagesh); };
  const auto no_dagesh = [](const Window& w) { return !w.self().has(MK::Dagesh); };

  return {
      // Consonant tape.
      {"bet-plosive", Consonant, U"ב", Forbidden, "dagesh", dagesh, "b"},
      {"bet-fricative", Consonant, U"ב", Forbidden, "no dagesh", no_dagesh, "v"},
      {"gimel", Consonant, U"ג", Forbidden, "-", always, "g"},
      {"gimel-geresh", Consonant, U"ג", Required, "-", always, "dʒ"},
      {"dalet", Consonant, U"ד", Forbidden, "-", always, "d"},
      {"he-silent", Consonant, U"ה", Forbidden, "word-final, unpointed or mappiq", is_he_silent, ""},
      {"he", Consonant, U"ה", Forbidden, "not he-silent", [](const Window& w) { return !is_he_silent(w); },
       "h"},
      {"vav-shuruk", Consonant, U"ו", Forbidden, "dagesh, no vowel, previous letter unpointed or word start",
       is_shuruk, ""},
      {"vav-holam-male", Consonant, U"ו", Forbidden, "holam, no dagesh, previous letter unpointed",
       is_holam_male, ""},
      {"vav-mater-after-holam", Consonant, U"ו", Forbidden, "unpointed, previous letter has holam",
       is_vav_after_holam, ""},
      {"vav-doubled", Consonant, U"ו", Forbidden, "unpointed, followed by a consonantal vav",
       is_doubled_vav_first, ""},
      {"vav", Consonant, U"ו", Forbidden, "none of the vav readings above",
       [](const Window& w) { return is_consonantal_vav(w) && !is_doubled_vav_first(w); }, "v"},
      {"zayin", Consonant, U"ז", Forbidden, "-", always, "z"},
      {"zayin-geresh", Consonant, U"ז", Required, "-", always, "ʒ"},
      {"het", Consonant, U"ח", Forbidden, "-", always, "x"},
      {"tet", Consonant, U"ט", Forbidden, "-", always, "t"},
      {"yod-absorbed", Consonant, U"י", Forbidden, "unpointed, previous letter has hiriq", is_yod_absorbed,
       ""},
      {"yod-before-final-vav", Consonant, U"י", Forbidden,
       "unpointed, previous letter has patah/qamats, followed by a word-final unpointed vav",
       is_yod_before_final_vav, ""},
      {"yod", Consonant, U"י", Forbidden, "none of the yod readings above",
       [](const Window& w) { return !is_yod_absorbed(w) && !is_yod_before_final_vav(w); }, "j"},
      {"kaf-plosive", Consonant, U"כך", Forbidden, "dagesh", dagesh, "k"},
      {"kaf-fricative", Consonant, U"כך", Forbidden, "no dagesh", no_dagesh, "x"},
      {"lamed", Consonant, U"ל", Forbidden, "-", always, "l"},
      {"mem", Consonant, U"מם", Forbidden, "-", always, "m"},
      {"nun", Consonant, U"נן", Forbidden, "-", always, "n"},
      {"samekh", Consonant, U"ס", Forbidden, "-", always, "s"},
      {"ayin", Consonant, U"ע", Forbidden, "-", always, "ʔ"},
      {"pe-plosive", Consonant, U"פף", Forbidden, "dagesh", dagesh, "p"},
      {"pe-fricative", Consonant, U"פף", Forbidden, "no dagesh", no_dagesh, "f"},
      {"tsadi", Consonant, U"צץ", Forbidden, "-", always, "ts"},
      {"tsadi-geresh", Consonant, U"צץ", Required, "-", always, "tʃ"},
      {"qof", Consonant, U"ק", Forbidden, "-", always, "k"},
      {"resh", Consonant, U"ר", Forbidden, "-", always, "r"},
      {"shin", Consonant, U"ש", Forbidden, "no sin dot", [](const Window& w) { return !w.self().has(MK::SinDot); },
       "ʃ"},
      {"sin", Consonant, U"ש", Forbidden, "sin dot", [](const Window& w) { return w.self().has(MK::SinDot); }, "s"},
      {"tav", Consonant, U"ת", Forbidden, "-", always, "t"},
      {"alef-silent", Consonant, U"א", Forbidden, "unpointed, word-final or after a sounded vowel",
       is_alef_silent, ""},
      {"alef", Consonant, U"א", Forbidden, "not alef-silent", [](const Window& w) { return !is_alef_silent(w); },
       "ʔ"},

      // Vowel tape.
      {"no-vowel", Vowel, U"", Any, "no vowel mark, not shuruk",
       [](const Window& w) { return no_vowel(w.self()) && !is_shuruk(w); }, ""},
      {"shuruk", Vowel, U"", Any, "shuruk vav", is_shuruk, "u"},
      {"shva-silent", Vowel, U"", Any, "shva without vocal-shva mark",
       [](const Window& w) { return silent_shva(w.self()); }, ""},
      {"shva-vocal", Vowel, U"", Any, "shva with vocal-shva mark",
       [](const Window& w) { return w.self().has(MK::Shva) && w.self().has(MK::VocalShva); }, "e"},
      {"hataf-segol", Vowel, U"", Any, "-", has_vowel<MK::HatafSegol>, "e"},
      {"hataf-patah", Vowel, U"", Any, "-", has_vowel<MK::HatafPatah>, "a"},
      {"hataf-qamats", Vowel, U"", Any, "-", has_vowel<MK::HatafQamats>, "o"},
      {"hiriq", Vowel, U"", Any, "-", has_vowel<MK::Hiriq>, "i"},
      {"tsere", Vowel, U"", Any, "-", has_vowel<MK::Tsere>, "e"},
      {"segol", Vowel, U"", Any, "-", has_vowel<MK::Segol>, "e"},
      {"patah-furtive", Vowel, U"", Any,
       "patah on word-final het/ayin/mappiq-he after a non-/a/ vowel", is_furtive, "a",
       Placement::BeforeConsonant, false},
      {"patah", Vowel, U"", Any, "patah, not furtive",
       [](const Window& w) { return has_vowel<MK::Patah>(w) && !is_furtive(w); }, "a"},
      {"qamats-qatan", Vowel, U"", Any, "qamats in the exception list or before hataf-qamats",
       is_qamats_qatan, "o"},
      {"qamats", Vowel, U"", Any, "qamats, not qatan",
       [](const Window& w) { return has_vowel<MK::Qamats>(w) && !is_qamats_qatan(w); }, "a"},
      {"holam", Vowel, U"", Any, "-", has_vowel<MK::Holam>, "o"},
      {"holam-haser-for-vav", Vowel, U"", Any, "-", has_vowel<MK::HolamHaserForVav>, "o"},
      {"qubuts", Vowel, U"", Any, "-", has_vowel<MK::Qubuts>, "u"},
  };
}

std::string_view to_string(Tape t) { return t == Tape::Consonant ? "consonant" : "vowel"; }

std::string_view to_string(GereshPolicy g) {
  switch (g) {
    case GereshPolicy::Forbidden: return "no";
    case GereshPolicy::Required: return "yes";
    case GereshPolicy::Any: return "any";
  }
  return "?";
}

}  // namespace

bool Transition::matches(const Window& w) const {
  const auto& c = w.self();
  if (!letters.empty() && letters.find(c.letter) == std::u32string_view::npos) return false;
  if (geresh == GereshPolicy::Forbidden && c.geresh) return false;
  if (geresh == GereshPolicy::Required && !c.geresh) return false;
  return guard(w);
}

RuleTable::RuleTable(std::vector<Transition> transitions) : transitions_(std::move(transitions)) {
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const auto& t = transitions_[i];
    if (t.letters.empty()) {
      for (auto& bucket : by_letter_) bucket.push_back(i);
    } else {
      for (char32_t l : t.letters) by_letter_[l - cp::kAlef].push_back(i);
    }
  }
}

const RuleTable& RuleTable::builtin() {
  static const RuleTable table(builtin_transitions());
  return table;
}

const Transition* RuleTable::find(Tape tape, const Window& w) const {
  const char32_t letter = w.self().letter;
  if (!is_hebrew_letter(letter)) return nullptr;
  for (std::size_t i : by_letter_[letter - cp::kAlef]) {
    const auto& t = transitions_[i];
    if (t.tape == tape && t.matches(w)) return &t;
  }
  return nullptr;
}

std::vector<const Transition*> RuleTable::find_all(Tape tape, const Window& w) const {
  std::vector<const Transition*> out;
  for (const auto& t : transitions_) {
    if (t.tape == tape && t.matches(w)) out.push_back(&t);
  }
  return out;
}

std::string RuleTable::dump_tsv() const {
  std::string out = "id\ttape\tletters\tgeresh\tcondition\toutput\tplacement\tstressable\n";
  for (const auto& t : transitions_) {
    out += t.id;
    out += '\t';
    out += to_string(t.tape);
    out += '\t';
    out += t.letters.empty() ? std::string("*") : utf8::encode(t.letters);
    out += '\t';
    out += to_string(t.geresh);
    out += '\t';
    out += t.condition;
    out += '\t';
    out += t.output.empty() ? std::string_view("-") : t.output;
    out += '\t';
    out += t.placement == Placement::AfterConsonant ? "after" : "before";
    out += '\t';
    out += t.stressable ? "yes" : "no";
    out += '\n';
  }
  return out;
}

}  // namespace hebg2p
