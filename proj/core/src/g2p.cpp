#include "hebg2p/g2p.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "hebg2p/utf8.hpp"

namespace hebg2p {

namespace {

// Words whose qamats at the listed cluster positions is read /o/. Keys are
// lexicon keys (enhanced marks stripped).
const std::unordered_map<std::string, std::vector<std::size_t>>& qamats_qatan_words() {
  static const auto table = [] {
    const std::pair<const char*, std::vector<std::size_t>> words[] = {
        {"כָּל", {0}},
        {"חָכְמָה", {0}},
        {"תָּכְנִית", {0}},
        {"אָזְנַיִם", {0}},
        {"קָרְבָּן", {0}},
        {"צָהֳרַיִם", {0}},
    };
    std::unordered_map<std::string, std::vector<std::size_t>> out;
    for (const auto& [word, positions] : words) out.emplace(normalize(word), positions);
    return out;
  }();
  return table;
}

std::vector<TransducerSymbol> to_symbols(const Word& word) {
  std::vector<TransducerSymbol> symbols;
  symbols.reserve(word.size());
  for (const auto& c : word.clusters) symbols.push_back({c, false});

  const auto& table = qamats_qatan_words();
  auto apply = [&](std::size_t begin) {
    const auto it = table.find(lexicon_key(word, begin, word.size()));
    if (it == table.end()) return;
    for (std::size_t idx : it->second) {
      if (begin + idx < symbols.size()) symbols[begin + idx].qamats_qatan = true;
    }
  };
  apply(0);
  if (const std::size_t stem = word.stem_begin(); stem > 0) apply(stem);
  return symbols;
}

Phone make_phone(std::string_view output, bool stressable, std::size_t source) {
  const auto symbol = intern_symbol(output);
  // Rule outputs are drawn from the inventory; a miss is a table bug.
  if (!symbol) throw std::logic_error("rule output outside the inventory: " + std::string(output));
  return Phone{*symbol, is_vowel_symbol(*symbol), stressable, static_cast<int>(source)};
}

std::vector<Phone> transduce_range(const Word& word, std::size_t begin, std::size_t end, const RuleTable& rules) {
  const auto symbols = to_symbols(word);
  std::vector<Phone> phones;
  for (std::size_t i = begin; i < end; ++i) {
    const Window w(symbols, i);
    const Transition* consonant = rules.find(Tape::Consonant, w);
    const Transition* vowel = rules.find(Tape::Vowel, w);
    if (consonant == nullptr || vowel == nullptr) {
      std::string cluster;
      utf8::append(cluster, word.clusters[i].letter);
      if (word.clusters[i].geresh) utf8::append(cluster, cp::kGeresh);
      throw UnmappableCluster(i, "no rule for cluster " + std::to_string(i) + " ('" + cluster + "')");
    }
    auto emit = [&](const Transition* t) {
      if (!t->output.empty()) phones.push_back(make_phone(t->output, t->stressable, i));
    };
    if (vowel->placement == Placement::BeforeConsonant) {
      emit(vowel);
      emit(consonant);
    } else {
      emit(consonant);
      emit(vowel);
    }
  }
  return phones;
}

}  // namespace

UnmappableCluster::UnmappableCluster(std::size_t cluster_index, const std::string& what)
    : std::runtime_error("UnmappableCluster: " + what), cluster_index_(cluster_index) {}

std::string WordTranscription::render(const Convention& convention) const {
  std::string out = stressed ? place_stress(phones, *stressed, convention.stress) : render_unstressed(phones);
  return convention.narrowness == Narrowness::Narrow ? to_narrow(out) : out;
}

std::vector<Phone> transduce(const Word& word, const RuleTable& rules) {
  return transduce_range(word, 0, word.size(), rules);
}

std::vector<std::size_t> stressable_vowels(const std::vector<Phone>& phones) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < phones.size(); ++i) {
    if (phones[i].vowel && phones[i].stressable) out.push_back(i);
  }
  return out;
}

WordTranscription transcribe(const Word& word, const Lexicon& lexicon, const RuleTable& rules) {
  WordTranscription out;
  const std::size_t stem = word.stem_begin();

  if (const auto entry = lookup_stem(lexicon, word)) {
    out.phones = transduce_range(word, 0, stem, rules);
    const IpaWord value = parse_ipa_word(entry->ipa, Narrowness::Broad);
    const std::size_t offset = out.phones.size();
    for (Phone p : value.phones) {
      p.source = static_cast<int>(stem);
      out.phones.push_back(p);
    }
    if (value.stressed) out.stressed = offset + *value.stressed;
    out.from_lexicon = true;
    return out;
  }

  out.phones = transduce(word, rules);
  const auto candidates = stressable_vowels(out.phones);
  if (candidates.empty()) return out;
  out.stressed = candidates.back();
  if (const auto marked = word.stressed_cluster()) {
    const auto it = std::find_if(candidates.begin(), candidates.end(), [&](std::size_t idx) {
      return out.phones[idx].source >= static_cast<int>(*marked);
    });
    if (it != candidates.end()) out.stressed = *it;
  }
  return out;
}

std::string phonemize_word(const Word& word, const Convention& convention, const Lexicon& lexicon) {
  return transcribe(word, lexicon).render(convention);
}

std::string_view to_string(DiagnosticKind kind) {
  return kind == DiagnosticKind::UnmappableCluster ? "UnmappableCluster" : "MalformedWord";
}

PhonemizeResult phonemize_text(const Document& doc, const Convention& convention, const Lexicon& lexicon) {
  PhonemizeResult result;
  for (const auto& seg : doc.segments) {
    if (seg.kind != SegmentKind::Word) continue;
    try {
      const Word word = parse_word(seg.text, seg.span.begin);
      std::string ipa = phonemize_word(word, convention, lexicon);
      if (ipa.empty()) continue;
      if (!result.ipa.empty()) result.ipa += ' ';
      result.ipa += ipa;
    } catch (const WordError& e) {
      result.diagnostics.push_back({DiagnosticKind::MalformedWord, seg.span, seg.text, e.what()});
    } catch (const UnmappableCluster& e) {
      result.diagnostics.push_back({DiagnosticKind::UnmappableCluster, seg.span, seg.text, e.what()});
    }
  }
  return result;
}

PhonemizeResult phonemize(std::string_view text, const Convention& convention, const Lexicon& lexicon) {
  return phonemize_text(tokenize(normalize(text)), convention, lexicon);
}

Engine::Engine(std::shared_ptr<const Lexicon> lexicon, Convention convention)
    : lexicon_(lexicon ? std::move(lexicon)
                       : std::shared_ptr<const Lexicon>(&Lexicon::builtin(), [](const Lexicon*) {})),
      convention_(convention) {}

PhonemizeResult Engine::phonemize(std::string_view text) const {
  return hebg2p::phonemize(text, convention_, *lexicon_);
}

}  // namespace hebg2p
