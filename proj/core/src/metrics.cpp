#include "hebg2p/metrics.hpp"

#include <cstdio>

#include "json.hpp"

#include "hebg2p/phoneme.hpp"
#include "hebg2p/utf8.hpp"

namespace hebg2p {

namespace {

std::size_t require_ref_words(const std::vector<std::string>& words) {
  if (words.empty()) throw MetricsError(MetricsErrorKind::EmptyReference, "EmptyReference");
  return words.size();
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::vector<std::string> split_words(std::string_view ipa) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < ipa.size()) {
    while (pos < ipa.size() && ipa[pos] == ' ') ++pos;
    const std::size_t begin = pos;
    while (pos < ipa.size() && ipa[pos] != ' ') ++pos;
    if (pos > begin) out.emplace_back(ipa.substr(begin, pos - begin));
  }
  return out;
}

double wer(std::string_view ref, std::string_view hyp) {
  const auto r = split_words(ref);
  const std::size_t n = require_ref_words(r);
  return static_cast<double>(edit_distance(r, split_words(hyp))) / static_cast<double>(n);
}

double wer_sigma(std::string_view ref, std::string_view hyp) {
  return wer(strip_stress(ref), strip_stress(hyp));
}

double cer(std::string_view ref, std::string_view hyp) {
  const auto r = utf8::decode(ref);
  if (r.empty()) throw MetricsError(MetricsErrorKind::EmptyReference, "EmptyReference");
  const auto h = utf8::decode(hyp);
  return static_cast<double>(edit_distance(std::span<const char32_t>(r), std::span<const char32_t>(h))) /
         static_cast<double>(r.size());
}

ItemScore score_item(const EvalPair& pair) {
  ItemScore s;
  s.id = pair.id;
  s.ref = pair.ref;
  s.hyp = pair.hyp;
  const auto ref_words = split_words(pair.ref);
  if (ref_words.empty()) throw MetricsError(MetricsErrorKind::EmptyReference, "EmptyReference(" + pair.id + ")");
  s.ref_words = ref_words.size();
  s.word_edits = edit_distance(ref_words, split_words(pair.hyp));
  s.word_edits_sigma = edit_distance(split_words(strip_stress(pair.ref)), split_words(strip_stress(pair.hyp)));
  const auto rc = utf8::decode(pair.ref);
  const auto hc = utf8::decode(pair.hyp);
  s.ref_chars = rc.size();
  s.char_edits = edit_distance(std::span<const char32_t>(rc), std::span<const char32_t>(hc));
  s.wer = static_cast<double>(s.word_edits) / static_cast<double>(s.ref_words);
  s.wer_sigma = static_cast<double>(s.word_edits_sigma) / static_cast<double>(s.ref_words);
  s.cer = static_cast<double>(s.char_edits) / static_cast<double>(s.ref_chars);
  return s;
}

EvalReport evaluate_corpus(std::span<const EvalPair> pairs) {
  if (pairs.empty()) throw MetricsError(MetricsErrorKind::EmptyCorpus, "EmptyCorpus");
  EvalReport report;
  std::size_t words = 0;
  std::size_t word_edits = 0;
  std::size_t word_edits_sigma = 0;
  std::size_t chars = 0;
  std::size_t char_edits = 0;
  for (const auto& p : pairs) {
    ItemScore s = score_item(p);
    words += s.ref_words;
    word_edits += s.word_edits;
    word_edits_sigma += s.word_edits_sigma;
    chars += s.ref_chars;
    char_edits += s.char_edits;
    report.per_item.push_back(std::move(s));
  }
  report.wer = static_cast<double>(word_edits) / static_cast<double>(words);
  report.wer_sigma = static_cast<double>(word_edits_sigma) / static_cast<double>(words);
  report.cer = static_cast<double>(char_edits) / static_cast<double>(chars);
  return report;
}

std::string EvalReport::to_table(std::string_view label) const {
  const auto cap = [](double v) { return fixed2(std::min(v, 1.0)); };
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %8s %8s %8s %8s\n", "Model", "WER", "WER^σ", "CER", "Items");
  out += line;
  std::snprintf(line, sizeof line, "%-24.24s %8s %9s %8s %8zu\n", std::string(label).c_str(), cap(wer).c_str(),
                cap(wer_sigma).c_str(), cap(cer).c_str(), per_item.size());
  out += line;
  return out;
}

std::string EvalReport::to_json() const {
  nlohmann::json j;
  j["wer"] = wer;
  j["wer_sigma"] = wer_sigma;
  j["cer"] = cer;
  auto& items = j["per_item"] = nlohmann::json::array();
  for (const auto& s : per_item) {
    items.push_back({{"id", s.id},
                     {"wer", s.wer},
                     {"cer", s.cer},
                     {"wer_sigma", s.wer_sigma},
                     {"ref", s.ref},
                     {"hyp", s.hyp}});
  }
  return j.dump();
}

}  // namespace hebg2p
