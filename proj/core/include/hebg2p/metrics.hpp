#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hebg2p {

// Levenshtein distance with unit costs, two-row dynamic programming.
template <typename T>
std::size_t edit_distance(std::span<const T> ref, std::span<const T> hyp) {
  std::vector<std::size_t> prev(hyp.size() + 1);
  std::vector<std::size_t> cur(hyp.size() + 1);
  for (std::size_t j = 0; j <= hyp.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= ref.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= hyp.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[hyp.size()];
}

template <typename T>
std::size_t edit_distance(const std::vector<T>& ref, const std::vector<T>& hyp) {
  return edit_distance(std::span<const T>(ref), std::span<const T>(hyp));
}

enum class MetricsErrorKind { EmptyReference, EmptyCorpus };

class MetricsError : public std::invalid_argument {
 public:
  MetricsError(MetricsErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

  MetricsErrorKind kind() const { return kind_; }

 private:
  MetricsErrorKind kind_;
};

// Space-separated word tokens (runs of spaces never produce empty tokens).
std::vector<std::string> split_words(std::string_view ipa);

// Word error rate over whole-word tokens, stress marks included.
double wer(std::string_view ref, std::string_view hyp);
// WER after stripping every stress mark from both sides.
double wer_sigma(std::string_view ref, std::string_view hyp);
// Edit distance over Unicode scalars (spaces and stress marks included).
double cer(std::string_view ref, std::string_view hyp);

struct EvalPair {
  std::string id;
  std::string ref;
  std::string hyp;
};

struct ItemScore {
  std::string id;
  double wer = 0;
  double cer = 0;
  double wer_sigma = 0;
  std::string ref;
  std::string hyp;
  std::size_t word_edits = 0;
  std::size_t word_edits_sigma = 0;
  std::size_t ref_words = 0;
  std::size_t char_edits = 0;
  std::size_t ref_chars = 0;
};

struct EvalReport {
  // Micro-averaged: total edits over total reference units.
  double wer = 0;
  double cer = 0;
  double wer_sigma = 0;
  std::vector<ItemScore> per_item;

  // Column table; corpus ratios are displayed capped at 1.00.
  std::string to_table(std::string_view label = "hyp") const;
  std::string to_json() const;
};

ItemScore score_item(const EvalPair& pair);

// Throws MetricsError on an empty corpus or an empty reference.
EvalReport evaluate_corpus(std::span<const EvalPair> pairs);

}  // namespace hebg2p
