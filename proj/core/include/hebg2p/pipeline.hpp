#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hebg2p/diacritizer.hpp"
#include "hebg2p/g2p.hpp"

namespace hebg2p {

struct PipelineConfig {
  Convention convention = kBroadSyllable;
  ProviderKind provider = ProviderKind::Passthrough;
  RemoteConfig remote;
  std::shared_ptr<const Lexicon> lexicon;  // null = built-in
  std::size_t jobs = 1;
};

struct LineResult {
  std::string enhanced;  // provider output
  PhonemizeResult phonemes;
};

struct ChunkResult {
  std::vector<LineResult> lines;
  std::vector<ProviderDiagnostic> provider_diagnostics;
};

// Diacritizer followed by the phonemizer, one output per input line.
// Lines are spread over `jobs` threads; output order is input order.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config);

  ChunkResult run(const std::vector<std::string>& lines) const;
  std::string phonemize_line(const std::string& line) const;

  const PipelineConfig& config() const { return config_; }

 private:
  PipelineConfig config_;
  Diacritizer diacritizer_;
  Engine engine_;
};

// Runs fn(i) for i in [0, n) on up to `jobs` threads.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn&& fn);

}  // namespace hebg2p

#include <algorithm>
#include <thread>

namespace hebg2p {

template <typename Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn&& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (std::size_t t = 0; t < jobs; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += jobs) fn(i);
    });
  }
  for (auto& th : threads) th.join();
}

}  // namespace hebg2p
