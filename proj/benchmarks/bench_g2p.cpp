#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "hebg2p/corpus.hpp"
#include "hebg2p/diacritizer.hpp"
#include "hebg2p/g2p.hpp"
#include "hebg2p/metrics.hpp"
#include "hebg2p/pipeline.hpp"

namespace {

using namespace hebg2p;

std::vector<std::string> golden_lines() {
  std::vector<std::string> out;
  for (const auto& g : golden_examples()) out.push_back(g.vocalized);
  return out;
}

void BM_Normalize(benchmark::State& state) {
  const std::string text(north_wind_text());
  for (auto _ : state) benchmark::DoNotOptimize(normalize(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Normalize);

void BM_PhonemizeGolden(benchmark::State& state) {
  const auto lines = golden_lines();
  const Engine engine;
  for (auto _ : state) {
    for (const auto& l : lines) benchmark::DoNotOptimize(engine.phonemize(l));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * lines.size()));
}
BENCHMARK(BM_PhonemizeGolden);

void BM_DefaultsNorthWind(benchmark::State& state) {
  const std::string text(north_wind_text());
  for (auto _ : state) benchmark::DoNotOptimize(apply_defaults(text));
}
BENCHMARK(BM_DefaultsNorthWind);

void BM_PipelineJobs(benchmark::State& state) {
  std::vector<std::string> lines;
  for (int i = 0; i < 64; ++i) {
    for (const auto& l : golden_lines()) lines.push_back(l);
  }
  PipelineConfig cfg;
  cfg.provider = ProviderKind::Defaults;
  cfg.jobs = static_cast<std::size_t>(state.range(0));
  const Pipeline pipeline(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(pipeline.run(lines));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * lines.size()));
}
BENCHMARK(BM_PipelineJobs)->Arg(1)->Arg(4);

void BM_EvaluateCorpus(benchmark::State& state) {
  std::vector<EvalPair> pairs;
  for (int i = 0; i < 1000; ++i) {
    pairs.push_back({std::to_string(i), "ʃaˈlom ˈboker ˈtov ˈlexem", "ʃaˈlom boˈker ˈtov leˈxem"});
  }
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_corpus(pairs));
}
BENCHMARK(BM_EvaluateCorpus);

}  // namespace

BENCHMARK_MAIN();
