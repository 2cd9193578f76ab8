#include "hebg2p/pipeline.hpp"

namespace hebg2p {

Pipeline::Pipeline(PipelineConfig config)
    : config_(std::move(config)),
      diacritizer_(config_.provider, config_.remote),
      engine_(config_.lexicon, config_.convention) {}

ChunkResult Pipeline::run(const std::vector<std::string>& lines) const {
  DiacritizeResult enhanced = diacritizer_.run(lines);
  ChunkResult out;
  out.provider_diagnostics = std::move(enhanced.diagnostics);
  out.lines.resize(lines.size());
  parallel_for(lines.size(), config_.jobs, [&](std::size_t i) {
    out.lines[i].phonemes = engine_.phonemize(enhanced.lines[i]);
    out.lines[i].enhanced = std::move(enhanced.lines[i]);
  });
  return out;
}

std::string Pipeline::phonemize_line(const std::string& line) const {
  return std::move(run({line}).lines.front().phonemes.ipa);
}

}  // namespace hebg2p
