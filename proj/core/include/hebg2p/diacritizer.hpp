#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hebg2p/pseudo_gt.hpp"

namespace hebg2p {

enum class ProviderKind { Passthrough, Defaults, Remote };

std::string_view to_string(ProviderKind kind);
std::optional<ProviderKind> parse_provider_kind(std::string_view name);

inline constexpr std::string_view kDiacritizerUrlEnv = "PHONIKUD_DIACRITIZER_URL";
inline constexpr std::string_view kDiacritizerTokenEnv = "PHONIKUD_DIACRITIZER_TOKEN";

struct RemoteConfig {
  std::string endpoint;  // http://host[:port][/path]
  int timeout_ms = 5000;
  std::size_t max_batch_lines = 64;
  std::size_t max_in_flight = 2;
  std::optional<std::string> auth_token;  // sent as a bearer token

  // Endpoint and token from the environment, other fields defaulted.
  static RemoteConfig from_environment();
  // Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

// Normalizes and adds VOCAL_SHVA by the shva rules to every word that has
// no enhanced mark yet. Never adds STRESS or prefix separators, so stress
// falls back to the final-stress default downstream.
std::string apply_defaults(std::string_view text, const ShvaRules& rules = {});

enum class RemoteErrorKind { Timeout, HttpStatus, ProtocolError, Unreachable };

std::string_view to_string(RemoteErrorKind kind);

class RemoteError : public std::runtime_error {
 public:
  RemoteError(RemoteErrorKind kind, std::size_t batch, const std::string& detail, int status = 0);

  RemoteErrorKind kind() const { return kind_; }
  std::size_t batch() const { return batch_; }
  int status() const { return status_; }

 private:
  RemoteErrorKind kind_;
  std::size_t batch_;
  int status_;
};

// One POST of {"lines": [...]} expecting {"lines": [...]} of equal length.
// Returned lines are not validated here. Throws RemoteError.
std::vector<std::string> request_batch(const std::vector<std::string>& lines, const RemoteConfig& config,
                                       std::size_t batch_index = 0);

struct ProviderDiagnostic {
  RemoteErrorKind kind = RemoteErrorKind::ProtocolError;
  std::size_t batch = 0;
  std::optional<std::size_t> line;  // input line index, for per-line failures
  int status = 0;
  std::string message;
};

struct DiacritizeResult {
  std::vector<std::string> lines;  // same count as the input
  std::vector<ProviderDiagnostic> diagnostics;
};

// Batches the input, sends up to max_in_flight batches at a time and
// reassembles in order. A failed batch, or a returned line that does not
// parse, falls back to apply_defaults and records a diagnostic.
DiacritizeResult diacritize_remote(const std::vector<std::string>& lines, const RemoteConfig& config);

class Diacritizer {
 public:
  explicit Diacritizer(ProviderKind kind = ProviderKind::Passthrough, RemoteConfig remote = {});

  ProviderKind kind() const { return kind_; }
  DiacritizeResult run(const std::vector<std::string>& lines) const;

 private:
  ProviderKind kind_;
  RemoteConfig remote_;
};

}  // namespace hebg2p
