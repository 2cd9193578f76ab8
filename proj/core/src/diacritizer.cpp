#include "hebg2p/diacritizer.hpp"

#include <chrono>
#include <cstdlib>
#include <future>

#include "httplib.h"
#include "json.hpp"

namespace hebg2p {

namespace {

struct Endpoint {
  std::string host;  // scheme://host:port, as httplib::Client expects
  std::string path;
};

Endpoint split_endpoint(const std::string& url) {
  const std::size_t scheme = url.find("://");
  if (scheme == std::string::npos || url.substr(0, scheme) != "http") {
    throw std::invalid_argument("diacritizer endpoint must be an http:// URL: '" + url + "'");
  }
  const std::size_t slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

bool has_enhanced_mark(const Word& w) {
  for (const auto& c : w.clusters) {
    if (c.prefix_boundary_after || c.has(MarkKind::Stress) || c.has(MarkKind::VocalShva)) return true;
  }
  return false;
}

// Normalized text whose every word parses; nullopt otherwise.
std::optional<std::string> validated(std::string_view line) {
  std::string norm = normalize(line);
  try {
    for (const auto& seg : tokenize(norm).segments) {
      if (seg.kind == SegmentKind::Word) parse_word(seg.text);
    }
  } catch (const WordError&) {
    return std::nullopt;
  }
  return norm;
}

}  // namespace

std::string_view to_string(ProviderKind kind) {
  switch (kind) {
    case ProviderKind::Passthrough: return "passthrough";
    case ProviderKind::Defaults: return "defaults";
    case ProviderKind::Remote: return "remote";
  }
  return "?";
}

std::optional<ProviderKind> parse_provider_kind(std::string_view name) {
  for (auto k : {ProviderKind::Passthrough, ProviderKind::Defaults, ProviderKind::Remote}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

RemoteConfig RemoteConfig::from_environment() {
  RemoteConfig config;
  if (const char* url = std::getenv(std::string(kDiacritizerUrlEnv).c_str())) config.endpoint = url;
  if (const char* token = std::getenv(std::string(kDiacritizerTokenEnv).c_str()); token && *token) {
    config.auth_token = token;
  }
  return config;
}

void RemoteConfig::validate() const {
  if (endpoint.empty()) throw std::invalid_argument("no diacritizer endpoint configured");
  split_endpoint(endpoint);
  if (timeout_ms <= 0) throw std::invalid_argument("diacritizer timeout must be positive");
  if (max_batch_lines == 0) throw std::invalid_argument("diacritizer batch size must be at least 1");
  if (max_in_flight == 0) throw std::invalid_argument("at least one batch must be allowed in flight");
}

std::string apply_defaults(std::string_view text, const ShvaRules& rules) {
  std::string out;
  for (const auto& seg : tokenize(normalize(text)).segments) {
    if (seg.kind != SegmentKind::Word) {
      out += seg.text;
      continue;
    }
    try {
      const Word w = parse_word(seg.text);
      out += has_enhanced_mark(w) ? seg.text : serialize(apply_shva_rules(w, rules));
    } catch (const WordError&) {
      // Left as is; the phonemizer reports it.
      out += seg.text;
    }
  }
  return out;
}

std::string_view to_string(RemoteErrorKind kind) {
  switch (kind) {
    case RemoteErrorKind::Timeout: return "Timeout";
    case RemoteErrorKind::HttpStatus: return "HttpStatus";
    case RemoteErrorKind::ProtocolError: return "ProtocolError";
    case RemoteErrorKind::Unreachable: return "Unreachable";
  }
  return "?";
}

RemoteError::RemoteError(RemoteErrorKind kind, std::size_t batch, const std::string& detail, int status)
    : std::runtime_error(std::string(to_string(kind)) +
                         (kind == RemoteErrorKind::HttpStatus ? "(" + std::to_string(status) + ")" : "") +
                         " in batch " + std::to_string(batch) + ": " + detail),
      kind_(kind),
      batch_(batch),
      status_(status) {}

std::vector<std::string> request_batch(const std::vector<std::string>& lines, const RemoteConfig& config,
                                       std::size_t batch_index) {
  const Endpoint ep = split_endpoint(config.endpoint);
  httplib::Client client(ep.host);
  const auto timeout = std::chrono::milliseconds(config.timeout_ms);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  if (config.auth_token) client.set_bearer_token_auth(*config.auth_token);

  const std::string body = nlohmann::json{{"lines", lines}}.dump();
  const auto started = std::chrono::steady_clock::now();
  const auto res = client.Post(ep.path, body, "application/json");
  if (!res) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    const auto err = res.error();
    if (err == httplib::Error::ConnectionTimeout || elapsed >= timeout) {
      throw RemoteError(RemoteErrorKind::Timeout, batch_index,
                        "no response within " + std::to_string(config.timeout_ms) + " ms");
    }
    throw RemoteError(RemoteErrorKind::Unreachable, batch_index, httplib::to_string(err));
  }
  if (res->status != 200) {
    throw RemoteError(RemoteErrorKind::HttpStatus, batch_index, "unexpected status", res->status);
  }

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::parse_error& e) {
    throw RemoteError(RemoteErrorKind::ProtocolError, batch_index, std::string("response is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array()) {
    throw RemoteError(RemoteErrorKind::ProtocolError, batch_index, "response lacks a \"lines\" array");
  }
  const auto& arr = j["lines"];
  if (arr.size() != lines.size()) {
    throw RemoteError(RemoteErrorKind::ProtocolError, batch_index,
                      "sent " + std::to_string(lines.size()) + " lines, received " + std::to_string(arr.size()));
  }
  std::vector<std::string> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_string()) throw RemoteError(RemoteErrorKind::ProtocolError, batch_index, "non-string line");
    out.push_back(v.get<std::string>());
  }
  return out;
}

DiacritizeResult diacritize_remote(const std::vector<std::string>& lines, const RemoteConfig& config) {
  config.validate();
  DiacritizeResult result;
  result.lines.resize(lines.size());
  const std::size_t batch_size = config.max_batch_lines;
  const std::size_t batches = (lines.size() + batch_size - 1) / batch_size;

  struct Outcome {
    std::vector<std::string> lines;
    std::optional<RemoteError> error;
  };
  auto run_batch = [&](std::size_t b) {
    const auto first = lines.begin() + static_cast<std::ptrdiff_t>(b * batch_size);
    const auto last = lines.begin() + static_cast<std::ptrdiff_t>(std::min(lines.size(), (b + 1) * batch_size));
    const std::vector<std::string> chunk(first, last);
    Outcome o;
    try {
      o.lines = request_batch(chunk, config, b);
    } catch (const RemoteError& e) {
      o.error = e;
    }
    return o;
  };

  for (std::size_t wave = 0; wave < batches; wave += config.max_in_flight) {
    const std::size_t wave_end = std::min(batches, wave + config.max_in_flight);
    std::vector<std::future<Outcome>> pending;
    for (std::size_t b = wave; b < wave_end; ++b) pending.push_back(std::async(std::launch::async, run_batch, b));

    for (std::size_t b = wave; b < wave_end; ++b) {
      Outcome o = pending[b - wave].get();
      const std::size_t begin = b * batch_size;
      const std::size_t end = std::min(lines.size(), begin + batch_size);
      if (o.error) {
        result.diagnostics.push_back({o.error->kind(), b, std::nullopt, o.error->status(), o.error->what()});
        for (std::size_t i = begin; i < end; ++i) result.lines[i] = apply_defaults(lines[i]);
        continue;
      }
      for (std::size_t i = begin; i < end; ++i) {
        if (auto ok = validated(o.lines[i - begin])) {
          result.lines[i] = std::move(*ok);
        } else {
          result.diagnostics.push_back({RemoteErrorKind::ProtocolError, b, i, 0,
                                        "line " + std::to_string(i + 1) +
                                            ": malformed diacritics in response; using defaults"});
          result.lines[i] = apply_defaults(lines[i]);
        }
      }
    }
  }
  return result;
}

Diacritizer::Diacritizer(ProviderKind kind, RemoteConfig remote) : kind_(kind), remote_(std::move(remote)) {
  if (kind_ == ProviderKind::Remote) remote_.validate();
}

DiacritizeResult Diacritizer::run(const std::vector<std::string>& lines) const {
  switch (kind_) {
    case ProviderKind::Passthrough:
      return {lines, {}};
    case ProviderKind::Defaults: {
      DiacritizeResult r;
      r.lines.reserve(lines.size());
      for (const auto& l : lines) r.lines.push_back(apply_defaults(l));
      return r;
    }
    case ProviderKind::Remote:
      return diacritize_remote(lines, remote_);
  }
  return {lines, {}};
}

}  // namespace hebg2p
