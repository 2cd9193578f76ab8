// A local HTTP server speaking the remote diacritizer wire format, with
// switchable failure modes.
#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "json.hpp"

namespace hebg2p::testing {

class MockDiacritizer {
 public:
  enum class Mode { Echo, Transform, Status500, Slow, NotJson, WrongCount };

  MockDiacritizer() {
    server_.Post("/diacritize", [this](const httplib::Request& req, httplib::Response& res) {
      ++requests_;
      {
        std::lock_guard<std::mutex> lock(mu_);
        last_auth_ = req.get_header_value("Authorization");
      }
      switch (mode_.load()) {
        case Mode::Status500:
          res.status = 500;
          res.set_content("boom", "text/plain");
          return;
        case Mode::Slow:
          std::this_thread::sleep_for(std::chrono::milliseconds(slow_ms_));
          break;
        case Mode::NotJson:
          res.set_content("<html>not json</html>", "text/html");
          return;
        default:
          break;
      }
      auto body = nlohmann::json::parse(req.body);
      std::vector<std::string> lines = body.at("lines").get<std::vector<std::string>>();
      if (mode_ == Mode::WrongCount) lines.push_back("extra");
      if (mode_ == Mode::Transform && transform_) {
        for (auto& l : lines) l = transform_(l);
      }
      res.set_content(nlohmann::json{{"lines", lines}}.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~MockDiacritizer() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  MockDiacritizer(const MockDiacritizer&) = delete;
  MockDiacritizer& operator=(const MockDiacritizer&) = delete;

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/diacritize"; }
  void set_mode(Mode m) { mode_ = m; }
  void set_slow_ms(int ms) { slow_ms_ = ms; }
  // Only used in Transform mode; must be set before requests arrive.
  void set_transform(std::function<std::string(const std::string&)> f) { transform_ = std::move(f); }
  int requests() const { return requests_; }
  std::string last_auth() const {
    std::lock_guard<std::mutex> lock(mu_);
    return last_auth_;
  }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<Mode> mode_{Mode::Echo};
  std::atomic<int> slow_ms_{500};
  std::atomic<int> requests_{0};
  std::function<std::string(const std::string&)> transform_;
  mutable std::mutex mu_;
  std::string last_auth_;
};

}  // namespace hebg2p::testing
