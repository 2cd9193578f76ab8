#include <chrono>
#include <cstdlib>

#include <gtest/gtest.h>

#include "hebg2p/diacritizer.hpp"
#include "hebg2p/g2p.hpp"
#include "mock_diacritizer.hpp"

namespace hebg2p {
namespace {

using Mock = testing::MockDiacritizer;

RemoteConfig config_for(const Mock& mock, std::size_t batch = 2) {
  RemoteConfig c;
  c.endpoint = mock.url();
  c.max_batch_lines = batch;
  c.timeout_ms = 2000;
  return c;
}

std::vector<std::string> sample_lines(std::size_t n) {
  const char* words[] = {"שָׁלוֹם", "בֹּקֶר טוֹב", "לֶחֶם", "תִּשְׁמְרוּ"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(words[i % 4]);
  return out;
}

TEST(ProviderKind, NamesRoundTrip) {
  for (auto k : {ProviderKind::Passthrough, ProviderKind::Defaults, ProviderKind::Remote}) {
    EXPECT_EQ(parse_provider_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_provider_kind("neural"));
}

TEST(RemoteConfig, Validation) {
  RemoteConfig c;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.endpoint = "https://example.org/x";
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.endpoint = "http://127.0.0.1:9/x";
  EXPECT_NO_THROW(c.validate());
  c.timeout_ms = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.timeout_ms = 10;
  c.max_batch_lines = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.max_batch_lines = 1;
  c.max_in_flight = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_THROW(Diacritizer(ProviderKind::Remote, RemoteConfig{}), std::invalid_argument);
}

TEST(RemoteConfig, FromEnvironment) {
  ::setenv(std::string(kDiacritizerUrlEnv).c_str(), "http://localhost:1/d", 1);
  ::setenv(std::string(kDiacritizerTokenEnv).c_str(), "secret", 1);
  const auto c = RemoteConfig::from_environment();
  EXPECT_EQ(c.endpoint, "http://localhost:1/d");
  EXPECT_EQ(c.auth_token, "secret");
  ::unsetenv(std::string(kDiacritizerUrlEnv).c_str());
  ::unsetenv(std::string(kDiacritizerTokenEnv).c_str());
  EXPECT_TRUE(RemoteConfig::from_environment().endpoint.empty());
}

TEST(Defaults, AddsOnlyVocalShva) {
  EXPECT_EQ(apply_defaults("תִּשְׁמְרוּ!"), normalize("תִּשְׁמְֽרוּ!"));
  // Words that already carry an enhanced mark are left alone.
  EXPECT_EQ(apply_defaults("תִּשְׁמְרוּ֫"), normalize("תִּשְׁמְרוּ֫"));
  EXPECT_EQ(apply_defaults("abc 12"), "abc 12");
  const std::string out = apply_defaults("לֶחֶם הַפִּינְגְּוִין");
  EXPECT_EQ(out.find("֫"), std::string::npos);
  EXPECT_EQ(out.find("׀"), std::string::npos);
}

TEST(Defaults, PhonemizesWithFinalStress) {
  const Diacritizer d(ProviderKind::Defaults);
  const auto r = d.run({"בֹּקֶר טוֹב"});
  EXPECT_EQ(phonemize(r.lines[0], kBroadSyllable, Lexicon::builtin()).ipa, "boˈker ˈtov");
}

TEST(Passthrough, ReturnsInput) {
  const auto lines = sample_lines(3);
  const auto r = Diacritizer().run(lines);
  EXPECT_EQ(r.lines, lines);
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(Remote, EchoPreservesOrderAcrossBatches) {
  Mock mock;
  mock.set_mode(Mock::Mode::Transform);
  mock.set_transform([](const std::string& l) { return l + " " + l; });
  const auto lines = sample_lines(7);
  auto c = config_for(mock, 2);
  c.max_in_flight = 3;
  const auto r = diacritize_remote(lines, c);
  EXPECT_TRUE(r.diagnostics.empty());
  ASSERT_EQ(r.lines.size(), lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) EXPECT_EQ(r.lines[i], normalize(lines[i] + " " + lines[i]));
  EXPECT_EQ(mock.requests(), 4);
}

TEST(Remote, SendsBearerToken) {
  Mock mock;
  auto c = config_for(mock);
  c.auth_token = "tok123";
  diacritize_remote(sample_lines(1), c);
  EXPECT_EQ(mock.last_auth(), "Bearer tok123");
}

TEST(Remote, RequestBatchErrors) {
  Mock mock;
  const auto c = config_for(mock);
  const auto kind_of = [&](Mock::Mode mode, int* status = nullptr) {
    mock.set_mode(mode);
    try {
      request_batch(sample_lines(2), c, 5);
    } catch (const RemoteError& e) {
      EXPECT_EQ(e.batch(), 5U);
      if (status) *status = e.status();
      return e.kind();
    }
    ADD_FAILURE() << "no error";
    return RemoteErrorKind::Unreachable;
  };
  int status = 0;
  EXPECT_EQ(kind_of(Mock::Mode::Status500, &status), RemoteErrorKind::HttpStatus);
  EXPECT_EQ(status, 500);
  EXPECT_EQ(kind_of(Mock::Mode::NotJson), RemoteErrorKind::ProtocolError);
  EXPECT_EQ(kind_of(Mock::Mode::WrongCount), RemoteErrorKind::ProtocolError);
}

TEST(Remote, Timeout) {
  Mock mock;
  mock.set_mode(Mock::Mode::Slow);
  mock.set_slow_ms(1500);
  auto c = config_for(mock, 10);
  c.timeout_ms = 200;
  const auto started = std::chrono::steady_clock::now();
  try {
    request_batch(sample_lines(1), c);
    FAIL();
  } catch (const RemoteError& e) {
    EXPECT_EQ(e.kind(), RemoteErrorKind::Timeout);
  }
  EXPECT_LT(std::chrono::steady_clock::now() - started, std::chrono::milliseconds(1400));
}

TEST(Remote, Unreachable) {
  std::string url;
  {
    Mock gone;
    url = gone.url();
  }
  RemoteConfig c;
  c.endpoint = url;
  c.timeout_ms = 1000;
  try {
    request_batch(sample_lines(1), c);
    FAIL();
  } catch (const RemoteError& e) {
    EXPECT_EQ(e.kind(), RemoteErrorKind::Unreachable);
  }
}

TEST(Remote, FailedBatchFallsBackToDefaults) {
  Mock mock;
  mock.set_mode(Mock::Mode::Status500);
  const auto lines = sample_lines(5);
  const auto r = diacritize_remote(lines, config_for(mock, 2));
  ASSERT_EQ(r.lines.size(), 5U);
  for (std::size_t i = 0; i < lines.size(); ++i) EXPECT_EQ(r.lines[i], apply_defaults(lines[i]));
  ASSERT_EQ(r.diagnostics.size(), 3U);
  for (std::size_t b = 0; b < 3; ++b) {
    EXPECT_EQ(r.diagnostics[b].kind, RemoteErrorKind::HttpStatus);
    EXPECT_EQ(r.diagnostics[b].batch, b);
    EXPECT_EQ(r.diagnostics[b].status, 500);
    EXPECT_FALSE(r.diagnostics[b].line);
  }
}

TEST(Remote, MalformedLineFallsBackAlone) {
  Mock mock;
  mock.set_mode(Mock::Mode::Transform);
  // Two vowels on one letter cannot be parsed.
  mock.set_transform([](const std::string& l) { return l == "לֶחֶם" ? std::string("בַָ") : l; });
  const auto lines = sample_lines(4);
  const auto r = diacritize_remote(lines, config_for(mock, 4));
  ASSERT_EQ(r.diagnostics.size(), 1U);
  EXPECT_EQ(r.diagnostics[0].kind, RemoteErrorKind::ProtocolError);
  EXPECT_EQ(r.diagnostics[0].line, 2U);
  EXPECT_EQ(r.lines[2], apply_defaults(lines[2]));
  EXPECT_EQ(r.lines[0], normalize(lines[0]));
}

TEST(Remote, EmptyInputSendsNothing) {
  Mock mock;
  const auto r = diacritize_remote({}, config_for(mock));
  EXPECT_TRUE(r.lines.empty());
  EXPECT_EQ(mock.requests(), 0);
}

}  // namespace
}  // namespace hebg2p
