#include "hebg2p/c_api.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "hebg2p/diacritizer.hpp"
#include "hebg2p/g2p.hpp"

namespace {

std::mutex g_mutex;
std::unordered_map<hebg2p_session, std::shared_ptr<const hebg2p::Engine>> g_sessions;
hebg2p_session g_next = 1;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p != nullptr) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

int fail(int status, const std::string& message, char** error) {
  if (error != nullptr) *error = dup_string(message);
  return status;
}

template <typename F>
int guarded(char** error, F&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    return fail(HEBG2P_ERR_INVALID_ARGUMENT, e.what(), error);
  } catch (const std::exception& e) {
    return fail(HEBG2P_ERR_ENGINE, e.what(), error);
  } catch (...) {
    return fail(HEBG2P_ERR_ENGINE, "unknown error", error);
  }
}

std::shared_ptr<const hebg2p::Engine> find_session(hebg2p_session s) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_sessions.find(s);
  return it == g_sessions.end() ? nullptr : it->second;
}

}  // namespace

extern "C" {

int hebg2p_session_open(const char* lexicon_path, int narrow, int stress_before_vowel, hebg2p_session* out,
                        char** error) {
  return guarded(error, [&] {
    if (out == nullptr) return fail(HEBG2P_ERR_INVALID_ARGUMENT, "null session pointer", error);
    std::shared_ptr<const hebg2p::Lexicon> lexicon;
    if (lexicon_path != nullptr) lexicon = std::make_shared<const hebg2p::Lexicon>(hebg2p::Lexicon::load(lexicon_path));
    hebg2p::Convention convention;
    convention.narrowness = narrow ? hebg2p::Narrowness::Narrow : hebg2p::Narrowness::Broad;
    convention.stress = stress_before_vowel ? hebg2p::StressPosition::BeforeVowel : hebg2p::StressPosition::BeforeSyllable;
    auto engine = std::make_shared<const hebg2p::Engine>(std::move(lexicon), convention);
    std::lock_guard<std::mutex> lock(g_mutex);
    *out = g_next++;
    g_sessions.emplace(*out, std::move(engine));
    return static_cast<int>(HEBG2P_OK);
  });
}

int hebg2p_phonemize(hebg2p_session session, const char* text, char** out, char** error) {
  return guarded(error, [&] {
    if (text == nullptr || out == nullptr) return fail(HEBG2P_ERR_INVALID_ARGUMENT, "null argument", error);
    const auto engine = find_session(session);
    if (!engine) return fail(HEBG2P_ERR_CLOSED_SESSION, "session is closed", error);
    const std::string_view input(text);
    std::string result;
    std::size_t pos = 0;
    while (true) {
      const std::size_t nl = input.find('\n', pos);
      result += engine->phonemize(input.substr(pos, nl == std::string_view::npos ? nl : nl - pos)).ipa;
      if (nl == std::string_view::npos) break;
      result += '\n';
      pos = nl + 1;
    }
    *out = dup_string(result);
    return static_cast<int>(HEBG2P_OK);
  });
}

int hebg2p_session_close(hebg2p_session session) {
  std::lock_guard<std::mutex> lock(g_mutex);
  return g_sessions.erase(session) == 1 ? HEBG2P_OK : HEBG2P_ERR_CLOSED_SESSION;
}

int hebg2p_normalize(const char* text, char** out, char** error) {
  return guarded(error, [&] {
    if (text == nullptr || out == nullptr) return fail(HEBG2P_ERR_INVALID_ARGUMENT, "null argument", error);
    *out = dup_string(hebg2p::normalize(text));
    return static_cast<int>(HEBG2P_OK);
  });
}

int hebg2p_apply_defaults(const char* text, char** out, char** error) {
  return guarded(error, [&] {
    if (text == nullptr || out == nullptr) return fail(HEBG2P_ERR_INVALID_ARGUMENT, "null argument", error);
    *out = dup_string(hebg2p::apply_defaults(text));
    return static_cast<int>(HEBG2P_OK);
  });
}

void hebg2p_free(char* ptr) { std::free(ptr); }

}  // extern "C"
