/* C interface for foreign-language bindings. Every function catches all
 * exceptions; failures come back as a status code plus an optional message
 * the caller releases with hebg2p_free. */
#ifndef HEBG2P_C_API_H
#define HEBG2P_C_API_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef uint64_t hebg2p_session;

enum hebg2p_status {
  HEBG2P_OK = 0,
  HEBG2P_ERR_CLOSED_SESSION = 1,
  HEBG2P_ERR_INVALID_ARGUMENT = 2,
  HEBG2P_ERR_ENGINE = 3
};

/* lexicon_path may be NULL for the built-in lexicon. narrow selects the
 * uvular symbol set; stress_before_vowel moves the stress mark from the
 * syllable onset to the vowel. */
int hebg2p_session_open(const char* lexicon_path, int narrow, int stress_before_vowel, hebg2p_session* out,
                        char** error);

/* Phonemizes line by line, like the command-line tool. */
int hebg2p_phonemize(hebg2p_session session, const char* text, char** out, char** error);

/* Closing twice, or an unknown handle, returns HEBG2P_ERR_CLOSED_SESSION. */
int hebg2p_session_close(hebg2p_session session);

int hebg2p_normalize(const char* text, char** out, char** error);
int hebg2p_apply_defaults(const char* text, char** out, char** error);

void hebg2p_free(char* ptr);

#ifdef __cplusplus
}
#endif

#endif
