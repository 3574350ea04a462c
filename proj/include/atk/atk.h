/* C interface to the exact Lie-algebra connection toolkit. All computation
 * is exact rational arithmetic; reports carry rationals as strings. Handles
 * are opaque; every entry point reports failures through status codes and a
 * retrievable diagnostic. */

#ifndef ATK_H
#define ATK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct atk_session atk_session;

typedef enum atk_status {
  ATK_OK = 0,
  ATK_ERROR_PARSE = 1,    /* malformed problem file (diagnostic has line/column) */
  ATK_ERROR_ARGUMENT = 2, /* null handle or missing input */
  ATK_ERROR_IO = 3,       /* file not readable */
  ATK_ERROR_INTERNAL = 4
} atk_status;

atk_session* atk_session_new(void);
void atk_session_free(atk_session* session);

/* Load a problem file (replacing any previously loaded one). */
atk_status atk_load_file(atk_session* session, const char* path);
atk_status atk_load_string(atk_session* session, const char* text);

/* Run the loaded tasks in order. seed feeds randomized tasks; strict turns
 * mathematical obstructions into exit code 1; json selects one JSON object
 * per task instead of text blocks. */
atk_status atk_run(atk_session* session, uint64_t seed, int strict, int json);

/* Run the built-in property/acceptance suite; no problem file needed. */
atk_status atk_selftest(atk_session* session, uint64_t seed, int json);

/* Report text of the last run. Owned by the session; valid until the next
 * run or atk_session_free. Never NULL on a live session. */
const char* atk_report(const atk_session* session);

/* Diagnostic message of the last failed call ("" when none). */
const char* atk_error_message(const atk_session* session);

/* Exit code of the last run: 0 all passed, 1 check failed or obstruction
 * under strict, 2 input error. */
int atk_exit_code(const atk_session* session);

const char* atk_version(void);

#ifdef __cplusplus
}
#endif

#endif /* ATK_H */
