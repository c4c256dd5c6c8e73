/* C interface to the colored diagram-category toolkit.
 *
 * Every command produces an opaque report carrying the artifact text (JSON or
 * CSV, newline-terminated, byte-deterministic for identical inputs) and a
 * pass/fail verdict. Functions return TLC_OK when a report was produced,
 * including reports whose verdict is negative; use tlc_report_passed for the
 * verdict. On any other status no report is produced and tlc_last_error
 * carries a message describing the failure.
 *
 * Category ids: "o", "h", "s", "s-prime", "u", "k", "p".
 * Words are strings over the letters 'a' and 'b'; "" is the empty word.
 * Formats: "json" or "csv".
 */
#ifndef TLCAT_H
#define TLCAT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TLC_API __declspec(dllexport)
#else
#define TLC_API __attribute__((visibility("default")))
#endif

typedef enum tlc_status {
  TLC_OK = 0,
  TLC_ERR_INVALID_ARGUMENT = 1,
  TLC_ERR_WORD_MISMATCH = 2,
  TLC_ERR_CAP_EXCEEDED = 3,
  TLC_ERR_PARSE = 4,
  TLC_ERR_INTERNAL = 5
} tlc_status;

typedef struct tlc_report tlc_report;

/* Called once per closure round by the long-running commands. */
typedef void (*tlc_progress_fn)(unsigned round,
                                unsigned long long frontier,
                                unsigned long long discovered, void* user);

/* Cell listing in canonical order. */
TLC_API tlc_status tlc_enumerate(const char* category, const char* upper,
                                 const char* lower, unsigned max_points,
                                 const char* format, tlc_report** out);

/* Closure of the category's presentation generators vs its predicate cells. */
TLC_API tlc_status tlc_closure_check(const char* category, unsigned max_points,
                                     unsigned slack, const char* format,
                                     tlc_progress_fn progress, void* user,
                                     tlc_report** out);

/* Complexification/decomplexification round trip (plus the h/k direction
 * verdicts when the category is h or k). */
TLC_API tlc_status tlc_roundtrip(const char* category, unsigned max_points,
                                 unsigned slack, const char* format,
                                 tlc_progress_fn progress, void* user,
                                 tlc_report** out);

/* Fixed-cell counts for k = 0..max_k. */
TLC_API tlc_status tlc_moments(const char* category, size_t max_k,
                               const char* format, tlc_report** out);

TLC_API tlc_status tlc_level(const char* category, unsigned cap,
                             const char* format, tlc_report** out);

/* Gram-matrix rank of the cell (upper, lower) at dimension n. */
TLC_API tlc_status tlc_gram(const char* category, const char* upper,
                            const char* lower, unsigned n, const char* format,
                            tlc_report** out);

/* Free-product embedding check. Exactly one of `builtin` (a name among
 * "z2", "z4", "z2xz2", "s3") and `cayley_json` (the table document) must be
 * non-NULL; `label` names the group in the report. */
TLC_API tlc_status tlc_group_check(const char* builtin,
                                   const char* cayley_json, const char* label,
                                   unsigned radius, const char* format,
                                   tlc_report** out);

TLC_API const char* tlc_report_text(const tlc_report* report);
TLC_API int tlc_report_passed(const tlc_report* report);
TLC_API void tlc_report_free(tlc_report* report);

/* Message for the most recent failing call on this thread; never NULL. */
TLC_API const char* tlc_last_error(void);
TLC_API const char* tlc_status_name(tlc_status status);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TLCAT_H */
