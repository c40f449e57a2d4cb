#ifndef EALA_C_H
#define EALA_C_H

/* C interface to the scenario runner. Reports are JSON text owned by the
   handle; free handles with the matching destroy call. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define EALA_API __declspec(dllexport)
#else
#define EALA_API __attribute__((visibility("default")))
#endif

typedef enum {
  EALA_OK = 0,
  EALA_CHECK_FAILED = 1, /* ran, and some check failed */
  EALA_INPUT_ERROR = 2,  /* malformed JSON, schema violation, unresolvable automorphism */
  EALA_INTERNAL_ERROR = 3
} eala_status;

typedef struct eala_report eala_report;

/* Runs every scenario in `json_text` (one object or an array). window <= 0
   keeps each scenario's own window; timing != 0 adds wall-clock timings. On
   EALA_OK or EALA_CHECK_FAILED *out receives a report handle. */
EALA_API eala_status eala_run_scenarios(const char* json_text, long window, int timing, eala_report** out);

/* Verdict table over all curated affine matrices with at most max_rank + 1
   nodes and all their diagram automorphisms. */
EALA_API eala_status eala_theorem48_table(int max_rank, eala_report** out);

/* JSON text of the report (pretty-printed, deterministic). */
EALA_API const char* eala_report_json(const eala_report* r);
/* Aligned text rendering; empty for scenario reports. */
EALA_API const char* eala_report_text(const eala_report* r);
EALA_API eala_status eala_report_status(const eala_report* r);
EALA_API void eala_report_destroy(eala_report* r);

/* Message of the last error on this thread, or "". */
EALA_API const char* eala_last_error(void);

EALA_API const char* eala_version(void);

#ifdef __cplusplus
}
#endif

#endif
