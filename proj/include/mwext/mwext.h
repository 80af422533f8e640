#ifndef MWEXT_MWEXT_H
#define MWEXT_MWEXT_H

/* C interface to libmwext: Hamming isometries of finite-field function spaces.
 *
 * Handles are opaque and owned by the caller. Report functions write a
 * NUL-terminated JSON document to *json_out, which must be released with
 * mwext_string_free. On failure *json_out holds a structured error report and
 * the returned status says which kind of failure it was. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MWEXT_API __declspec(dllexport)
#else
#define MWEXT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mwext_code mwext_code;
typedef struct mwext_map mwext_map;

typedef enum mwext_status {
  MWEXT_OK = 0,
  MWEXT_PARSE_ERROR = 1,
  MWEXT_SCHEMA_VIOLATION = 2,
  MWEXT_GUARD_EXCEEDED = 3,
  MWEXT_THEOREM_VIOLATION = 4,
  MWEXT_INTERNAL_ERROR = 5
} mwext_status;

/* Verdicts returned next to a report: the property held, or was checked and
 * found false. */
enum { MWEXT_VERDICT_TRUE = 0, MWEXT_VERDICT_FALSE = 2 };

typedef struct mwext_config {
  uint64_t max_enum;
  uint64_t max_ring;
  uint64_t max_search;
  int has_seed;
  uint64_t seed;
  uint64_t samples; /* > 0 selects sample mode; needs has_seed */
  int diagnostic;
} mwext_config;

MWEXT_API void mwext_config_default(mwext_config* cfg);
MWEXT_API const char* mwext_schema_version(void);

/* Message of the last failure on this thread, or "". */
MWEXT_API const char* mwext_last_error_message(void);
/* Structured error report of the last failure on this thread, or NULL.
 * Release with mwext_string_free. */
MWEXT_API char* mwext_last_error_report(void);
MWEXT_API void mwext_string_free(char* s);

MWEXT_API mwext_status mwext_code_from_json(const char* text, int normalize, mwext_code** out);
MWEXT_API mwext_status mwext_code_load(const char* path, int normalize, mwext_code** out);
MWEXT_API void mwext_code_free(mwext_code* code);
MWEXT_API size_t mwext_code_dimension(const mwext_code* code);
MWEXT_API size_t mwext_code_length(const mwext_code* code);
MWEXT_API unsigned mwext_code_field_order(const mwext_code* code);

/* Relative code paths inside the map document resolve against base_dir. */
MWEXT_API mwext_status mwext_map_from_json(const char* text, const char* base_dir, int normalize, mwext_map** out);
MWEXT_API mwext_status mwext_map_load(const char* path, int normalize, mwext_map** out);
MWEXT_API void mwext_map_free(mwext_map* map);

/* Exact weight of the codeword with these coefficients relative to the code's
 * input rows, as "p/q". */
MWEXT_API mwext_status mwext_code_weight(const mwext_code* code, const unsigned* coeffs, size_t count, char** out);
MWEXT_API mwext_status mwext_map_is_isometry(const mwext_config* cfg, const mwext_map* map, int* out);

MWEXT_API mwext_status mwext_report_weight(const mwext_config* cfg, const mwext_code* code, const unsigned* coeffs,
                                           size_t count, char** json_out, int* verdict);
MWEXT_API mwext_status mwext_report_distance(const mwext_config* cfg, const mwext_code* code, const unsigned* u,
                                             size_t u_count, const unsigned* v, size_t v_count, char** json_out,
                                             int* verdict);
MWEXT_API mwext_status mwext_report_quotient(const mwext_config* cfg, const mwext_code* code, char** json_out,
                                             int* verdict);
MWEXT_API mwext_status mwext_report_ring(const mwext_config* cfg, const mwext_code* code, char** json_out,
                                         int* verdict);
MWEXT_API mwext_status mwext_report_controllable(const mwext_config* cfg, const mwext_code* code, char** json_out,
                                                 int* verdict);
MWEXT_API mwext_status mwext_report_isometry(const mwext_config* cfg, const mwext_map* map, char** json_out,
                                             int* verdict);
MWEXT_API mwext_status mwext_report_separating(const mwext_config* cfg, const mwext_map* map, char** json_out,
                                               int* verdict);
MWEXT_API mwext_status mwext_report_decompose(const mwext_config* cfg, const mwext_map* map, char** json_out,
                                              int* verdict);
/* decomposition_json is the {"h": ..., "omega": ...} document. */
MWEXT_API mwext_status mwext_report_verify(const mwext_config* cfg, const mwext_map* map,
                                           const char* decomposition_json, char** json_out, int* verdict);
MWEXT_API mwext_status mwext_report_monomial_form(const mwext_config* cfg, const mwext_map* map, char** json_out,
                                                  int* verdict);
MWEXT_API mwext_status mwext_report_macwilliams(const mwext_config* cfg, const mwext_code* c1, const mwext_code* c2,
                                                char** json_out, int* verdict);
MWEXT_API mwext_status mwext_report_selftest(const mwext_config* cfg, char** json_out, int* verdict);

/* Structured error report for failures detected outside the library, such as
 * command-line parsing. kind is "ParseError", "SchemaViolation" or
 * "GuardExceeded"; field may be NULL. */
MWEXT_API char* mwext_error_report(const char* kind, const char* field, const char* message);

#ifdef __cplusplus
}
#endif

#endif
