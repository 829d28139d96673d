/* C interface to the hook-count verification library.
 *
 * Every call that can fail returns an hb_status; the message for the most
 * recent failure on a context is available from hb_last_error. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with hb_string_free. A context may be used by one thread at a
 * time; separate contexts are independent. */
#ifndef HOOKBIAS_H
#define HOOKBIAS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HB_API __declspec(dllexport)
#elif defined(__GNUC__)
#define HB_API __attribute__((visibility("default")))
#else
#define HB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hb_status {
  HB_OK = 0,
  HB_ERR_PARSE = 1,            /* malformed partition, set, map or term name */
  HB_ERR_DOMAIN = 2,           /* argument outside the operation's domain */
  HB_ERR_NOT_IN_IMAGE = 3,     /* inverse map given an object no input maps to */
  HB_ERR_INVALID_ARGUMENT = 4, /* null pointer or inconsistent range */
  HB_ERR_OVERFLOW = 5,         /* exact arithmetic left its range */
  HB_ERR_IO = 6,
  HB_ERR_INTERNAL = 7
} hb_status;

typedef struct hb_context hb_context;
typedef struct hb_series hb_series;

typedef struct hb_violation {
  uint32_t t;
  uint32_t n;
} hb_violation;

HB_API const char* hb_version(void);
HB_API const char* hb_status_name(hb_status status);

HB_API hb_status hb_context_create(hb_context** out);
HB_API void hb_context_destroy(hb_context* ctx);
/* Zero selects the hardware concurrency. */
HB_API hb_status hb_context_set_workers(hb_context* ctx, unsigned workers);
/* NULL or "" disables caching. */
HB_API hb_status hb_context_set_cache_dir(hb_context* ctx, const char* dir);
/* Never NULL; "" when the last call succeeded. */
HB_API const char* hb_last_error(const hb_context* ctx);
HB_API void hb_string_free(char* s);

/* Truncated power series. */
HB_API hb_status hb_series_kim(hb_context* ctx, uint32_t t, uint32_t degree, hb_series** out);
/* term is one of 'a'..'f'; t >= 3. */
HB_API hb_status hb_series_term(hb_context* ctx, char term, uint32_t t, uint32_t degree, hb_series** out);
HB_API uint32_t hb_series_degree(const hb_series* s);
/* Exact decimal text of the coefficient of q^n. */
HB_API hb_status hb_series_coeff_string(hb_context* ctx, const hb_series* s, uint32_t n, char** out);
/* HB_ERR_OVERFLOW when the coefficient does not fit in 64 bits. */
HB_API hb_status hb_series_coeff_i64(hb_context* ctx, const hb_series* s, uint32_t n, int64_t* out);
HB_API void hb_series_destroy(hb_series* s);

/* Partitions in the comma-separated text format, e.g. "6,4,4,3,2,1,1". */
HB_API hb_status hb_count_hooks(hb_context* ctx, const char* partition, uint64_t k, uint64_t* out);
/* JSON object mapping hook length to number of cells. */
HB_API hb_status hb_hook_profile_json(hb_context* ctx, const char* partition, char** out);
/* Canonical text of a partition or OPO-overpartition. */
HB_API hb_status hb_canonicalize(hb_context* ctx, const char* text, char** out);
HB_API hb_status hb_b_tk(hb_context* ctx, uint32_t t, uint32_t k, uint32_t n, uint64_t* out);
/* CSV "t,k,n,count" for every t, k in the ranges and n <= n_max. */
HB_API hb_status hb_table_csv(hb_context* ctx, uint32_t t_from, uint32_t t_to, uint32_t k_from, uint32_t k_to,
                              uint32_t n_max, char** out);

/* Sets are named A, A1, A2, Ahat3, Ahat4, B, C, D, E, F. */
/* One object per line, newline-terminated. */
HB_API hb_status hb_set_enumerate(hb_context* ctx, const char* set, uint32_t t, uint32_t n, char** out);
HB_API hb_status hb_set_contains(hb_context* ctx, const char* set, uint32_t t, const char* object, int* out);

/* Maps are named phi1, phi2, phi3, zeta1, zeta2, zeta3. */
/* JSON {"input","case","output","codomain"}. */
HB_API hb_status hb_inject(hb_context* ctx, const char* map, uint32_t t, const char* input, char** out);
/* Canonical text of the preimage. */
HB_API hb_status hb_invert(hb_context* ctx, const char* map, uint32_t t, const char* image, char** out);

/* Verification. Each writes a JSON report and sets *passed to 1 or 0. */
HB_API hb_status hb_check_set(hb_context* ctx, const char* set, uint32_t t, uint32_t n_max, char** report,
                              int* passed);
HB_API hb_status hb_verify_map(hb_context* ctx, const char* map, uint32_t t, uint32_t n_max, char** report,
                               int* passed);
HB_API hb_status hb_verify_decomposition(hb_context* ctx, uint32_t t, uint32_t degree, uint32_t oracle_n_max,
                                         char** report, int* passed);
HB_API hb_status hb_verify_series_oracle(hb_context* ctx, uint32_t t_from, uint32_t t_to, uint32_t n_max,
                                         char** report, int* passed);
HB_API hb_status hb_verify_conjecture(hb_context* ctx, uint32_t t_from, uint32_t t_to, uint32_t n_max,
                                      uint32_t oracle_n_max, uint32_t ledger_n_max, const hb_violation* expected,
                                      size_t expected_count, char** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* HOOKBIAS_H */
