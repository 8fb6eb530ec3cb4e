/* C interface to the parkfrob library. */
#ifndef PARKFROB_H
#define PARKFROB_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(PARKFROB_BUILDING_LIBRARY)
#define PF_API __attribute__((visibility("default")))
#else
#define PF_API
#endif

typedef enum pf_status {
  PF_OK = 0,
  PF_ERR_OTHER = 1,
  PF_ERR_INPUT = 2,      /* bad arguments or a cap exceeded */
  PF_ERR_IDENTITY = 3,   /* two computation routes disagreed */
  PF_VERDICT_FALSE = 4   /* a verified identity came out false */
} pf_status;

typedef struct pf_context pf_context;
typedef struct pf_result pf_result;

/* Receives one line of output without the newline. Return nonzero to stop. */
typedef int (*pf_line_fn)(const char* line, void* user);

PF_API const char* pf_version(void);

PF_API pf_status pf_context_create(pf_context** out);
PF_API void pf_context_destroy(pf_context* ctx);

/* Keys: k_cap, macdonald_cap, degree_cap, format (json|csv), cache, workers,
 * seed, check. Caps are process wide and installed on every call. */
PF_API pf_status pf_context_set(pf_context* ctx, const char* key, const char* value);
PF_API pf_status pf_context_load_config(pf_context* ctx, const char* path);

/* Message of the last failed call on ctx, or "". */
PF_API const char* pf_context_last_error(const pf_context* ctx);

/* kind: path, pf, wpf, wpf-weak, stacks, stacked-pf, gamma. N < 0 means N = k.
 * eta (length eta_len) is the label content for wpf kinds, else NULL/0. */
PF_API pf_status pf_enumerate(pf_context* ctx, int n, int k, int N, const char* kind,
                              const int* eta, int eta_len, pf_line_fn fn, void* user);

/* side: X, Y, E or Delta. */
PF_API pf_status pf_frob(pf_context* ctx, int n, int k, const char* side, pf_result** out);

/* suite: shuffle, skewing, cells, census or all. Bounds <= 0 use the
 * defaults (K_max = K cap, n_max = K_max). The report is produced even when
 * the status is PF_VERDICT_FALSE. */
PF_API pf_status pf_verify(pf_context* ctx, const char* suite, int n_max, int K_max,
                           pf_result** out);

PF_API pf_status pf_cache_clear(pf_context* ctx, int* removed);

PF_API const char* pf_result_text(const pf_result* r);
PF_API void pf_result_destroy(pf_result* r);

#ifdef __cplusplus
}
#endif

#endif
