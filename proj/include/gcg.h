#ifndef GCG_H
#define GCG_H

#include <stddef.h>
#include <stdint.h>

#if defined(GCG_BUILDING_LIBRARY)
#define GCG_API __attribute__((visibility("default")))
#else
#define GCG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcg_status {
  GCG_OK = 0,
  GCG_ERR_INVALID_ARGUMENT,
  GCG_ERR_NOT_DIVISIBLE,
  GCG_ERR_NOT_LAURENT,
  GCG_ERR_NOT_POINTED,
  GCG_ERR_MISSING_GENERATOR,
  GCG_ERR_INCONSISTENT_ARGUMENTS,
  GCG_ERR_INDEX_OUT_OF_RANGE,
  GCG_ERR_CRITERION_FAILS,
  GCG_ERR_R_TOO_SMALL,
  GCG_ERR_NOT_IN_REMOTE_SUPPORT,
  GCG_ERR_SYMBOLIC_MODE_UNSUPPORTED,
  GCG_ERR_NOT_IN_ALGEBRA,
  GCG_ERR_PARSE,
  GCG_ERR_INTERNAL,
  GCG_ERR_OUT_OF_MEMORY
} gcg_status;

typedef enum gcg_format { GCG_FORMAT_TEXT = 0, GCG_FORMAT_JSON = 1 } gcg_format;

typedef enum gcg_method { GCG_METHOD_COMBINATORIAL = 0, GCG_METHOD_RECURSIVE = 1 } gcg_method;

/* Coefficient mode plus the cluster variable cache. A context may be used
   from several threads at once. */
typedef struct gcg_context gcg_context;

/* An immutable Laurent polynomial in x1, x2. */
typedef struct gcg_laurent gcg_laurent;

/* Return nonzero to stop the enumeration early. */
typedef int (*gcg_pair_callback)(const int* s1, size_t n1, const int* s2, size_t n2, void* user);

GCG_API const char* gcg_status_name(gcg_status status);
/* Message of the last failure on the calling thread; never NULL. */
GCG_API const char* gcg_last_error(void);
GCG_API void gcg_string_free(char* s);

/* p1 and p2 list coefficients from low to high degree. */
GCG_API gcg_status gcg_context_new_numeric(const int64_t* p1, size_t n1, const int64_t* p2, size_t n2,
                                           gcg_context** out);
GCG_API gcg_status gcg_context_new_symbolic(int d1, int d2, gcg_context** out);
GCG_API void gcg_context_free(gcg_context* ctx);
GCG_API gcg_status gcg_context_set_threads(gcg_context* ctx, int threads);
GCG_API gcg_status gcg_context_set_cluster_range(gcg_context* ctx, int64_t lo, int64_t hi);
GCG_API gcg_status gcg_context_degrees(const gcg_context* ctx, int* d1, int* d2);

GCG_API gcg_status gcg_cluster_variable(gcg_context* ctx, int64_t k, gcg_laurent** out);
GCG_API gcg_status gcg_greedy(gcg_context* ctx, int64_t a1, int64_t a2, gcg_method method, gcg_laurent** out);
/* Rewrites f in the cluster (x_k, x_{k+1}). */
GCG_API gcg_status gcg_expand_in_cluster(gcg_context* ctx, const gcg_laurent* f, int64_t k, gcg_laurent** out);
GCG_API gcg_status gcg_apply_reflection(gcg_context* ctx, const gcg_laurent* f, int p, gcg_laurent** out);

GCG_API gcg_status gcg_laurent_parse(const gcg_context* ctx, const char* json, gcg_laurent** out);
GCG_API gcg_status gcg_laurent_render(const gcg_context* ctx, const gcg_laurent* f, gcg_format format, char** out);
GCG_API gcg_status gcg_laurent_mul(const gcg_laurent* f, const gcg_laurent* g, gcg_laurent** out);
/* 1 when equal, 0 otherwise (including NULL arguments). */
GCG_API int gcg_laurent_equal(const gcg_laurent* f, const gcg_laurent* g);
/* 1 when nonzero with nonnegative integer coefficients. */
GCG_API int gcg_laurent_is_positive(const gcg_laurent* f);
GCG_API void gcg_laurent_free(gcg_laurent* f);

/* Coefficients of f in the greedy basis, rendered as text or JSON. */
GCG_API gcg_status gcg_greedy_expand(gcg_context* ctx, const gcg_laurent* f, gcg_format format, char** out);

/* Compatible pairs on D_{a1,a2} for the degrees of ctx, in canonical order. */
GCG_API gcg_status gcg_enumerate_pairs(gcg_context* ctx, int a1, int a2, gcg_pair_callback callback, void* user);

/* Runs a verification suite ("all" for every suite). The report is JSON;
   *passed is 1 when every check passed. */
GCG_API gcg_status gcg_verify(const char* suite, int threads, int exhaustive, char** report, int* passed);

/* Brute-force against fast enumeration over the default grid, as JSON. */
GCG_API gcg_status gcg_bench(int threads, int repeats, char** report);

#ifdef __cplusplus
}
#endif

#endif
