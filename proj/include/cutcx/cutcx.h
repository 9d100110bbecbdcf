/*
 * C interface to the cutcx library: k-cut complexes of graphs, closed
 * formulas for squared paths, and the brute-force / homology verification
 * suite.
 *
 * Conventions:
 *  - Every fallible call returns a cutcx_status. On failure the context keeps
 *    a message retrievable with cutcx_context_last_error().
 *  - Strings returned through char** are heap-allocated by the library and
 *    must be released with cutcx_string_free().
 *  - Vertices are 1-based.
 *  - Handles are not shared between threads unless noted; a context may be
 *    used from one thread at a time.
 */
#ifndef CUTCX_CUTCX_H
#define CUTCX_CUTCX_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CUTCX_BUILDING_LIBRARY)
#    define CUTCX_API __declspec(dllexport)
#  else
#    define CUTCX_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__)
#  define CUTCX_API __attribute__((visibility("default")))
#else
#  define CUTCX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cutcx_status {
  CUTCX_OK = 0,
  CUTCX_ERR_INVALID_ARGUMENT = 1,
  CUTCX_ERR_CAPACITY = 2,
  CUTCX_ERR_VERIFICATION = 3,
  CUTCX_ERR_OUT_OF_MEMORY = 4,
  CUTCX_ERR_INTERNAL = 5
} cutcx_status;

typedef enum cutcx_format {
  CUTCX_FORMAT_TEXT = 0,
  CUTCX_FORMAT_JSON = 1,
  CUTCX_FORMAT_CSV = 2
} cutcx_format;

typedef struct cutcx_context cutcx_context;
typedef struct cutcx_graph cutcx_graph;
typedef struct cutcx_report cutcx_report;

CUTCX_API const char* cutcx_version(void);
CUTCX_API const char* cutcx_status_name(cutcx_status status);
CUTCX_API void cutcx_string_free(char* str);

/* Context: worker count and last error message. */
CUTCX_API cutcx_status cutcx_context_create(cutcx_context** out);
CUTCX_API void cutcx_context_destroy(cutcx_context* ctx);
/* 0 selects the hardware concurrency. */
CUTCX_API cutcx_status cutcx_context_set_threads(cutcx_context* ctx, unsigned threads);
CUTCX_API unsigned cutcx_context_threads(const cutcx_context* ctx);
/* Empty string when the last call succeeded. Valid until the next call. */
CUTCX_API const char* cutcx_context_last_error(const cutcx_context* ctx);

/* Graphs. Immutable after creation; safe to read from several threads. */
CUTCX_API cutcx_status cutcx_graph_squared_path(cutcx_context* ctx, int n, cutcx_graph** out);
/* Text format: "n <count>" then "e <u> <v>" lines. */
CUTCX_API cutcx_status cutcx_graph_parse(cutcx_context* ctx, const char* text, cutcx_graph** out);
CUTCX_API void cutcx_graph_destroy(cutcx_graph* graph);
CUTCX_API int cutcx_graph_vertex_count(const cutcx_graph* graph);
CUTCX_API size_t cutcx_graph_edge_count(const cutcx_graph* graph);
CUTCX_API cutcx_status cutcx_graph_is_connected_induced(cutcx_context* ctx, const cutcx_graph* graph,
                                                        const int* vertices, size_t count,
                                                        int* out_connected);

/* Closed formulas for P_n^2; results as decimal strings. */
CUTCX_API cutcx_status cutcx_beta_closed(cutcx_context* ctx, int k, int n, char** out_decimal);
CUTCX_API cutcx_status cutcx_z_count(cutcx_context* ctx, int k, int n, char** out_decimal);

/* Rendering. */
CUTCX_API cutcx_status cutcx_format_parse(const char* name, cutcx_format* out);
CUTCX_API cutcx_status cutcx_render_table(cutcx_context* ctx, int r_min, int r_max, int k_min,
                                          int k_max, cutcx_format format, char** out);
/* kind: faceenum, hpoly, hilbert, layers, profile (params k, n) or genfun
 * (param r). */
CUTCX_API cutcx_status cutcx_render_enum(cutcx_context* ctx, const char* kind, const int* params,
                                         size_t param_count, cutcx_format format, char** out);
/* Brute-force f-vector and bad profile of a graph (n <= 24). */
CUTCX_API cutcx_status cutcx_render_graph(cutcx_context* ctx, const cutcx_graph* graph, int k,
                                          cutcx_format format, char** out);
/* Boundary matrices of Delta_k(G) as "dim row col value" lines. */
CUTCX_API cutcx_status cutcx_dump_boundary(cutcx_context* ctx, const cutcx_graph* graph, int k,
                                           char** out);

/* Verification runs. scope: comma-separated subset of profile, fvector,
 * homology, recurrence, genfun, hilbert, or "all". A run that completes
 * returns CUTCX_OK even when checks fail; inspect the failed count. */
CUTCX_API cutcx_status cutcx_verify(cutcx_context* ctx, const char* scope, int n_max,
                                    const unsigned* primes, size_t prime_count,
                                    cutcx_report** out);
CUTCX_API cutcx_status cutcx_seed_check(cutcx_context* ctx, cutcx_report** out);
CUTCX_API size_t cutcx_report_check_count(const cutcx_report* report);
CUTCX_API size_t cutcx_report_failed_count(const cutcx_report* report);
CUTCX_API cutcx_status cutcx_report_render(cutcx_context* ctx, const cutcx_report* report,
                                           cutcx_format format, int include_timing, char** out);
CUTCX_API void cutcx_report_destroy(cutcx_report* report);

#ifdef __cplusplus
}
#endif

#endif /* CUTCX_CUTCX_H */
