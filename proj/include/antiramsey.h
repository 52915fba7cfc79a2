/* antiramsey: anti-Ramsey numbers AR(n,G) for graphs with at most four edges.
 *
 * C interface to the shared library. All functions returning ar_status set a
 * thread-local error message readable via ar_last_error() on failure. Strings
 * returned through char** out parameters are heap-allocated; release them
 * with ar_string_free(). Colorings are opaque handles released with
 * ar_coloring_free().
 */
#ifndef ANTIRAMSEY_H
#define ANTIRAMSEY_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define AR_API __declspec(dllexport)
#else
#define AR_API __attribute__((visibility("default")))
#endif

typedef enum ar_status {
    AR_OK = 0,
    AR_ERROR_INVALID_ARGUMENT = 1,
    AR_ERROR_UNKNOWN_PATTERN = 2,
    AR_ERROR_MALFORMED_COLORING = 3,
    AR_ERROR_UNSUPPORTED_DOMAIN = 4,
    AR_ERROR_INTERNAL = 5
} ar_status;

typedef enum ar_ternary {
    AR_NO = 0,
    AR_YES = 1,
    AR_INDETERMINATE = -1
} ar_ternary;

/* Search budget and execution knobs. Zero-initialize and call
 * ar_budget_defaults, or fill explicitly. */
typedef struct ar_budget {
    long long max_nodes;  /* <= 0: unlimited; default 1e9 */
    double max_seconds;   /* <= 0: unlimited */
    int threads;          /* <= 1: sequential */
    int parallel_depth;   /* < 0: automatic */
    int symmetry_pruning; /* nonzero: host-vertex orbit pruning (default on) */
    int symmetry_depth;   /* < 0: automatic */
} ar_budget;

typedef struct ar_coloring ar_coloring;

AR_API const char* ar_version(void);
AR_API const char* ar_last_error(void);
AR_API void ar_string_free(char* s);
AR_API void ar_budget_defaults(ar_budget* budget);

/* --- pattern catalog ------------------------------------------------- */

AR_API int ar_catalog_count(void);
/* JSON array of {"name","vertices","edges","autCount"} for all patterns. */
AR_API ar_status ar_catalog_json(char** out_json);
/* Name lookup is case-insensitive and ignores commas ("K1,3" == "K13"). */
AR_API ar_status ar_pattern_info(const char* name, int* out_vertices, int* out_edges,
                                 long long* out_aut_count);
AR_API ar_status ar_pattern_canonical_name(const char* name, char** out_name);

/* --- closed-form values ---------------------------------------------- */

/* Table value AR(n, pattern) with its proven validity range. out_exact is 0
 * only for bound-typed formulas; the table rows are all exact. */
AR_API ar_status ar_formula(const char* pattern, int n, long long* out_value, int* out_exact,
                            char** out_validity);
/* Internal consistency report for the formula evaluators (JSON). */
AR_API ar_status ar_cross_checks_json(int* out_all_pass, char** out_json);

/* --- colorings -------------------------------------------------------- */

/* Constructions: "matching", "star", "min", "clique+1:K" (3 <= K < n),
 * "c4+1", "c3p2-k5" (n must be 5). */
AR_API ar_status ar_construct(const char* construction, int n, ar_coloring** out);
/* Certificate wire format: {"n": int, "edges": [[u,v,color], ...]}. Parsing
 * validates totality and renormalizes colors. */
AR_API ar_status ar_coloring_from_json(const char* json, ar_coloring** out);
AR_API ar_status ar_coloring_to_json(const ar_coloring* c, char** out_json);
AR_API int ar_coloring_order(const ar_coloring* c);
AR_API int ar_coloring_num_colors(const ar_coloring* c);
AR_API ar_status ar_coloring_color_of(const ar_coloring* c, int u, int v, int* out_color);
AR_API ar_status ar_coloring_merge(const ar_coloring* c, int color_a, int color_b,
                                   ar_coloring** out);
AR_API void ar_coloring_free(ar_coloring* c);

/* --- rainbow detection ------------------------------------------------ */

AR_API ar_status ar_count_rainbow(const ar_coloring* c, const char* pattern, long long* out_count);
/* JSON witness {"vertices":[...],"edges":[[u,v,color],...]} or null. */
AR_API ar_status ar_find_rainbow_json(const ar_coloring* c, const char* pattern, char** out_json);

/* --- certificates ------------------------------------------------------ */

/* Checks num_colors == claimed and rainbow-freeness; a pass certifies
 * AR(n, pattern) > claimed_colors. Report JSON carries the failure detail
 * and a rainbow witness when one defeats the claim. */
AR_API ar_status ar_verify(const ar_coloring* c, const char* pattern, int claimed_colors,
                           int* out_pass, char** out_report_json);

/* --- exact search ------------------------------------------------------ */

/* Branch-and-bound maximization of the color count over rainbow-free
 * colorings of K_n. JSON: {"graph","n","maxColors","antiRamsey","status",
 * "exact","nodes","elapsedSeconds","witness"}. Supports n <= 8. */
AR_API ar_status ar_search_json(const char* pattern, int n, const ar_budget* budget,
                                char** out_json);
/* AR(n, pattern) from the search; out_exact is 0 when the budget ran out,
 * in which case the value is only an upper-bound candidate. */
AR_API ar_status ar_anti_ramsey(const char* pattern, int n, const ar_budget* budget,
                                int* out_value, int* out_exact);
/* Is there a coloring with exactly num_colors colors and no rainbow copy? */
AR_API ar_status ar_decide(const char* pattern, int n, int num_colors, const ar_budget* budget,
                           ar_ternary* out);

#ifdef __cplusplus
}
#endif

#endif /* ANTIRAMSEY_H */
