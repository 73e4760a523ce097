/* C interface to the pricing solvers. All strings crossing the boundary are
 * UTF-8 JSON or CSV; strings returned through `char**` must be released with
 * gvp_string_free. On failure a call returns a nonzero status and
 * gvp_last_error() describes it (per thread, valid until the next call). */
#ifndef GVP_GVP_H
#define GVP_GVP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GVP_API __declspec(dllexport)
#else
#define GVP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gvp_status {
  GVP_OK = 0,
  GVP_ERR_INVALID_ARGUMENT = 1,
  GVP_ERR_PARSE = 2,
  GVP_ERR_PRECONDITION = 3,
  GVP_ERR_LIMIT = 4,
  GVP_ERR_INTERNAL = 5,
  GVP_ERR_UNKNOWN_ALGORITHM = 6
} gvp_status;

typedef struct gvp_instance gvp_instance;
typedef struct gvp_solution gvp_solution;

typedef struct gvp_solve_options {
  const char* algorithm;          /* NULL means "auto" */
  const char* epsilon;            /* rational text, NULL for the default 1/10 */
  int64_t price_cap;              /* < 0: floor of the largest budget */
  int r;                          /* Sherali-Adams level */
  int has_seed;                   /* nonzero: `seed` is used */
  uint64_t seed;
  const char* coloring_json;      /* may be NULL */
  const char* decomposition_json; /* may be NULL */
  uint64_t oracle_limit;          /* 0: default */
  int max_width;
} gvp_solve_options;

GVP_API const char* gvp_version(void);
GVP_API const char* gvp_last_error(void);
GVP_API void gvp_string_free(char* text);

/* Graph or hypergraph instance JSON. */
GVP_API gvp_status gvp_instance_parse(const char* json, gvp_instance** out);
GVP_API void gvp_instance_free(gvp_instance* instance);
GVP_API int gvp_instance_is_hyper(const gvp_instance* instance);
GVP_API int gvp_instance_vertex_count(const gvp_instance* instance);
GVP_API size_t gvp_instance_edge_count(const gvp_instance* instance);
GVP_API gvp_status gvp_instance_to_json(const gvp_instance* instance, char** out);

/* `options` may be NULL for the defaults. */
GVP_API void gvp_solve_options_init(gvp_solve_options* options);
GVP_API gvp_status gvp_solve(const gvp_instance* instance, const gvp_solve_options* options, gvp_solution** out);
GVP_API void gvp_solution_free(gvp_solution* solution);
/* {"algorithm": ..., "revenue": "p/q", "prices": ["p/q", ...]} */
GVP_API gvp_status gvp_solution_to_json(const gvp_solution* solution, char** out);
GVP_API gvp_status gvp_solution_revenue(const gvp_solution* solution, char** out);

/* Revenue of a JSON price array on the instance, as rational text. */
GVP_API gvp_status gvp_evaluate(const gvp_instance* instance, const char* prices_json, char** revenue_out);

/* Runs the instance checks plus, when given, the decomposition and coloring
 * checks. `report_out` receives a JSON report, `passed` is 1 iff all passed. */
GVP_API gvp_status gvp_validate(const gvp_instance* instance, const char* decomposition_json,
                                const char* coloring_json, char** report_out, int* passed);

/* Generators: path, cycle, star, grid, random-sp, kpartite-random, vc-reduction.
 * `params_json` is an object of generator parameters. `sidecar_out` may be NULL;
 * it receives "null" when the generator has nothing extra to report. */
GVP_API gvp_status gvp_generate(const char* generator, const char* params_json, char** instance_out,
                                char** sidecar_out);

/* CSV with header r,lp_value,integral_opt,gap. price_cap < 0 means the floor of the largest budget. */
GVP_API gvp_status gvp_sa_gap(const gvp_instance* instance, const int* r_values, size_t count, int64_t price_cap,
                              char** csv_out);

#ifdef __cplusplus
}
#endif

#endif
