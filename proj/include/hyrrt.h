/* C interface to the hybrid motion planning library. All objects are opaque
 * handles; every function returns HYRRT_OK or an error code, with a
 * thread-local message available from hyrrt_last_error(). Strings returned
 * through char** are heap-allocated; release them with hyrrt_string_free().
 */
#ifndef HYRRT_H
#define HYRRT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  HYRRT_OK = 0,
  HYRRT_ERR_INVALID_ARGUMENT = 1,
  HYRRT_ERR_PARSE = 2,
  HYRRT_ERR_IO = 3,
  HYRRT_ERR_SIMULATION = 4,
  HYRRT_ERR_SAMPLING = 5,
  HYRRT_ERR_INTERNAL = 6
};

typedef struct hyrrt_problem hyrrt_problem;
typedef struct hyrrt_result hyrrt_result;

const char* hyrrt_version(void);

/* Message from the last failing call on this thread; empty if none. */
const char* hyrrt_last_error(void);

void hyrrt_string_free(char* s);

/* Problem construction: a built-in instance by id (bouncing_ball, biped,
 * point_mass), or a JSON problem document (text or file). */
int hyrrt_problem_gallery(const char* id, hyrrt_problem** out);
int hyrrt_problem_from_json(const char* text, hyrrt_problem** out);
int hyrrt_problem_load(const char* path, hyrrt_problem** out);
void hyrrt_problem_free(hyrrt_problem* problem);

int hyrrt_problem_state_dim(const hyrrt_problem* problem);
int hyrrt_problem_input_dim(const hyrrt_problem* problem);

/* Fields at their defaults (negative reals / zero max_iterations) defer to
 * the problem's own configuration. */
typedef struct hyrrt_plan_options {
  uint64_t seed;
  uint64_t max_iterations;
  double flow_sample_bias; /* p_n */
  double flow_when_both;   /* p_fg */
  double goal_tolerance;   /* eps */
  int greedy;              /* 0 random, nonzero greedy */
} hyrrt_plan_options;

void hyrrt_plan_options_defaults(hyrrt_plan_options* options);

/* Runs the planner. Returns HYRRT_OK whether or not a plan was found; query
 * hyrrt_result_found(). */
int hyrrt_plan(const hyrrt_problem* problem, const hyrrt_plan_options* options,
               hyrrt_result** out);

int hyrrt_result_found(const hyrrt_result* result);
uint64_t hyrrt_result_iterations(const hyrrt_result* result);
int hyrrt_result_vertex_count(const hyrrt_result* result);
double hyrrt_result_wall_time_seconds(const hyrrt_result* result);
/* Fail with HYRRT_ERR_INVALID_ARGUMENT when no plan was found. */
int hyrrt_result_plan_json(const hyrrt_result* result, char** out);
int hyrrt_result_plan_csv(const hyrrt_result* result, char** out);
/* Search tree edges as plot-friendly CSV; always available. */
int hyrrt_result_tree_csv(const hyrrt_result* result, char** out);
void hyrrt_result_free(hyrrt_result* result);

/* Integrates the problem's system from x0 under a constant input level for
 * the given duration and event rule ("flow" or "jump"). method may be NULL
 * and step 0 to keep the problem's integrator. Output is plan JSON. */
int hyrrt_simulate(const hyrrt_problem* problem, const double* x0, size_t state_dim,
                   const double* level, size_t input_dim, double duration, const char* rule,
                   const char* method, double step, char** plan_json_out);

/* Seeded trial sweep. threads = 0 picks the hardware concurrency. out_dir
 * may be NULL to skip writing files. Returns the summary as JSON. */
int hyrrt_bench(const hyrrt_problem* problem, const hyrrt_plan_options* options, int trials,
                uint64_t base_seed, int threads, const char* out_dir, char** summary_json_out);

/* Re-encodes plan JSON as "json", "csv", or "plot". */
int hyrrt_plan_convert(const char* plan_json, const char* format, char** out);

/* Full plan check against the problem: start membership, trajectory
 * validation at the given tolerance (0 picks ten integrator steps), goal
 * distance, unsafe samples. *ok_out is 1/0; the report lists violations or
 * reads "ok". */
int hyrrt_plan_check(const hyrrt_problem* problem, const char* plan_json, double tol,
                     int* ok_out, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* HYRRT_H */
