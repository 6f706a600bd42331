#include "hyrrt.h"

#include "hyrrt/bench.hpp"
#include "hyrrt/io.hpp"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

using namespace hyrrt;

struct hyrrt_problem {
  GalleryEntry entry;
};

struct hyrrt_result {
  PlanResult run;
};

namespace {

thread_local std::string g_last_error;

int code_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return HYRRT_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return HYRRT_ERR_PARSE;
    case ErrorCode::Io: return HYRRT_ERR_IO;
    case ErrorCode::Simulation: return HYRRT_ERR_SIMULATION;
    case ErrorCode::Sampling: return HYRRT_ERR_SAMPLING;
    case ErrorCode::Internal: return HYRRT_ERR_INTERNAL;
  }
  return HYRRT_ERR_INTERNAL;
}

template <class F>
int guarded(F&& body) {
  try {
    std::forward<F>(body)();
    g_last_error.clear();
    return HYRRT_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HYRRT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return HYRRT_ERR_INTERNAL;
  }
}

char* alloc_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

PlannerConfig merge_options(const GalleryEntry& entry, const hyrrt_plan_options* options) {
  PlannerConfig cfg = entry.planner;
  if (!options) return cfg;
  cfg.seed = options->seed;
  if (options->max_iterations > 0) cfg.max_iterations = options->max_iterations;
  if (options->flow_sample_bias >= 0.0) cfg.flow_sample_bias = options->flow_sample_bias;
  if (options->flow_when_both >= 0.0) cfg.flow_when_both = options->flow_when_both;
  if (options->goal_tolerance >= 0.0) cfg.goal_tolerance = options->goal_tolerance;
  cfg.mode = options->greedy ? PlannerMode::Greedy : PlannerMode::Random;
  return cfg;
}

}  // namespace

extern "C" {

const char* hyrrt_version(void) { return "1.0.0"; }

const char* hyrrt_last_error(void) { return g_last_error.c_str(); }

void hyrrt_string_free(char* s) { std::free(s); }

int hyrrt_problem_gallery(const char* id, hyrrt_problem** out) {
  return guarded([&] {
    require(id && out, "null argument");
    *out = new hyrrt_problem{make_gallery_entry(id)};
  });
}

int hyrrt_problem_from_json(const char* text, hyrrt_problem** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new hyrrt_problem{load_problem_json(text)};
  });
}

int hyrrt_problem_load(const char* path, hyrrt_problem** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new hyrrt_problem{load_problem_file(path)};
  });
}

void hyrrt_problem_free(hyrrt_problem* problem) { delete problem; }

int hyrrt_problem_state_dim(const hyrrt_problem* problem) {
  return problem ? problem->entry.problem.system.state_dim : 0;
}

int hyrrt_problem_input_dim(const hyrrt_problem* problem) {
  return problem ? problem->entry.problem.system.input_dim : 0;
}

void hyrrt_plan_options_defaults(hyrrt_plan_options* options) {
  if (!options) return;
  options->seed = 0;
  options->max_iterations = 0;
  options->flow_sample_bias = -1.0;
  options->flow_when_both = -1.0;
  options->goal_tolerance = -1.0;
  options->greedy = 0;
}

int hyrrt_plan(const hyrrt_problem* problem, const hyrrt_plan_options* options,
               hyrrt_result** out) {
  return guarded([&] {
    require(problem && out, "null argument");
    const GalleryEntry& entry = problem->entry;
    PlanResult run = hyrrt::hyrrt(entry.problem, entry.library, entry.sim,
                                  merge_options(entry, options));
    *out = new hyrrt_result{std::move(run)};
  });
}

int hyrrt_result_found(const hyrrt_result* result) {
  return result && result->run.found ? 1 : 0;
}

uint64_t hyrrt_result_iterations(const hyrrt_result* result) {
  return result ? result->run.iterations : 0;
}

int hyrrt_result_vertex_count(const hyrrt_result* result) {
  return result ? result->run.tree.size() : 0;
}

double hyrrt_result_wall_time_seconds(const hyrrt_result* result) {
  return result ? result->run.wall_time_seconds : 0.0;
}

int hyrrt_result_plan_json(const hyrrt_result* result, char** out) {
  return guarded([&] {
    require(result && out, "null argument");
    require(result->run.plan.has_value(), "no plan in this result");
    *out = alloc_string(plan_to_json(*result->run.plan));
  });
}

int hyrrt_result_plan_csv(const hyrrt_result* result, char** out) {
  return guarded([&] {
    require(result && out, "null argument");
    require(result->run.plan.has_value(), "no plan in this result");
    *out = alloc_string(plan_to_csv(*result->run.plan));
  });
}

int hyrrt_result_tree_csv(const hyrrt_result* result, char** out) {
  return guarded([&] {
    require(result && out, "null argument");
    *out = alloc_string(tree_to_plot(result->run.tree));
  });
}

void hyrrt_result_free(hyrrt_result* result) { delete result; }

int hyrrt_simulate(const hyrrt_problem* problem, const double* x0, size_t state_dim,
                   const double* level, size_t input_dim, double duration, const char* rule,
                   const char* method, double step, char** plan_json_out) {
  return guarded([&] {
    require(problem && x0 && plan_json_out, "null argument");
    require(level || input_dim == 0, "null input level");
    const GalleryEntry& entry = problem->entry;
    const HybridSystem& sys = entry.problem.system;
    require(static_cast<int>(state_dim) == sys.state_dim, "x0 has the wrong dimension");
    require(static_cast<int>(input_dim) == sys.input_dim, "input level has the wrong dimension");

    SimulationSetup setup = entry.sim;
    if (method) setup.scheme.method = integration_method_from_name(method);
    if (step > 0.0) setup.scheme.step = step;

    Vec x(sys.state_dim);
    for (int i = 0; i < sys.state_dim; ++i) x[i] = x0[i];
    InputSignal signal;
    signal.duration = duration;
    signal.level = Vec(sys.input_dim);
    for (int i = 0; i < sys.input_dim; ++i) signal.level[i] = level[i];

    const PriorityRule prio = priority_rule_from_name(rule ? rule : "flow");
    const SolutionPair run = continuous_simulator(sys, prio, x, signal, setup);
    *plan_json_out = alloc_string(plan_to_json(run));
  });
}

int hyrrt_bench(const hyrrt_problem* problem, const hyrrt_plan_options* options, int trials,
                uint64_t base_seed, int threads, const char* out_dir, char** summary_json_out) {
  return guarded([&] {
    require(problem, "null argument");
    const GalleryEntry& entry = problem->entry;
    BenchOptions opts;
    opts.trials = trials;
    opts.base_seed = base_seed;
    opts.threads = threads;
    if (out_dir) opts.out_dir = out_dir;
    const BenchResult run = run_bench(entry.problem, entry.library, entry.sim,
                                      merge_options(entry, options), opts);
    if (summary_json_out) *summary_json_out = alloc_string(summary_to_json(run.summary));
  });
}

int hyrrt_plan_convert(const char* plan_json, const char* format, char** out) {
  return guarded([&] {
    require(plan_json && format && out, "null argument");
    const SolutionPair plan = plan_from_json(plan_json);
    const std::string name = format;
    if (name == "json") {
      *out = alloc_string(plan_to_json(plan));
    } else if (name == "csv") {
      *out = alloc_string(plan_to_csv(plan));
    } else if (name == "plot") {
      *out = alloc_string(plan_to_plot(plan));
    } else {
      throw Error(ErrorCode::InvalidArgument, "format must be json, csv, or plot");
    }
  });
}

int hyrrt_plan_check(const hyrrt_problem* problem, const char* plan_json, double tol,
                     int* ok_out, char** report_out) {
  return guarded([&] {
    require(problem && plan_json && ok_out, "null argument");
    const GalleryEntry& entry = problem->entry;
    const SolutionPair plan = plan_from_json(plan_json);
    const double check_tol = tol > 0.0 ? tol : 10.0 * entry.sim.scheme.step;

    ValidationReport report = validate_solution_pair(entry.problem.system, plan, check_tol);
    if (!entry.problem.start_states.contains(plan.state.start_value(), check_tol)) {
      report.fail("initial state is not in the start set");
    }
    const double goal_dist = entry.problem.goal_states.distance(plan.state.end_value());
    if (goal_dist > entry.planner.goal_tolerance) {
      report.fail("terminal state misses the goal set by " + format_double(goal_dist));
    }
    if (entry.problem.unsafe) {
      for (int j = 0; j < plan.state.segment_count() && report.ok; ++j) {
        for (std::size_t i = 0; i < plan.state.sample_count(j); ++i) {
          if (entry.problem.unsafe(plan.state.sample(j, i), plan.input.sample(j, i), 0.0)) {
            report.fail("sample in the unsafe set at segment " + std::to_string(j));
            break;
          }
        }
      }
    }

    *ok_out = report.ok ? 1 : 0;
    if (report_out) {
      std::string text = "ok";
      if (!report.ok) {
        text.clear();
        for (const std::string& line : report.violations) {
          if (!text.empty()) text += '\n';
          text += line;
        }
      }
      *report_out = alloc_string(text);
    }
  });
}

}  // extern "C"
