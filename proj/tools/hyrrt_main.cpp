// Command-line front end. Talks to the library exclusively through the C
// interface in hyrrt.h.
#include "hyrrt.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int fail(const std::string& where) {
  std::cerr << "error: " << where;
  const char* detail = hyrrt_last_error();
  if (detail && *detail) std::cerr << ": " << detail;
  std::cerr << "\n";
  return 1;
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

bool write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

struct ProblemArgs {
  std::string file;
  std::string system;

  int open(hyrrt_problem** out) const {
    if (!file.empty()) return hyrrt_problem_load(file.c_str(), out);
    return hyrrt_problem_gallery(system.c_str(), out);
  }
};

void add_problem_flags(CLI::App* cmd, ProblemArgs& args) {
  auto* f = cmd->add_option("--problem", args.file, "problem JSON file");
  auto* s = cmd->add_option("--system", args.system,
                            "built-in instance (bouncing_ball, biped, point_mass)");
  f->excludes(s);
  cmd->callback([&args, cmd]() {
    if (args.file.empty() && args.system.empty()) {
      throw CLI::RequiredError(cmd->get_name() + " needs --problem or --system");
    }
  });
}

struct PlanFlags {
  hyrrt_plan_options opts;
  std::string mode = "random";

  PlanFlags() { hyrrt_plan_options_defaults(&opts); }

  void add(CLI::App* cmd) {
    cmd->add_option("--seed", opts.seed, "RNG seed");
    cmd->add_option("--max-iter", opts.max_iterations, "iteration budget");
    cmd->add_option("--p-n", opts.flow_sample_bias, "flow-target sampling probability");
    cmd->add_option("--p-fg", opts.flow_when_both, "flow choice when both regimes apply");
    cmd->add_option("--eps", opts.goal_tolerance, "goal tolerance");
    cmd->add_option("--mode", mode, "random or greedy")
        ->check(CLI::IsMember({"random", "greedy"}));
  }

  const hyrrt_plan_options* finish() {
    opts.greedy = mode == "greedy" ? 1 : 0;
    return &opts;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hybrid systems motion planner"};
  app.require_subcommand(1);

  auto* plan_cmd = app.add_subcommand("plan", "search for a motion plan");
  ProblemArgs plan_problem;
  add_problem_flags(plan_cmd, plan_problem);
  PlanFlags plan_flags;
  plan_flags.add(plan_cmd);
  std::string plan_out = "-";
  std::string tree_out;
  plan_cmd->add_option("--out", plan_out, "plan JSON destination ('-' for stdout)");
  plan_cmd->add_option("--tree-out", tree_out, "also dump the search tree as CSV");

  auto* sim_cmd = app.add_subcommand("simulate", "integrate the flow from a state");
  ProblemArgs sim_problem;
  add_problem_flags(sim_cmd, sim_problem);
  std::string sim_x0;
  std::string sim_level;
  double sim_duration = 0.0;
  std::string sim_rule = "flow";
  std::string sim_method;
  double sim_step = 0.0;
  std::string sim_out = "-";
  sim_cmd->add_option("--x0", sim_x0, "initial state, comma separated")->required();
  sim_cmd->add_option("--signal-level", sim_level, "constant input level, comma separated");
  sim_cmd->add_option("--signal-duration", sim_duration, "signal duration in seconds")
      ->required();
  sim_cmd->add_option("--rule", sim_rule, "priority rule: flow or jump")
      ->check(CLI::IsMember({"flow", "jump"}));
  sim_cmd->add_option("--method", sim_method, "euler, backward-euler, or rk4");
  sim_cmd->add_option("--step", sim_step, "integration step in seconds");
  sim_cmd->add_option("--out", sim_out, "plan JSON destination ('-' for stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "run seeded planner trials");
  ProblemArgs bench_problem;
  add_problem_flags(bench_cmd, bench_problem);
  PlanFlags bench_flags;
  bench_flags.add(bench_cmd);
  int bench_trials = 100;
  int bench_threads = 0;
  std::string bench_dir;
  bench_cmd->add_option("--trials", bench_trials, "number of trials");
  bench_cmd->add_option("--threads", bench_threads, "worker threads (0 = auto)");
  bench_cmd->add_option("--out-dir", bench_dir, "directory for summary, trials, and plans");

  auto* export_cmd = app.add_subcommand("export", "re-encode a plan file");
  std::string export_plan;
  std::string export_format = "csv";
  std::string export_out = "-";
  export_cmd->add_option("--plan", export_plan, "plan JSON file")->required();
  export_cmd->add_option("--format", export_format, "json, csv, or plot")
      ->check(CLI::IsMember({"json", "csv", "plot"}));
  export_cmd->add_option("--out", export_out, "destination ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  if (plan_cmd->parsed()) {
    hyrrt_problem* problem = nullptr;
    if (plan_problem.open(&problem) != HYRRT_OK) return fail("loading problem");
    hyrrt_result* result = nullptr;
    if (hyrrt_plan(problem, plan_flags.finish(), &result) != HYRRT_OK) {
      hyrrt_problem_free(problem);
      return fail("planning");
    }
    std::cerr << (hyrrt_result_found(result) ? "plan found" : "budget exhausted")
              << ": iterations=" << hyrrt_result_iterations(result)
              << " vertices=" << hyrrt_result_vertex_count(result)
              << " time=" << hyrrt_result_wall_time_seconds(result) << "s\n";
    int code = 0;
    if (!tree_out.empty()) {
      char* tree = nullptr;
      if (hyrrt_result_tree_csv(result, &tree) != HYRRT_OK) code = 1;
      if (!code && !write_output(tree_out, tree)) code = 1;
      hyrrt_string_free(tree);
    }
    if (!code) {
      if (hyrrt_result_found(result)) {
        char* text = nullptr;
        if (hyrrt_result_plan_json(result, &text) != HYRRT_OK) {
          code = 1;
        } else if (!write_output(plan_out, text)) {
          std::cerr << "error: cannot write " << plan_out << "\n";
          code = 1;
        }
        hyrrt_string_free(text);
      } else {
        code = 2;
      }
    }
    hyrrt_result_free(result);
    hyrrt_problem_free(problem);
    return code;
  }

  if (sim_cmd->parsed()) {
    hyrrt_problem* problem = nullptr;
    if (sim_problem.open(&problem) != HYRRT_OK) return fail("loading problem");
    const std::vector<double> x0 = parse_numbers(sim_x0);
    std::vector<double> level = parse_numbers(sim_level);
    if (level.empty() && hyrrt_problem_input_dim(problem) > 0) {
      level.assign(hyrrt_problem_input_dim(problem), 0.0);
    }
    char* text = nullptr;
    const int rc = hyrrt_simulate(problem, x0.data(), x0.size(), level.data(), level.size(),
                                  sim_duration, sim_rule.c_str(),
                                  sim_method.empty() ? nullptr : sim_method.c_str(), sim_step,
                                  &text);
    int code = 0;
    if (rc != HYRRT_OK) {
      code = fail("simulating");
    } else if (!write_output(sim_out, text)) {
      std::cerr << "error: cannot write " << sim_out << "\n";
      code = 1;
    }
    hyrrt_string_free(text);
    hyrrt_problem_free(problem);
    return code;
  }

  if (bench_cmd->parsed()) {
    hyrrt_problem* problem = nullptr;
    if (bench_problem.open(&problem) != HYRRT_OK) return fail("loading problem");
    char* summary = nullptr;
    const uint64_t base_seed = bench_flags.opts.seed;
    const int rc = hyrrt_bench(problem, bench_flags.finish(), bench_trials, base_seed,
                               bench_threads, bench_dir.empty() ? nullptr : bench_dir.c_str(),
                               &summary);
    int code = 0;
    if (rc != HYRRT_OK) {
      code = fail("benchmarking");
    } else {
      std::cout << summary;
    }
    hyrrt_string_free(summary);
    hyrrt_problem_free(problem);
    return code;
  }

  // export
  std::ifstream in(export_plan, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << export_plan << "\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  char* text = nullptr;
  if (hyrrt_plan_convert(buffer.str().c_str(), export_format.c_str(), &text) != HYRRT_OK) {
    return fail("converting plan");
  }
  int code = 0;
  if (!write_output(export_out, text)) {
    std::cerr << "error: cannot write " << export_out << "\n";
    code = 1;
  }
  hyrrt_string_free(text);
  return code;
}
