#pragma once

#include "hyrrt/gallery.hpp"

namespace hyrrt {

struct TrialRecord {
  std::uint64_t seed = 0;
  bool success = false;
  std::uint64_t iterations = 0;
  int vertices = 0;
  double wall_time_seconds = 0.0;
  std::string plan_file;  // relative to the output directory; empty on failure
};

/// Means are taken over successful trials only.
struct BenchSummary {
  int n_trials = 0;
  int n_success = 0;
  double success_rate = 0.0;
  double mean_iterations = 0.0;
  double mean_vertices = 0.0;
  double mean_time_seconds = 0.0;
};

struct BenchOptions {
  int trials = 100;
  std::uint64_t base_seed = 0;
  int threads = 0;  // 0 picks the hardware concurrency
  /// When set, writes summary.json, trials.csv, timings.csv, and
  /// plans/seed_<k>.json for every successful trial.
  std::string out_dir;
};

struct BenchResult {
  BenchSummary summary;
  std::vector<TrialRecord> records;  // ordered by seed
};

/// Runs `trials` independent planner instances with seeds base_seed,
/// base_seed+1, ... in a worker pool. Each trial owns its RNG, so the
/// records (and any written plan files) depend only on the seeds.
BenchResult run_bench(const MotionPlanningProblem& problem, const InputLibrary& library,
                      const SimulationSetup& sim, const PlannerConfig& config,
                      const BenchOptions& options);

std::string summary_to_json(const BenchSummary& summary);
/// seed,success,iterations,vertices,plan_file. Wall times live in a separate
/// table because they vary run to run; this one is byte-stable per seed set.
std::string trials_to_csv(const std::vector<TrialRecord>& records);
std::string timings_to_csv(const std::vector<TrialRecord>& records);

}  // namespace hyrrt
