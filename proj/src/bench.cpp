#include "hyrrt/bench.hpp"

#include "hyrrt/io.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>
#include <utility>

namespace hyrrt {

namespace {

std::string seconds_3dp(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

BenchResult run_bench(const MotionPlanningProblem& problem, const InputLibrary& library,
                      const SimulationSetup& sim, const PlannerConfig& config,
                      const BenchOptions& options) {
  if (options.trials < 1) {
    throw Error(ErrorCode::InvalidArgument, "bench needs at least one trial");
  }

  BenchResult result;
  result.records.resize(options.trials);
  std::vector<std::string> plan_texts(options.trials);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int k = next.fetch_add(1);
      if (k >= options.trials) return;
      PlannerConfig cfg = config;
      cfg.seed = options.base_seed + static_cast<std::uint64_t>(k);
      const PlanResult run = hyrrt(problem, library, sim, cfg);
      TrialRecord& rec = result.records[k];
      rec.seed = cfg.seed;
      rec.success = run.found;
      rec.iterations = run.iterations;
      rec.vertices = run.tree.size();
      rec.wall_time_seconds = run.wall_time_seconds;
      if (run.found) {
        rec.plan_file = "plans/seed_" + std::to_string(rec.seed) + ".json";
        plan_texts[k] = plan_to_json(*run.plan);
      }
    }
  };

  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min(threads, options.trials);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  BenchSummary& s = result.summary;
  s.n_trials = options.trials;
  for (const TrialRecord& rec : result.records) {
    if (!rec.success) continue;
    ++s.n_success;
    s.mean_iterations += static_cast<double>(rec.iterations);
    s.mean_vertices += rec.vertices;
    s.mean_time_seconds += rec.wall_time_seconds;
  }
  s.success_rate = static_cast<double>(s.n_success) / options.trials;
  if (s.n_success > 0) {
    s.mean_iterations /= s.n_success;
    s.mean_vertices /= s.n_success;
    s.mean_time_seconds /= s.n_success;
  }

  if (!options.out_dir.empty()) {
    write_text_file(options.out_dir + "/summary.json", summary_to_json(s));
    write_text_file(options.out_dir + "/trials.csv", trials_to_csv(result.records));
    write_text_file(options.out_dir + "/timings.csv", timings_to_csv(result.records));
    for (int k = 0; k < options.trials; ++k) {
      if (result.records[k].success) {
        write_text_file(options.out_dir + "/" + result.records[k].plan_file, plan_texts[k]);
      }
    }
  }
  return result;
}

std::string summary_to_json(const BenchSummary& summary) {
  nlohmann::ordered_json doc;
  doc["n_trials"] = summary.n_trials;
  doc["n_success"] = summary.n_success;
  doc["success_rate"] = summary.success_rate;
  doc["mean_iterations"] = summary.mean_iterations;
  doc["mean_vertices"] = summary.mean_vertices;
  doc["mean_time_seconds"] = summary.mean_time_seconds;
  return doc.dump(2) + "\n";
}

std::string trials_to_csv(const std::vector<TrialRecord>& records) {
  std::string out = "seed,success,iterations,vertices,plan_file\n";
  for (const TrialRecord& rec : records) {
    out += std::to_string(rec.seed);
    out += rec.success ? ",1," : ",0,";
    out += std::to_string(rec.iterations);
    out += ',';
    out += std::to_string(rec.vertices);
    out += ',';
    out += rec.plan_file;
    out += '\n';
  }
  return out;
}

std::string timings_to_csv(const std::vector<TrialRecord>& records) {
  std::string out = "seed,wall_time_seconds\n";
  for (const TrialRecord& rec : records) {
    out += std::to_string(rec.seed);
    out += ',';
    out += seconds_3dp(rec.wall_time_seconds);
    out += '\n';
  }
  return out;
}

}  // namespace hyrrt
