#pragma once

#include "hyrrt/simulate.hpp"

namespace hyrrt {

/// Search tree rooted at start states. Vertex states live in one contiguous
/// array for fast nearest-neighbor scans; every non-root vertex keeps the
/// trajectory of the edge that produced it.
class SearchTree {
 public:
  struct Edge {
    int from = -1;
    int to = -1;
    SolutionPair motion;
  };

  explicit SearchTree(int state_dim) : state_dim_(state_dim) {}

  int state_dim() const { return state_dim_; }
  int size() const { return static_cast<int>(parent_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int add_root(ConstVecRef x);
  int add_child(int parent, ConstVecRef x, SolutionPair motion);

  Eigen::Map<const Vec> state(int v) const {
    return Eigen::Map<const Vec>(states_.data() + static_cast<std::size_t>(v) * state_dim_,
                                 state_dim_);
  }
  int parent(int v) const { return parent_[v]; }
  bool is_root(int v) const { return parent_[v] < 0; }
  const Edge& edge(int index) const { return edges_[index]; }
  /// Edge whose trajectory ends at v; -1 for roots.
  int incoming_edge(int v) const { return incoming_[v]; }

  const double* states_data() const { return states_.data(); }

 private:
  int state_dim_;
  std::vector<double> states_;
  std::vector<int> parent_;
  std::vector<int> incoming_;
  std::vector<Edge> edges_;
};

/// Closest vertex to x among those whose state lies in `filter` (a
/// default-constructed set accepts everything). Ties break toward the
/// smallest vertex id; empty candidate set gives nothing.
std::optional<int> nearest_neighbor(const SearchTree& tree, ConstVecRef x,
                                    const StateSet& filter, double tol = 0.0);

enum class ExtendOutcome { Reached, Advanced, Trapped };

enum class PlannerMode { Random, Greedy };

struct PlannerConfig {
  std::uint64_t seed = 0;
  std::uint64_t max_iterations = 2000;
  double flow_sample_bias = 0.5;     // probability of targeting the flow projection
  double flow_when_both = 0.5;       // flow choice when a vertex admits either regime
  double goal_tolerance = 0.2;
  double reach_tolerance = 1e-6;     // new state counts as reaching the target below this
  double membership_tol = 1e-9;
  PlannerMode mode = PlannerMode::Random;
  int greedy_draws = 32;             // candidate draws per extension in continuous mode
  double jump_dedupe_radius = 1e-9;  // drop reset children this close to an existing vertex
  int init_samples = 1;              // roots drawn from the start set
  StateSet flow_vertex_filter;       // unset: the state-bounds box
  StateSet jump_vertex_filter;
};

/// Trajectory extension from one vertex toward a target state.
struct Extension {
  SolutionPair motion;
  Vec terminal;
  // True when the simulator cut the motion short of its drawn duration at a
  // regime boundary; such endpoints are dictated by the dynamics.
  bool guard_stopped = false;
};

/// Grows a candidate trajectory from the vertex state toward x_target. The
/// vertex's own regime decides between flow and reset; candidates touching
/// the unsafe region are discarded. In greedy mode the whole library (or
/// `greedy_draws` continuous draws) is swept for the candidate ending
/// closest to the target.
std::optional<Extension> new_state(const MotionPlanningProblem& problem,
                                   const InputLibrary& library, const SimulationSetup& sim,
                                   const PlannerConfig& config, ConstVecRef vertex_state,
                                   ConstVecRef x_target, Rng& rng);

/// One planner iteration body: nearest vertex under the regime filter, a
/// candidate extension, then tree insertion. `flow_flag` picks the filter.
ExtendOutcome extend(SearchTree& tree, const MotionPlanningProblem& problem,
                     const InputLibrary& library, const SimulationSetup& sim,
                     const PlannerConfig& config, ConstVecRef x_target, bool flow_flag, Rng& rng,
                     int* new_vertex);

/// Root-to-vertex path ending within the goal tolerance, or nothing. Also
/// enforces that consecutive flow edges hand over inside the flow region.
std::optional<std::vector<int>> check_solution(const SearchTree& tree,
                                               const MotionPlanningProblem& problem,
                                               double goal_tolerance, double membership_tol);

/// The plan is the edge trajectories along the path, concatenated in order.
SolutionPair path_to_motion_plan(const SearchTree& tree, const std::vector<int>& path);

struct PlanResult {
  bool found = false;
  std::optional<SolutionPair> plan;
  std::vector<int> path;
  SearchTree tree{0};
  std::uint64_t iterations = 0;
  double wall_time_seconds = 0.0;
};

PlanResult hyrrt(const MotionPlanningProblem& problem, const InputLibrary& library,
                 const SimulationSetup& sim, const PlannerConfig& config);

/// Edge polylines as a flat table (edge, t, j, state columns), with blank
/// lines between edges for plotting.
std::string tree_to_plot(const SearchTree& tree);

}  // namespace hyrrt
