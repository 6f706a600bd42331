#include "hyrrt/plan.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <utility>

namespace hyrrt {

int SearchTree::add_root(ConstVecRef x) {
  if (x.size() != state_dim_) {
    throw Error(ErrorCode::InvalidArgument, "root state has wrong dimension");
  }
  states_.insert(states_.end(), x.data(), x.data() + x.size());
  parent_.push_back(-1);
  incoming_.push_back(-1);
  return static_cast<int>(parent_.size()) - 1;
}

int SearchTree::add_child(int parent, ConstVecRef x, SolutionPair motion) {
  if (parent < 0 || parent >= size()) {
    throw Error(ErrorCode::InvalidArgument, "parent vertex out of range");
  }
  if (x.size() != state_dim_) {
    throw Error(ErrorCode::InvalidArgument, "child state has wrong dimension");
  }
  states_.insert(states_.end(), x.data(), x.data() + x.size());
  const int id = static_cast<int>(parent_.size());
  parent_.push_back(parent);
  incoming_.push_back(static_cast<int>(edges_.size()));
  edges_.push_back(Edge{parent, id, std::move(motion)});
  return id;
}

std::optional<int> nearest_neighbor(const SearchTree& tree, ConstVecRef x,
                                    const StateSet& filter, double tol) {
  if (x.size() != tree.state_dim()) {
    throw Error(ErrorCode::InvalidArgument, "query state has wrong dimension");
  }
  double best = std::numeric_limits<double>::infinity();
  int best_id = -1;
  for (int v = 0; v < tree.size(); ++v) {
    const auto xv = tree.state(v);
    if (filter.valid() && !filter.contains(xv, tol)) continue;
    const double d2 = (xv - x).squaredNorm();
    // Strict < keeps the smallest id on ties.
    if (d2 < best) {
      best = d2;
      best_id = v;
    }
  }
  if (best_id < 0) return std::nullopt;
  return best_id;
}

namespace {

bool motion_is_safe(const MotionPlanningProblem& problem, const SolutionPair& motion) {
  if (!problem.unsafe) return true;
  const HybridArc& xs = motion.state;
  const HybridArc& us = motion.input;
  for (int j = 0; j < xs.segment_count(); ++j) {
    for (std::size_t i = 0; i < xs.sample_count(j); ++i) {
      if (problem.unsafe(xs.sample(j, i), us.sample(j, i), 0.0)) return false;
    }
  }
  return true;
}

std::optional<Extension> try_flow(const MotionPlanningProblem& problem,
                                  const SimulationSetup& sim, ConstVecRef x,
                                  const InputSignal& signal) {
  std::optional<SolutionPair> motion;
  try {
    motion = continuous_simulator(problem.system, PriorityRule::Flow, x, signal, sim);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (motion->state.end_time().t <= 0.0) return std::nullopt;
  if (!motion_is_safe(problem, *motion)) return std::nullopt;
  Vec terminal = motion->state.end_value();
  const bool cut_short = motion->state.end_time().t < signal.duration - 1e-12;
  return Extension{std::move(*motion), std::move(terminal), cut_short};
}

std::optional<Extension> try_jump(const MotionPlanningProblem& problem, ConstVecRef x,
                                  ConstVecRef value, double membership_tol) {
  std::optional<SolutionPair> motion;
  try {
    motion = discrete_simulator(problem.system, x, value, membership_tol);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!motion_is_safe(problem, *motion)) return std::nullopt;
  Vec terminal = motion->state.end_value();
  return Extension{std::move(*motion), std::move(terminal)};
}

// Earliest stored sample of the motion within goal_tolerance of the goal set,
// skipping the initial sample (it belongs to the parent vertex).
std::optional<HybridTime> first_goal_hit(const SolutionPair& motion, const StateSet& goal,
                                         double goal_tolerance) {
  const HybridArc& xs = motion.state;
  for (int j = 0; j < xs.segment_count(); ++j) {
    for (std::size_t i = (j == 0) ? 1 : 0; i < xs.sample_count(j); ++i) {
      if (goal.distance(xs.sample(j, i)) <= goal_tolerance) {
        return HybridTime{xs.sample_time(j, i), j};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Extension> new_state(const MotionPlanningProblem& problem,
                                   const InputLibrary& library, const SimulationSetup& sim,
                                   const PlannerConfig& config, ConstVecRef vertex_state,
                                   ConstVecRef x_target, Rng& rng) {
  const double tol = config.membership_tol;
  const bool can_flow = problem.flow_projection.contains(vertex_state, tol);
  const bool can_jump = problem.jump_projection.contains(vertex_state, tol);
  bool flow_regime = false;
  if (can_flow && can_jump) {
    flow_regime = rng.uniform() <= config.flow_when_both;
  } else if (can_flow) {
    flow_regime = true;
  } else if (can_jump) {
    flow_regime = false;
  } else {
    return std::nullopt;
  }

  if (!flow_regime) {
    // Jump inputs are drawn uniformly in both modes. Reset maps that reverse
    // direction put every post-jump state on the far side of any jump-regime
    // target, so a nearest-to-target sweep would always collapse onto the
    // smallest input and starve the rest of the jump set.
    if (!library.has_jump_inputs()) return std::nullopt;
    return try_jump(problem, vertex_state, library.sample_jump(rng), tol);
  }

  if (!library.has_flow_inputs()) return std::nullopt;
  if (config.mode == PlannerMode::Random) {
    return try_flow(problem, sim, vertex_state, library.sample_flow(rng));
  }

  // Greedy: sweep the candidate flow signals and keep the extension whose
  // endpoint lands nearest the target; unsafe or failed candidates drop out.
  // A candidate that passes through the goal set wins outright: the sweep's
  // whole point is search progress, and nothing beats finishing.
  std::optional<Extension> best;
  double best_dist = std::numeric_limits<double>::infinity();
  bool done = false;
  auto consider = [&](std::optional<Extension> candidate) {
    if (!candidate || done) return;
    if (first_goal_hit(candidate->motion, problem.goal_states, config.goal_tolerance)) {
      best = std::move(candidate);
      done = true;
      return;
    }
    const double d = (candidate->terminal - x_target).norm();
    if (d < best_dist) {
      best_dist = d;
      best = std::move(candidate);
    }
  };
  if (library.flow_mode() == InputLibrary::Mode::Finite) {
    for (const InputSignal& signal : library.flow_signals()) {
      if (done) break;
      consider(try_flow(problem, sim, vertex_state, signal));
    }
  } else {
    // Continuous family: sweep an even grid over the hold-time range instead
    // of random draws. Random draws bias the argmin toward the shortest one,
    // which fills the tree with stubby edges; the grid keeps rung spacing, and
    // thus minimum edge length, at max_hold / draws.
    const double rung = library.max_hold() / config.greedy_draws;
    for (int k = 1; k <= config.greedy_draws && !done; ++k) {
      InputSignal signal = library.sample_flow(rng);
      signal.duration = rung * k;
      consider(try_flow(problem, sim, vertex_state, signal));
    }
  }
  return best;
}

ExtendOutcome extend(SearchTree& tree, const MotionPlanningProblem& problem,
                     const InputLibrary& library, const SimulationSetup& sim,
                     const PlannerConfig& config, ConstVecRef x_target, bool flow_target,
                     Rng& rng, int* new_vertex) {
  if (new_vertex) *new_vertex = -1;
  const StateSet& filter = flow_target ? config.flow_vertex_filter : config.jump_vertex_filter;
  const auto nearest = nearest_neighbor(tree, x_target, filter, config.membership_tol);
  if (!nearest) return ExtendOutcome::Trapped;
  auto ext = new_state(problem, library, sim, config, tree.state(*nearest), x_target, rng);
  if (!ext) return ExtendOutcome::Trapped;

  // If the motion passes through the goal set, cut it there: the interior
  // samples are legitimate stopping points, and a vertex-only test would let
  // trajectories sail straight through the goal without anyone noticing.
  if (auto hit = first_goal_hit(ext->motion, problem.goal_states, config.goal_tolerance)) {
    const HybridTime start{ext->motion.state.sample_time(0, 0), 0};
    ext->motion = truncate(ext->motion, start, *hit);
    ext->terminal = ext->motion.state.end_value();
    const int id = tree.add_child(*nearest, ext->terminal, std::move(ext->motion));
    if (new_vertex) *new_vertex = id;
    return ExtendOutcome::Advanced;
  }

  const double dist_new = (ext->terminal - x_target).norm();
  // A flow extension that ran its full drawn duration counts as advancing only
  // if it ends closer to the sample than the vertex it grew from; anything
  // else would pile near-duplicates around existing vertices and starve the
  // frontier. Motions cut short at a regime boundary are exempt (the endpoint
  // is dictated by the dynamics, and it is the doorway to the other regime),
  // as are jumps, whose reset legitimately moves away from the sample.
  if (ext->motion.purely_continuous() && !ext->guard_stopped &&
      dist_new >= (tree.state(*nearest) - x_target).norm()) {
    return ExtendOutcome::Trapped;
  }
  // A state the tree effectively holds already adds nothing: resets are
  // deterministic per input value, and overlong flow draws from one vertex all
  // pile up on the same regime boundary. Jump children get a coarser radius:
  // the reachable reset lattice crowds onto low-dimensional sets, and packing
  // near-identical vertices there starves its slots of nearest-neighbor picks.
  const double dedupe =
      ext->motion.purely_discrete() ? config.jump_dedupe_radius : 1e-9;
  for (int v = 0; v < tree.size(); ++v) {
    if ((tree.state(v) - ext->terminal).norm() <= dedupe) {
      return ExtendOutcome::Trapped;
    }
  }
  const int id = tree.add_child(*nearest, ext->terminal, std::move(ext->motion));
  if (new_vertex) *new_vertex = id;
  return dist_new <= config.reach_tolerance ? ExtendOutcome::Reached : ExtendOutcome::Advanced;
}

namespace {

// Path root -> v if v meets the goal and every handoff along the way is
// consistent; a plan needs at least one edge, so bare roots never qualify.
std::optional<std::vector<int>> path_from_vertex(const SearchTree& tree,
                                                 const MotionPlanningProblem& problem, int v,
                                                 double goal_tolerance, double membership_tol) {
  if (tree.is_root(v)) return std::nullopt;
  if (problem.goal_states.distance(tree.state(v)) > goal_tolerance) return std::nullopt;

  std::vector<int> path;
  for (int cur = v; cur >= 0; cur = tree.parent(cur)) path.push_back(cur);
  std::reverse(path.begin(), path.end());

  if (!problem.start_states.contains(tree.state(path.front()), membership_tol)) {
    return std::nullopt;
  }
  // Two continuous edges meet at a vertex the flow must pass through; the
  // successor's starting sample has to sit inside the flow set.
  for (size_t k = 1; k + 1 < path.size(); ++k) {
    const auto& prev = tree.edge(tree.incoming_edge(path[k])).motion;
    const auto& next = tree.edge(tree.incoming_edge(path[k + 1])).motion;
    if (!prev.purely_continuous() || !next.purely_continuous()) continue;
    if (!problem.system.flow_region(next.state.sample(0, 0), next.input.sample(0, 0),
                                    membership_tol)) {
      return std::nullopt;
    }
  }
  return path;
}

}  // namespace

std::optional<std::vector<int>> check_solution(const SearchTree& tree,
                                               const MotionPlanningProblem& problem,
                                               double goal_tolerance, double membership_tol) {
  for (int v = 0; v < tree.size(); ++v) {
    if (auto path = path_from_vertex(tree, problem, v, goal_tolerance, membership_tol)) {
      return path;
    }
  }
  return std::nullopt;
}

SolutionPair path_to_motion_plan(const SearchTree& tree, const std::vector<int>& path) {
  if (path.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "path needs at least one edge");
  }
  for (size_t k = 1; k < path.size(); ++k) {
    if (tree.parent(path[k]) != path[k - 1]) {
      throw Error(ErrorCode::InvalidArgument, "path vertices are not parent-linked");
    }
  }
  SolutionPair plan = tree.edge(tree.incoming_edge(path[1])).motion;
  for (size_t k = 2; k < path.size(); ++k) {
    plan = concat(plan, tree.edge(tree.incoming_edge(path[k])).motion);
  }
  return plan;
}

PlanResult hyrrt(const MotionPlanningProblem& problem, const InputLibrary& library,
                 const SimulationSetup& sim, const PlannerConfig& config) {
  if (problem.system.state_dim < 1) {
    throw Error(ErrorCode::InvalidArgument, "problem has no system");
  }
  if (config.flow_sample_bias < 0.0 || config.flow_sample_bias > 1.0 ||
      config.flow_when_both < 0.0 || config.flow_when_both > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "planner probabilities must lie in [0, 1]");
  }
  if (config.goal_tolerance < 0.0 || config.init_samples < 1) {
    throw Error(ErrorCode::InvalidArgument, "bad planner configuration");
  }

  const auto t0 = std::chrono::steady_clock::now();
  PlannerConfig cfg = config;
  // A flow target extends a vertex that can flow, a jump target one that can
  // jump; unset filters default to the matching regime projection.
  if (!cfg.flow_vertex_filter.valid()) {
    cfg.flow_vertex_filter = problem.flow_projection;
  }
  if (!cfg.jump_vertex_filter.valid()) {
    cfg.jump_vertex_filter = problem.jump_projection;
  }

  Rng rng(cfg.seed);
  PlanResult result;
  SearchTree tree(problem.system.state_dim);
  for (int k = 0; k < cfg.init_samples; ++k) {
    tree.add_root(problem.start_states.sample(rng));
  }

  for (uint64_t iter = 1; iter <= cfg.max_iterations; ++iter) {
    result.iterations = iter;
    // Draw order per iteration: regime coin, then target sample, then
    // whatever new_state consumes. Keep it fixed; seeds pin runs bit-for-bit.
    const bool flow_target = rng.uniform() <= cfg.flow_sample_bias;
    Vec target;
    try {
      target = flow_target ? problem.flow_projection.sample(rng)
                           : problem.jump_projection.sample(rng);
    } catch (const Error&) {
      continue;  // that regime has nothing to sample (e.g. no jump set)
    }
    int vertex = -1;
    const ExtendOutcome outcome =
        extend(tree, problem, library, sim, cfg, target, flow_target, rng, &vertex);
    if (outcome == ExtendOutcome::Trapped) continue;
    if (auto path = path_from_vertex(tree, problem, vertex, cfg.goal_tolerance,
                                     cfg.membership_tol)) {
      result.found = true;
      result.path = std::move(*path);
      result.plan = path_to_motion_plan(tree, result.path);
      break;
    }
  }

  result.tree = std::move(tree);
  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::string tree_to_plot(const SearchTree& tree) {
  std::string out = "edge,t,j";
  for (int d = 0; d < tree.state_dim(); ++d) out += ",x_" + std::to_string(d);
  out += "\n";
  for (int e = 0; e < tree.edge_count(); ++e) {
    const HybridArc& arc = tree.edge(e).motion.state;
    for (int j = 0; j < arc.segment_count(); ++j) {
      for (std::size_t i = 0; i < arc.sample_count(j); ++i) {
        out += std::to_string(e);
        out += ',';
        out += format_double(arc.sample_time(j, i));
        out += ',';
        out += std::to_string(j);
        const auto x = arc.sample(j, i);
        for (int d = 0; d < x.size(); ++d) {
          out += ',';
          out += format_double(x[d]);
        }
        out += '\n';
      }
    }
    if (e + 1 < tree.edge_count()) out += '\n';
  }
  return out;
}

}  // namespace hyrrt
