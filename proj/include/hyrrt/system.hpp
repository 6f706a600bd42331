#pragma once

#include "hyrrt/arc.hpp"

#include <functional>
#include <memory>
#include <optional>

namespace hyrrt {

/// Vector field or reset map evaluated in place: out = f(x, u).
using VectorMap = std::function<void(ConstVecRef x, ConstVecRef u, VecRef out)>;

/// Membership test for a region of (x, u) space. `tol` relaxes each defining
/// constraint outward; tol = 0 is the set as written.
using RegionTest = std::function<bool(ConstVecRef x, ConstVecRef u, double tol)>;

/// Builds the membership test of the region grown by a given radius. Systems
/// whose regions have a closed-form grown version supply this; otherwise a
/// sampled fallback is used.
using RegionGrower = std::function<RegionTest(double radius)>;

/// Hybrid model: differential motion on the flow region, instantaneous reset
/// on the jump region.
struct HybridSystem {
  int state_dim = 0;
  int input_dim = 0;

  RegionTest flow_region;   // where flowing is allowed
  VectorMap flow_field;     // xdot = flow_field(x, u)
  RegionTest jump_region;   // where a reset is allowed
  VectorMap jump_reset;     // x+ = jump_reset(x, u)

  Box state_bounds;       // sampling window in state space
  Box flow_input_bounds;  // admissible constant input levels during flow
  Box jump_input_bounds;  // admissible reset inputs

  // Closed-form grown regions; may be empty.
  RegionGrower grow_flow_region;
  RegionGrower grow_jump_region;

  Vec flow(ConstVecRef x, ConstVecRef u) const;
  Vec reset(ConstVecRef x, ConstVecRef u) const;
};

/// Region of state space with uniform sampling support. Points and boxes
/// carry exact distance; predicate regions fall back to rejection sampling
/// inside a window and a cached point cloud for distances.
class StateSet {
 public:
  using Predicate = std::function<bool(ConstVecRef x, double tol)>;
  using Sampler = std::function<Vec(Rng&)>;

  StateSet() = default;

  static StateSet point(Vec x);
  static StateSet box(Box b);
  static StateSet empty(int dim);
  /// `sampler` may be null, in which case rejection sampling over `window`
  /// is used. Distances come from a seed-fixed cloud of `cloud_size` points.
  static StateSet predicate(Predicate pred, Box window, Sampler sampler = nullptr,
                            std::size_t cloud_size = 10000);

  bool valid() const { return contains_ != nullptr; }
  bool is_empty_set() const { return kind_ == Kind::Empty; }
  int dim() const { return dim_; }

  bool contains(ConstVecRef x, double tol = 0.0) const;
  Vec sample(Rng& rng) const;
  double distance(ConstVecRef x) const;

 private:
  enum class Kind { Point, BoxSet, PredicateSet, Empty };
  Kind kind_ = Kind::Empty;
  int dim_ = 0;
  Predicate contains_;
  Sampler sampler_;
  Box window_;
  Vec anchor_;  // the point for Kind::Point
  std::shared_ptr<const std::vector<Vec>> cloud_;
};

/// Unsafe region over (x, u); an unset test means nothing is unsafe.
using UnsafeTest = RegionTest;

struct MotionPlanningProblem {
  HybridSystem system;
  StateSet start_states;  // plans must begin here
  StateSet goal_states;   // plans must end within tolerance of here
  UnsafeTest unsafe;      // may be null

  /// State projections of the two regions, used for target sampling and for
  /// deciding how a vertex may be extended.
  StateSet flow_projection;
  StateSet jump_projection;

  bool is_unsafe(ConstVecRef x, ConstVecRef u, double tol = 0.0) const {
    return unsafe && unsafe(x, u, tol);
  }
};

/// True when some admissible flow input level makes (x, u) a member, probed
/// on a per-axis grid over the input box.
bool in_flow_projection(const HybridSystem& sys, ConstVecRef x, double tol,
                        int grid_points_per_axis = 17);
bool in_jump_projection(const HybridSystem& sys, ConstVecRef x, double tol,
                        int grid_points_per_axis = 17);

/// Builds projection sets by wrapping the grid probes above with rejection
/// sampling over the state bounds.
StateSet default_flow_projection(const HybridSystem& sys, int grid_points_per_axis = 17);
StateSet default_jump_projection(const HybridSystem& sys, int grid_points_per_axis = 17);

/// System with both regions grown by `radius` (Euclidean, separately in x
/// and u); motion maps and bounds are unchanged. Uses closed-form growers
/// when the system has them, otherwise a sampled probe approximation.
HybridSystem inflate(const HybridSystem& sys, double radius);

/// Checks that the plan keeps a safety margin: balls of the given radius
/// around flow-interior samples stay in the flow region, around transition
/// samples stay in the jump region, and around every sample avoid the unsafe
/// region. Balls are probed at axis-aligned plus seed-fixed directions.
bool clearance_check(const SolutionPair& plan, double radius, const HybridSystem& sys,
                     const UnsafeTest& unsafe, int probes = 32);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string what) {
    ok = false;
    violations.push_back(std::move(what));
  }
};

/// Checks that the pair is a trajectory of the system: initial membership,
/// flow-region membership at interior samples, finite-difference derivative
/// against the flow field, and transition membership plus reset consistency
/// across segment boundaries. `tol` bounds residuals and relaxes memberships;
/// use ten times the integration step for simulator output.
ValidationReport validate_solution_pair(const HybridSystem& sys, const SolutionPair& pair,
                                        double tol);

}  // namespace hyrrt
