#pragma once

#include "hyrrt/core.hpp"

#include <optional>
#include <utility>

namespace hyrrt {

/// A point (t, j) in hybrid time: t seconds of flow, j discrete transitions.
struct HybridTime {
  double t = 0.0;
  int j = 0;
};

/// Union of intervals [t_j, t_{j+1}] x {j}, j = 0..J, with t_0 = 0.
/// Stored as the boundary sequence t_0 <= t_1 <= ... <= t_{J+1}.
class HybridTimeDomain {
 public:
  HybridTimeDomain() : boundaries_{0.0, 0.0} {}
  explicit HybridTimeDomain(std::vector<double> boundaries);

  int jump_count() const { return static_cast<int>(boundaries_.size()) - 2; }
  double total_duration() const { return boundaries_.back(); }

  /// [t_j, t_{j+1}] for interval j.
  std::pair<double, double> interval(int j) const;

  bool contains(const HybridTime& p, double tol = 0.0) const;
  HybridTime end() const { return {boundaries_.back(), jump_count()}; }

  const std::vector<double>& boundaries() const { return boundaries_; }

 private:
  std::vector<double> boundaries_;
};

bool almost_equal(const HybridTimeDomain& a, const HybridTimeDomain& b, double tol);

/// Trajectory over a hybrid time domain, stored as per-interval sample grids.
/// Segment j covers [t_j, t_{j+1}]: strictly increasing sample times whose
/// first/last entries are the interval endpoints; a zero-length interval
/// holds exactly one sample. Values are immutable after construction and
/// linearly interpolated in t inside a segment.
class HybridArc {
 public:
  struct Segment {
    std::vector<double> times;
    std::vector<double> values;  // times.size() * dim, sample-major
  };

  HybridArc(int dim, std::vector<Segment> segments);

  /// Single-interval arc from parallel time/value rows.
  static HybridArc from_samples(int dim, std::vector<double> times, std::vector<double> values);

  int dim() const { return dim_; }
  int segment_count() const { return static_cast<int>(segments_.size()); }
  const Segment& segment(int j) const { return segments_[j]; }

  std::size_t sample_count(int j) const { return segments_[j].times.size(); }
  std::size_t total_samples() const;

  Eigen::Map<const Vec> sample(int j, std::size_t i) const;
  double sample_time(int j, std::size_t i) const { return segments_[j].times[i]; }

  /// Value at (t, j), interpolating inside segment j. t must lie in the
  /// segment's interval.
  Vec value(double t, int j) const;

  HybridTimeDomain domain() const;
  HybridTime end_time() const;
  Eigen::Map<const Vec> start_value() const { return sample(0, 0); }
  Eigen::Map<const Vec> end_value() const;

 private:
  int dim_;
  std::vector<Segment> segments_;
};

/// State trajectory and input signal over one shared domain and sample grid.
struct SolutionPair {
  HybridArc state;
  HybridArc input;

  SolutionPair(HybridArc state_in, HybridArc input_in);

  int state_dim() const { return state.dim(); }
  int input_dim() const { return input.dim(); }
  HybridTimeDomain domain() const { return state.domain(); }

  /// Single interval only (no transitions).
  bool purely_continuous() const { return state.segment_count() == 1; }
  /// Exactly one transition and no flow.
  bool purely_discrete() const;
};

/// Appends `second` after `first`: the second domain is translated by the
/// first's terminal hybrid time, and the junction sample takes the second
/// arc's initial value.
HybridArc concat(const HybridArc& first, const HybridArc& second);
SolutionPair concat(const SolutionPair& first, const SolutionPair& second);

/// Restriction to hybrid times between `from` and `to` (both must lie in the
/// domain, componentwise ordered), translated to start at (0, 0). Endpoint
/// samples are interpolated when they fall between grid points.
HybridArc truncate(const HybridArc& arc, const HybridTime& from, const HybridTime& to);
SolutionPair truncate(const SolutionPair& pair, const HybridTime& from, const HybridTime& to);

/// (tau, eps)-closeness: every sample of one arc with t + j <= tau has a
/// hybrid time (s, j) on the other arc with |t - s| < eps whose interpolated
/// value is strictly within eps, and symmetrically.
bool are_close(const HybridArc& a, const HybridArc& b, double tau, double eps);

}  // namespace hyrrt
