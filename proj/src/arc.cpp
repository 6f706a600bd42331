#include "hyrrt/arc.hpp"

#include <algorithm>
#include <cmath>

namespace hyrrt {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

HybridTimeDomain::HybridTimeDomain(std::vector<double> boundaries)
    : boundaries_(std::move(boundaries)) {
  require(boundaries_.size() >= 2, "domain needs at least one interval");
  require(boundaries_.front() == 0.0, "domain must start at t = 0");
  for (std::size_t i = 1; i < boundaries_.size(); ++i) {
    require(boundaries_[i - 1] <= boundaries_[i], "domain boundaries must be non-decreasing");
  }
}

std::pair<double, double> HybridTimeDomain::interval(int j) const {
  require(j >= 0 && j <= jump_count(), "interval index out of range");
  return {boundaries_[j], boundaries_[j + 1]};
}

bool HybridTimeDomain::contains(const HybridTime& p, double tol) const {
  if (p.j < 0 || p.j > jump_count()) return false;
  auto [a, b] = interval(p.j);
  return p.t >= a - tol && p.t <= b + tol;
}

bool almost_equal(const HybridTimeDomain& a, const HybridTimeDomain& b, double tol) {
  if (a.jump_count() != b.jump_count()) return false;
  for (std::size_t i = 0; i < a.boundaries().size(); ++i) {
    if (std::abs(a.boundaries()[i] - b.boundaries()[i]) > tol) return false;
  }
  return true;
}

HybridArc::HybridArc(int dim, std::vector<Segment> segments)
    : dim_(dim), segments_(std::move(segments)) {
  require(dim_ >= 1, "arc dimension must be positive");
  require(!segments_.empty(), "arc needs at least one segment");
  for (std::size_t j = 0; j < segments_.size(); ++j) {
    const Segment& s = segments_[j];
    require(!s.times.empty(), "segment has no samples");
    require(s.values.size() == s.times.size() * static_cast<std::size_t>(dim_),
            "segment value row count does not match its time grid");
    for (std::size_t i = 1; i < s.times.size(); ++i) {
      require(s.times[i - 1] < s.times[i], "segment sample times must be strictly increasing");
    }
  }
  require(segments_[0].times.front() == 0.0, "arc must start at t = 0");
  for (std::size_t j = 1; j < segments_.size(); ++j) {
    require(segments_[j].times.front() == segments_[j - 1].times.back(),
            "segment must start where the previous one ends");
  }
}

HybridArc HybridArc::from_samples(int dim, std::vector<double> times,
                                  std::vector<double> values) {
  std::vector<Segment> segs(1);
  segs[0].times = std::move(times);
  segs[0].values = std::move(values);
  return HybridArc(dim, std::move(segs));
}

std::size_t HybridArc::total_samples() const {
  std::size_t n = 0;
  for (const Segment& s : segments_) n += s.times.size();
  return n;
}

Eigen::Map<const Vec> HybridArc::sample(int j, std::size_t i) const {
  const Segment& s = segments_[j];
  return Eigen::Map<const Vec>(s.values.data() + i * dim_, dim_);
}

Vec HybridArc::value(double t, int j) const {
  require(j >= 0 && j < segment_count(), "segment index out of range");
  const Segment& s = segments_[j];
  require(t >= s.times.front() && t <= s.times.back(), "time outside segment interval");
  // upper_bound-1 gives the last grid time <= t.
  auto it = std::upper_bound(s.times.begin(), s.times.end(), t);
  std::size_t i = static_cast<std::size_t>(it - s.times.begin());
  if (i > 0) --i;
  if (i + 1 >= s.times.size() || t == s.times[i]) return sample(j, i);
  const double t0 = s.times[i], t1 = s.times[i + 1];
  const double w = (t - t0) / (t1 - t0);
  return (1.0 - w) * sample(j, i) + w * sample(j, i + 1);
}

HybridTimeDomain HybridArc::domain() const {
  std::vector<double> bounds;
  bounds.reserve(segments_.size() + 1);
  bounds.push_back(segments_[0].times.front());
  for (const Segment& s : segments_) bounds.push_back(s.times.back());
  return HybridTimeDomain(std::move(bounds));
}

HybridTime HybridArc::end_time() const {
  return {segments_.back().times.back(), segment_count() - 1};
}

Eigen::Map<const Vec> HybridArc::end_value() const {
  const int j = segment_count() - 1;
  return sample(j, segments_[j].times.size() - 1);
}

SolutionPair::SolutionPair(HybridArc state_in, HybridArc input_in)
    : state(std::move(state_in)), input(std::move(input_in)) {
  require(state.segment_count() == input.segment_count(),
          "state and input must share the sample grid");
  for (int j = 0; j < state.segment_count(); ++j) {
    require(state.segment(j).times == input.segment(j).times,
            "state and input must share the sample grid");
  }
}

bool SolutionPair::purely_discrete() const {
  return state.segment_count() == 2 && state.sample_count(0) == 1 && state.sample_count(1) == 1;
}

HybridArc concat(const HybridArc& first, const HybridArc& second) {
  require(first.dim() == second.dim(), "cannot concatenate arcs of different dimension");
  const HybridTime end = first.end_time();

  std::vector<HybridArc::Segment> segs;
  segs.reserve(first.segment_count() + second.segment_count() - 1);
  for (int j = 0; j < first.segment_count(); ++j) segs.push_back(first.segment(j));

  // Junction sample takes the second arc's initial value.
  HybridArc::Segment& junction = segs.back();
  const std::size_t last = junction.times.size() - 1;
  Eigen::Map<Vec>(junction.values.data() + last * first.dim(), first.dim()) =
      second.sample(0, 0);

  const HybridArc::Segment& head = second.segment(0);
  for (std::size_t i = 1; i < head.times.size(); ++i) {
    junction.times.push_back(end.t + head.times[i]);
    const double* v = head.values.data() + i * second.dim();
    junction.values.insert(junction.values.end(), v, v + second.dim());
  }

  for (int j = 1; j < second.segment_count(); ++j) {
    HybridArc::Segment s = second.segment(j);
    for (double& t : s.times) t += end.t;
    segs.push_back(std::move(s));
  }
  return HybridArc(first.dim(), std::move(segs));
}

SolutionPair concat(const SolutionPair& first, const SolutionPair& second) {
  return SolutionPair(concat(first.state, second.state), concat(first.input, second.input));
}

HybridArc truncate(const HybridArc& arc, const HybridTime& from, const HybridTime& to) {
  const HybridTimeDomain dom = arc.domain();
  require(dom.contains(from), "truncation start outside the domain");
  require(dom.contains(to), "truncation end outside the domain");
  require(from.t <= to.t && from.j <= to.j, "truncation window must be ordered");

  std::vector<HybridArc::Segment> segs;
  segs.reserve(to.j - from.j + 1);
  for (int j = from.j; j <= to.j; ++j) {
    const HybridArc::Segment& src = arc.segment(j);
    const double w0 = (j == from.j) ? from.t : src.times.front();
    const double w1 = (j == to.j) ? to.t : src.times.back();

    HybridArc::Segment out;
    auto push = [&](double t, const Vec& v) {
      out.times.push_back(t - from.t);
      out.values.insert(out.values.end(), v.data(), v.data() + v.size());
    };
    push(w0, arc.value(w0, j));
    if (w1 > w0) {
      for (std::size_t i = 0; i < src.times.size(); ++i) {
        if (src.times[i] > w0 && src.times[i] < w1) push(src.times[i], arc.sample(j, i));
      }
      push(w1, arc.value(w1, j));
    }
    segs.push_back(std::move(out));
  }
  return HybridArc(arc.dim(), std::move(segs));
}

SolutionPair truncate(const SolutionPair& pair, const HybridTime& from, const HybridTime& to) {
  return SolutionPair(truncate(pair.state, from, to), truncate(pair.input, from, to));
}

namespace {

// Minimum distance from x to the interpolated values of `seg` over grid
// cells intersected with [s_lo, s_hi]. The squared distance is convex on
// each cell, so checking both ends plus the unconstrained minimizer is exact.
double min_distance_over_window(const HybridArc& arc, int j, double s_lo, double s_hi,
                                ConstVecRef x) {
  const HybridArc::Segment& seg = arc.segment(j);
  double best = std::numeric_limits<double>::infinity();
  if (seg.times.size() == 1) {
    return (x - arc.sample(j, 0)).norm();
  }
  for (std::size_t i = 0; i + 1 < seg.times.size(); ++i) {
    const double a = std::max(seg.times[i], s_lo);
    const double b = std::min(seg.times[i + 1], s_hi);
    if (a > b) continue;
    const double dt = seg.times[i + 1] - seg.times[i];
    const Vec v0 = arc.sample(j, i);
    const Vec slope = (arc.sample(j, i + 1) - v0) / dt;
    const Vec c = x - v0;  // distance^2 = |c - alpha*slope|^2, alpha = s - t_i
    auto dist_at = [&](double s) { return (c - (s - seg.times[i]) * slope).norm(); };
    best = std::min(best, std::min(dist_at(a), dist_at(b)));
    const double denom = slope.squaredNorm();
    if (denom > 0.0) {
      const double alpha = c.dot(slope) / denom;
      const double s_star = seg.times[i] + alpha;
      if (s_star > a && s_star < b) best = std::min(best, dist_at(s_star));
    }
  }
  return best;
}

bool close_one_way(const HybridArc& a, const HybridArc& b, double tau, double eps) {
  for (int j = 0; j < a.segment_count(); ++j) {
    const HybridArc::Segment& seg = a.segment(j);
    for (std::size_t i = 0; i < seg.times.size(); ++i) {
      const double t = seg.times[i];
      if (t + j > tau) continue;
      if (j >= b.segment_count()) return false;
      const auto [lo, hi] = b.domain().interval(j);
      const double s_lo = std::max(lo, t - eps);
      const double s_hi = std::min(hi, t + eps);
      if (s_lo > s_hi) return false;
      // |t - s| < eps is strict; a window collapsed onto the eps boundary is empty.
      if (s_lo == s_hi && std::abs(t - s_lo) >= eps) return false;
      if (min_distance_over_window(b, j, s_lo, s_hi, a.sample(j, i)) >= eps) return false;
    }
  }
  return true;
}

}  // namespace

bool are_close(const HybridArc& a, const HybridArc& b, double tau, double eps) {
  require(a.dim() == b.dim(), "closeness needs arcs of equal dimension");
  if (eps <= 0.0) return false;
  return close_one_way(a, b, tau, eps) && close_one_way(b, a, tau, eps);
}

}  // namespace hyrrt
