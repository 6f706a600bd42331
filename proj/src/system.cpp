#include "hyrrt/system.hpp"

#include <algorithm>
#include <cmath>

namespace hyrrt {

namespace {

constexpr std::uint64_t kProbeSeed = 0x5eedf00dcafe1234ull;
constexpr std::size_t kRejectionBudget = 10000;

void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace

Vec HybridSystem::flow(ConstVecRef x, ConstVecRef u) const {
  Vec out(state_dim);
  flow_field(x, u, out);
  return out;
}

Vec HybridSystem::reset(ConstVecRef x, ConstVecRef u) const {
  Vec out(state_dim);
  jump_reset(x, u, out);
  return out;
}

StateSet StateSet::point(Vec x) {
  StateSet s;
  s.kind_ = Kind::Point;
  s.dim_ = static_cast<int>(x.size());
  s.anchor_ = std::move(x);
  s.contains_ = [anchor = s.anchor_](ConstVecRef q, double tol) {
    return q.size() == anchor.size() && (q - anchor).norm() <= tol;
  };
  return s;
}

StateSet StateSet::box(Box b) {
  StateSet s;
  s.kind_ = Kind::BoxSet;
  s.dim_ = b.dim();
  s.window_ = std::move(b);
  s.contains_ = [box = s.window_](ConstVecRef q, double tol) { return box.contains(q, tol); };
  return s;
}

StateSet StateSet::empty(int dim) {
  StateSet s;
  s.kind_ = Kind::Empty;
  s.dim_ = dim;
  s.contains_ = [](ConstVecRef, double) { return false; };
  return s;
}

StateSet StateSet::predicate(Predicate pred, Box window, Sampler sampler,
                             std::size_t cloud_size) {
  require(pred != nullptr, ErrorCode::InvalidArgument, "predicate set needs a predicate");
  StateSet s;
  s.kind_ = Kind::PredicateSet;
  s.dim_ = window.dim();
  s.window_ = std::move(window);
  s.contains_ = std::move(pred);
  s.sampler_ = std::move(sampler);

  // Distance queries use a seed-fixed cloud; best effort when the region is
  // thin or empty under rejection.
  auto cloud = std::make_shared<std::vector<Vec>>();
  if (s.sampler_) {
    Rng rng(kProbeSeed);
    for (std::size_t i = 0; i < cloud_size; ++i) cloud->push_back(s.sampler_(rng));
  } else {
    Rng rng(kProbeSeed);
    std::size_t attempts = 20 * cloud_size;
    while (cloud->size() < cloud_size && attempts-- > 0) {
      Vec q = rng.uniform_box(s.window_);
      if (s.contains_(q, 0.0)) cloud->push_back(std::move(q));
    }
  }
  s.cloud_ = std::move(cloud);
  return s;
}

bool StateSet::contains(ConstVecRef x, double tol) const {
  require(valid(), ErrorCode::InvalidArgument, "state set is unset");
  return contains_(x, tol);
}

Vec StateSet::sample(Rng& rng) const {
  require(valid(), ErrorCode::InvalidArgument, "state set is unset");
  switch (kind_) {
    case Kind::Point:
      return anchor_;
    case Kind::BoxSet:
      return rng.uniform_box(window_);
    case Kind::Empty:
      throw Error(ErrorCode::Sampling, "cannot sample from an empty set");
    case Kind::PredicateSet: {
      if (sampler_) return sampler_(rng);
      for (std::size_t i = 0; i < kRejectionBudget; ++i) {
        Vec q = rng.uniform_box(window_);
        if (contains_(q, 0.0)) return q;
      }
      throw Error(ErrorCode::Sampling, "rejection sampling budget exhausted");
    }
  }
  throw Error(ErrorCode::Internal, "unreachable");
}

double StateSet::distance(ConstVecRef x) const {
  require(valid(), ErrorCode::InvalidArgument, "state set is unset");
  switch (kind_) {
    case Kind::Point:
      return (x - anchor_).norm();
    case Kind::BoxSet: {
      double sq = 0.0;
      for (int i = 0; i < window_.dim(); ++i) {
        const double d = std::max({window_.lo[i] - x[i], x[i] - window_.hi[i], 0.0});
        sq += d * d;
      }
      return std::sqrt(sq);
    }
    case Kind::Empty:
      return std::numeric_limits<double>::infinity();
    case Kind::PredicateSet: {
      if (contains_(x, 0.0)) return 0.0;
      double best = std::numeric_limits<double>::infinity();
      for (const Vec& q : *cloud_) best = std::min(best, (x - q).norm());
      return best;
    }
  }
  throw Error(ErrorCode::Internal, "unreachable");
}

namespace {

// Odometer over a per-axis grid of the box; calls fn(u) until it returns true.
bool any_grid_point(const Box& box, int points_per_axis,
                    const std::function<bool(ConstVecRef)>& fn) {
  const int m = box.dim();
  if (m == 0) return fn(Vec(0));
  std::vector<int> counts(m);
  for (int i = 0; i < m; ++i) {
    counts[i] = (box.hi[i] > box.lo[i]) ? points_per_axis : 1;
  }
  std::vector<int> idx(m, 0);
  Vec u(m);
  while (true) {
    for (int i = 0; i < m; ++i) {
      u[i] = (counts[i] == 1)
                 ? box.lo[i]
                 : box.lo[i] + (box.hi[i] - box.lo[i]) * idx[i] / (counts[i] - 1);
    }
    if (fn(u)) return true;
    int axis = 0;
    while (axis < m && ++idx[axis] == counts[axis]) idx[axis++] = 0;
    if (axis == m) return false;
  }
}

}  // namespace

bool in_flow_projection(const HybridSystem& sys, ConstVecRef x, double tol,
                        int grid_points_per_axis) {
  return any_grid_point(sys.flow_input_bounds, grid_points_per_axis,
                        [&](ConstVecRef u) { return sys.flow_region(x, u, tol); });
}

bool in_jump_projection(const HybridSystem& sys, ConstVecRef x, double tol,
                        int grid_points_per_axis) {
  return any_grid_point(sys.jump_input_bounds, grid_points_per_axis,
                        [&](ConstVecRef u) { return sys.jump_region(x, u, tol); });
}

StateSet default_flow_projection(const HybridSystem& sys, int grid_points_per_axis) {
  return StateSet::predicate(
      [sys, grid_points_per_axis](ConstVecRef x, double tol) {
        return in_flow_projection(sys, x, tol, grid_points_per_axis);
      },
      sys.state_bounds);
}

StateSet default_jump_projection(const HybridSystem& sys, int grid_points_per_axis) {
  return StateSet::predicate(
      [sys, grid_points_per_axis](ConstVecRef x, double tol) {
        return in_jump_projection(sys, x, tol, grid_points_per_axis);
      },
      sys.state_bounds);
}

namespace {

struct ProbeOffsets {
  std::vector<std::pair<Vec, Vec>> dirs;  // unit or zero directions in (x, u)
};

// Center, axis directions, then seed-fixed joint directions up to `total`.
ProbeOffsets make_probe_directions(int n, int m, int total) {
  ProbeOffsets p;
  p.dirs.emplace_back(Vec::Zero(n), Vec::Zero(m));
  for (int i = 0; i < n; ++i) {
    for (double sign : {1.0, -1.0}) {
      Vec dx = Vec::Zero(n);
      dx[i] = sign;
      p.dirs.emplace_back(std::move(dx), Vec::Zero(m));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (double sign : {1.0, -1.0}) {
      Vec du = Vec::Zero(m);
      du[i] = sign;
      p.dirs.emplace_back(Vec::Zero(n), std::move(du));
    }
  }
  Rng rng(kProbeSeed);
  while (static_cast<int>(p.dirs.size()) < total) {
    Vec dx = rng.unit_direction(n);
    Vec du = (m > 0) ? rng.unit_direction(m) : Vec(0);
    p.dirs.emplace_back(std::move(dx), std::move(du));
  }
  return p;
}

RegionTest probe_grown(RegionTest base, double radius, int n, int m) {
  auto probes = std::make_shared<ProbeOffsets>(make_probe_directions(n, m, 32));
  // Approximate: the grown region is sampled at a finite set of offsets.
  return [base = std::move(base), radius, probes](ConstVecRef x, ConstVecRef u, double tol) {
    for (const auto& [dx, du] : probes->dirs) {
      if (base(x + radius * dx, u + radius * du, tol)) return true;
    }
    return false;
  };
}

}  // namespace

HybridSystem inflate(const HybridSystem& sys, double radius) {
  require(radius >= 0.0, ErrorCode::InvalidArgument, "inflation radius must be non-negative");
  if (radius == 0.0) return sys;
  HybridSystem out = sys;
  const int n = sys.state_dim, m = sys.input_dim;
  if (sys.grow_flow_region) {
    out.flow_region = sys.grow_flow_region(radius);
    out.grow_flow_region = [g = sys.grow_flow_region, radius](double r) {
      return g(radius + r);
    };
  } else {
    out.flow_region = probe_grown(sys.flow_region, radius, n, m);
    out.grow_flow_region = [base = sys.flow_region, radius, n, m](double r) {
      return probe_grown(base, radius + r, n, m);
    };
  }
  if (sys.grow_jump_region) {
    out.jump_region = sys.grow_jump_region(radius);
    out.grow_jump_region = [g = sys.grow_jump_region, radius](double r) {
      return g(radius + r);
    };
  } else {
    out.jump_region = probe_grown(sys.jump_region, radius, n, m);
    out.grow_jump_region = [base = sys.jump_region, radius, n, m](double r) {
      return probe_grown(base, radius + r, n, m);
    };
  }
  return out;
}

bool clearance_check(const SolutionPair& plan, double radius, const HybridSystem& sys,
                     const UnsafeTest& unsafe, int probes) {
  require(radius >= 0.0, ErrorCode::InvalidArgument, "clearance radius must be non-negative");
  require(plan.state_dim() == sys.state_dim && plan.input_dim() == sys.input_dim,
          ErrorCode::InvalidArgument, "plan dimensions do not match the system");
  const ProbeOffsets dirs = make_probe_directions(sys.state_dim, sys.input_dim, probes);

  const int last_segment = plan.state.segment_count() - 1;
  for (int j = 0; j <= last_segment; ++j) {
    const std::size_t count = plan.state.sample_count(j);
    for (std::size_t i = 0; i < count; ++i) {
      const Vec x = plan.state.sample(j, i);
      const Vec u = plan.input.sample(j, i);
      const bool flow_interior = i > 0 && i + 1 < count;
      const bool at_transition = (j < last_segment) && (i + 1 == count);
      for (const auto& [dx, du] : dirs.dirs) {
        const Vec px = x + radius * dx;
        const Vec pu = u + radius * du;
        if (flow_interior && !sys.flow_region(px, pu, 0.0)) return false;
        if (at_transition && !sys.jump_region(px, pu, 0.0)) return false;
        if (unsafe && unsafe(px, pu, 0.0)) return false;
      }
    }
  }
  return true;
}

ValidationReport validate_solution_pair(const HybridSystem& sys, const SolutionPair& pair,
                                        double tol) {
  require(pair.state_dim() == sys.state_dim && pair.input_dim() == sys.input_dim,
          ErrorCode::InvalidArgument, "pair dimensions do not match the system");
  ValidationReport report;
  auto where = [](int j, std::size_t i, double t) {
    return "segment " + std::to_string(j) + " sample " + std::to_string(i) + " (t=" +
           format_double(t) + ")";
  };

  {
    const Vec x0 = pair.state.sample(0, 0);
    const Vec u0 = pair.input.sample(0, 0);
    if (!sys.flow_region(x0, u0, tol) && !sys.jump_region(x0, u0, tol)) {
      report.fail("initial sample lies in neither region");
    }
  }

  const int segments = pair.state.segment_count();
  for (int j = 0; j < segments; ++j) {
    const auto& times = pair.state.segment(j).times;
    const std::size_t count = times.size();
    for (std::size_t i = 0; i < count; ++i) {
      const Vec x = pair.state.sample(j, i);
      const Vec u = pair.input.sample(j, i);
      if (i > 0 && i + 1 < count && !sys.flow_region(x, u, tol)) {
        report.fail(where(j, i, times[i]) + ": flow-region violation");
      }
      if (count < 2) continue;
      // The input is piecewise constant and may switch at a sample, so a
      // difference stencil is only meaningful on a side driven by this
      // sample's input. Prefer the central difference when both sides match,
      // fall back to the matching one-sided difference, and for a doc with no
      // consistent side score the better of the two. A transition sample
      // carries the jump's input, so the field for its closing subinterval is
      // evaluated with the input that actually drove the flow there.
      const bool pre_jump = j + 1 < segments && i + 1 == count;
      const Vec u_flow = pre_jump ? Vec(pair.input.sample(j, i - 1)) : Vec(u);
      const Vec flow = sys.flow(x, u_flow);
      auto forward_residual = [&] {
        const Vec deriv = (pair.state.sample(j, i + 1) - x) / (times[i + 1] - times[i]);
        return (deriv - flow).norm();
      };
      auto backward_residual = [&] {
        const Vec deriv = (x - pair.state.sample(j, i - 1)) / (times[i] - times[i - 1]);
        return (deriv - flow).norm();
      };
      const bool left_matches = i > 0 && (pair.input.sample(j, i - 1) - u_flow).norm() == 0.0;
      const bool right_matches =
          i + 1 < count && (pair.input.sample(j, i + 1) - u_flow).norm() == 0.0;
      double residual;
      if (left_matches && right_matches) {
        const Vec deriv = (pair.state.sample(j, i + 1) - pair.state.sample(j, i - 1)) /
                          (times[i + 1] - times[i - 1]);
        residual = (deriv - flow).norm();
      } else if (right_matches || i == 0) {
        residual = forward_residual();
      } else if (left_matches || i + 1 == count) {
        residual = backward_residual();
      } else {
        residual = std::min(forward_residual(), backward_residual());
      }
      if (residual > tol) {
        report.fail(where(j, i, times[i]) + ": flow-field residual " +
                    format_double(residual) + " exceeds " + format_double(tol));
      }
    }
    if (j + 1 < segments) {
      const std::size_t last = count - 1;
      const Vec x = pair.state.sample(j, last);
      const Vec u = pair.input.sample(j, last);
      if (!sys.jump_region(x, u, tol)) {
        report.fail(where(j, last, times[last]) + ": transition outside the jump region");
      }
      const Vec expected = sys.reset(x, u);
      const double gap = (pair.state.sample(j + 1, 0) - expected).norm();
      if (gap > tol) {
        report.fail(where(j, last, times[last]) + ": reset mismatch " + format_double(gap) +
                    " exceeds " + format_double(tol));
      }
    }
  }
  return report;
}

}  // namespace hyrrt
