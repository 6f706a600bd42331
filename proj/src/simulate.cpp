#include "hyrrt/simulate.hpp"

#include <cmath>

namespace hyrrt {

IntegrationMethod integration_method_from_name(const std::string& name) {
  if (name == "euler") return IntegrationMethod::ForwardEuler;
  if (name == "backward-euler") return IntegrationMethod::BackwardEuler;
  if (name == "rk4") return IntegrationMethod::RK4;
  throw Error(ErrorCode::InvalidArgument,
              "unknown integration method '" + name + "' (euler, backward-euler, rk4)");
}

std::string integration_method_name(IntegrationMethod method) {
  switch (method) {
    case IntegrationMethod::ForwardEuler: return "euler";
    case IntegrationMethod::BackwardEuler: return "backward-euler";
    case IntegrationMethod::RK4: return "rk4";
  }
  return "?";
}

PriorityRule priority_rule_from_name(const std::string& name) {
  if (name == "flow") return PriorityRule::Flow;
  if (name == "jump") return PriorityRule::Jump;
  throw Error(ErrorCode::InvalidArgument, "unknown rule '" + name + "' (flow, jump)");
}

Vec integrator_step(const VectorMap& field, const IntegratorScheme& scheme, ConstVecRef x,
                    const InputSignal& signal, double t, double h) {
  (void)t;  // signals are constant in time; t is kept for the step model
  const Vec& u = signal.level;
  const int n = static_cast<int>(x.size());
  Vec k1(n), k2(n), k3(n), k4(n);
  switch (scheme.method) {
    case IntegrationMethod::ForwardEuler:
      field(x, u, k1);
      return x + h * k1;
    case IntegrationMethod::BackwardEuler: {
      // Fixed point of y = x + h f(y, u), seeded with the explicit step.
      field(x, u, k1);
      Vec y = x + h * k1;
      Vec y_next(n);
      for (int it = 0; it < scheme.implicit_max_iters; ++it) {
        field(y, u, k2);
        y_next = x + h * k2;
        const double delta = (y_next - y).norm();
        y.swap(y_next);
        if (delta <= scheme.implicit_tol * (1.0 + y.norm())) return y;
      }
      field(y, u, k2);
      if ((x + h * k2 - y).norm() > 1e3 * scheme.implicit_tol * (1.0 + y.norm())) {
        throw Error(ErrorCode::Simulation, "implicit integrator step did not converge");
      }
      return y;
    }
    case IntegrationMethod::RK4: {
      field(x, u, k1);
      field(x + 0.5 * h * k1, u, k2);
      field(x + 0.5 * h * k2, u, k3);
      field(x + h * k3, u, k4);
      return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  throw Error(ErrorCode::Internal, "unreachable");
}

std::optional<double> detect_crossing(const VectorMap& field, const IntegratorScheme& scheme,
                                      const EventGuards& guards, PriorityRule rule,
                                      ConstVecRef x_prev, ConstVecRef x_next,
                                      const InputSignal& signal, double t, double h,
                                      double membership_tol) {
  const GuardFn& guard = (rule == PriorityRule::Flow) ? guards.flow_rule : guards.jump_rule;
  if (!guard) throw Error(ErrorCode::InvalidArgument, "missing event guard for the rule");
  const Vec& u = signal.level;
  const double g_end = guard(x_next, u);
  if (g_end > 0.0) return std::nullopt;
  if (g_end == 0.0) return t + h;

  const double g_start = guard(x_prev, u);
  if (g_start < -membership_tol) return t;  // cannot advance from here at all

  // Bracket [lo, hi] with guard(lo) >= 0 (up to noise) > guard(hi). Bisect
  // past the time tolerance until the lo-state's guard is inside half the
  // membership tolerance, so the terminal sample passes region tests.
  double lo = 0.0, hi = h;
  double g_lo = g_start;
  for (int it = 0; it < guards.max_bisections; ++it) {
    if (hi - lo <= guards.time_tol && std::abs(g_lo) <= 0.5 * membership_tol) break;
    const double mid = 0.5 * (lo + hi);
    const Vec x_mid = integrator_step(field, scheme, x_prev, signal, t, mid);
    const double g_mid = guard(x_mid, u);
    if (g_mid < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      g_lo = g_mid;
    }
  }
  return t + lo;
}

SolutionPair continuous_simulator(const HybridSystem& sys, PriorityRule rule, ConstVecRef x0,
                                  const InputSignal& signal, const SimulationSetup& setup) {
  if (signal.duration < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "signal duration must be non-negative");
  }
  if (static_cast<int>(x0.size()) != sys.state_dim ||
      static_cast<int>(signal.level.size()) != sys.input_dim) {
    throw Error(ErrorCode::InvalidArgument, "simulator input dimensions do not match");
  }
  if (setup.scheme.step <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, "integration step must be positive");
  }
  if (!sys.flow_region(x0, signal.level, setup.membership_tol)) {
    throw Error(ErrorCode::Simulation, "initial state is outside the flow region");
  }

  HybridArc::Segment xs;
  xs.times.push_back(0.0);
  xs.values.insert(xs.values.end(), x0.begin(), x0.end());

  Vec x = x0;
  for (std::size_t i = 1;; ++i) {
    const double t_prev = xs.times.back();
    const double t_next = std::min(static_cast<double>(i) * setup.scheme.step, signal.duration);
    if (t_next <= t_prev) break;
    const double h = t_next - t_prev;
    const Vec x_next = integrator_step(sys.flow_field, setup.scheme, x, signal, t_prev, h);
    const auto hit = detect_crossing(sys.flow_field, setup.scheme, setup.guards, rule, x, x_next,
                                     signal, t_prev, h, setup.membership_tol);
    if (hit) {
      if (*hit > t_prev) {
        const Vec x_hit = (*hit >= t_next)
                              ? x_next
                              : integrator_step(sys.flow_field, setup.scheme, x, signal, t_prev,
                                                *hit - t_prev);
        xs.times.push_back(*hit);
        xs.values.insert(xs.values.end(), x_hit.begin(), x_hit.end());
      }
      break;
    }
    xs.times.push_back(t_next);
    xs.values.insert(xs.values.end(), x_next.begin(), x_next.end());
    x = x_next;
  }

  HybridArc::Segment us;
  us.times = xs.times;
  for (std::size_t i = 0; i < us.times.size(); ++i) {
    us.values.insert(us.values.end(), signal.level.begin(), signal.level.end());
  }
  return SolutionPair(HybridArc(sys.state_dim, {std::move(xs)}),
                      HybridArc(sys.input_dim, {std::move(us)}));
}

SolutionPair discrete_simulator(const HybridSystem& sys, ConstVecRef x0, ConstVecRef jump_input,
                                double membership_tol) {
  if (static_cast<int>(x0.size()) != sys.state_dim ||
      static_cast<int>(jump_input.size()) != sys.input_dim) {
    throw Error(ErrorCode::InvalidArgument, "simulator input dimensions do not match");
  }
  if (!sys.jump_region(x0, jump_input, membership_tol)) {
    throw Error(ErrorCode::Simulation, "state is outside the jump region");
  }
  const Vec x1 = sys.reset(x0, jump_input);

  std::vector<HybridArc::Segment> xs(2), us(2);
  xs[0].times = {0.0};
  xs[0].values.assign(x0.begin(), x0.end());
  xs[1].times = {0.0};
  xs[1].values.assign(x1.begin(), x1.end());
  us[0].times = {0.0};
  us[0].values.assign(jump_input.begin(), jump_input.end());
  us[1].times = {0.0};
  us[1].values.assign(jump_input.begin(), jump_input.end());
  return SolutionPair(HybridArc(sys.state_dim, std::move(xs)),
                      HybridArc(sys.input_dim, std::move(us)));
}

}  // namespace hyrrt
