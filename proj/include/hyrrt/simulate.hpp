#pragma once

#include "hyrrt/inputs.hpp"
#include "hyrrt/system.hpp"

namespace hyrrt {

enum class IntegrationMethod { ForwardEuler, BackwardEuler, RK4 };

IntegrationMethod integration_method_from_name(const std::string& name);
std::string integration_method_name(IntegrationMethod method);

struct IntegratorScheme {
  IntegrationMethod method = IntegrationMethod::RK4;
  double step = 1e-3;
  // Backward Euler solves its implicit update by fixed-point iteration.
  int implicit_max_iters = 64;
  double implicit_tol = 1e-12;
};

/// Scalar guard evaluated along a trajectory: positive strictly inside the
/// admissible region for the active priority rule, negative strictly
/// outside, zero on the edge.
using GuardFn = std::function<double(ConstVecRef x, ConstVecRef u)>;

/// Flow priority stops on leaving the flow region; jump priority stops on
/// leaving the part of the flow region where no reset is possible.
enum class PriorityRule { Flow, Jump };

PriorityRule priority_rule_from_name(const std::string& name);

struct EventGuards {
  GuardFn flow_rule;  // edge of the flow region
  GuardFn jump_rule;  // edge of the flow region minus the jump region
  double time_tol = 1e-9;
  int max_bisections = 60;
};

/// One step of size h from (t, x); the signal supplies the level.
Vec integrator_step(const VectorMap& field, const IntegratorScheme& scheme, ConstVecRef x,
                    const InputSignal& signal, double t, double h);

/// Event time in (t, t+h] where the guard changes sign across the step, or
/// nothing when the step stays inside. Localized by bisection over
/// re-integrated partial steps; the returned time's state keeps the guard
/// within half the membership tolerance. Returns t itself when the state
/// cannot advance at all.
std::optional<double> detect_crossing(const VectorMap& field, const IntegratorScheme& scheme,
                                      const EventGuards& guards, PriorityRule rule,
                                      ConstVecRef x_prev, ConstVecRef x_next,
                                      const InputSignal& signal, double t, double h,
                                      double membership_tol);

struct SimulationSetup {
  IntegratorScheme scheme;
  EventGuards guards;
  double membership_tol = 1e-9;
};

/// Integrates the flow from x0 under a constant signal until the signal
/// ends or the active rule's region is left, whichever comes first. The
/// result is a single-interval pair whose final sample sits on the region's
/// edge when an event fired.
SolutionPair continuous_simulator(const HybridSystem& sys, PriorityRule rule, ConstVecRef x0,
                                  const InputSignal& signal, const SimulationSetup& setup);

/// Applies one reset: domain {0} x {0, 1}, with the input value attached to
/// both samples.
SolutionPair discrete_simulator(const HybridSystem& sys, ConstVecRef x0, ConstVecRef jump_input,
                                double membership_tol = 1e-9);

}  // namespace hyrrt
