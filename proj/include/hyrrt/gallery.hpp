#pragma once

#include "hyrrt/plan.hpp"

#include <string>

namespace hyrrt {

/// Ready-to-run problem instance: the model, its sets, simulation setup,
/// input menu, and planner defaults tuned for the instance.
struct GalleryEntry {
  std::string id;
  MotionPlanningProblem problem;
  SimulationSetup sim;
  InputLibrary library;
  PlannerConfig planner;
};

/// Ball on a surface: state (height, vertical speed), input is an upward
/// kick applied at impacts.
struct BouncingBallParams {
  double gravity = 9.81;
  double restitution = 0.8;
  double start_height = 15.0;
  double goal_height = 10.0;
  // The box bounds target sampling and which states accept flow extensions,
  // not the dynamics. Keeping it snug around the start and goal concentrates
  // samples where plans actually live; a generous box dilutes them badly
  // enough to sink the benchmark success rate.
  double height_bound = 15.5;
  double speed_bound = 14.5;
  double kick_max = 4.0;
  double unsafe_kick_min = 5.0;
  double max_hold = 8.0;
  double inflation = 0.0;
};

/// Planar walker: state (planted angle, swing angle, torso angle, and their
/// rates), input is the three angular accelerations after pre-feedback. A
/// step completes when the swing leg reaches the step angle; the reset swaps
/// leg roles and applies the contact map.
struct BipedParams {
  double step_angle = 0.70;
  double leg_accel_limit = 3.0;
  double torso_accel_limit = 0.2;
  double angle_bound = 1.6;
  double rate_bound = 2.0;
  double goal_planted_rate = 0.1;
  double goal_swing_rate = 0.1;
  /// Post-impact rates from the role-swapped state; null picks the built-in
  /// simplified plastic-impact map (a stand-in, not calibrated to hardware).
  std::function<Vec(ConstVecRef swapped_state)> contact_map;
  double inflation = 0.0;
};

/// Double integrator with no jump dynamics; exercises the flow-only path.
struct PointMassParams {
  double position_bound = 10.0;
  double speed_bound = 5.0;
  double accel_limit = 2.0;
  double start_position = -8.0;
  double goal_position = 8.0;
  double hold_time = 0.5;
  double inflation = 0.0;
};

GalleryEntry make_bouncing_ball(const BouncingBallParams& params = {});
GalleryEntry make_biped(const BipedParams& params = {});
GalleryEntry make_point_mass(const PointMassParams& params = {});

/// Entry with default parameters; ids: bouncing_ball, biped, point_mass.
GalleryEntry make_gallery_entry(const std::string& id);

/// Full problem document: {"system", "params", "X0", "Xf", "Xu",
/// "delta_inflation", "input_library", "planner", "integrator"}; every block
/// except "system" is optional and overrides the gallery defaults.
GalleryEntry load_problem_json(const std::string& text);
GalleryEntry load_problem_file(const std::string& path);

}  // namespace hyrrt
