#pragma once

#include "hyrrt/core.hpp"

namespace hyrrt {

/// Constant input level held over [0, duration]. Zero duration is allowed
/// and produces a single-sample trajectory.
struct InputSignal {
  double duration = 0.0;
  Vec level;
};

std::vector<InputSignal> build_flow_signals(const std::vector<Vec>& levels, double hold_time);

/// Menu of inputs the planner draws from. Each side is either finite (a
/// fixed list of signals or reset values) or continuous (a family of
/// constant signals whose hold time is uniform on [0, max_hold] and whose
/// level is uniform over a box; reset values uniform over a box).
class InputLibrary {
 public:
  enum class Mode { Finite, Continuous };

  static InputLibrary finite(std::vector<InputSignal> flow_signals, std::vector<Vec> jump_values);
  static InputLibrary continuous(Box flow_levels, double max_hold, Box jump_levels);
  /// Continuous flow family paired with a finite list of reset values.
  static InputLibrary flow_family(Box flow_levels, double max_hold,
                                  std::vector<Vec> jump_values);

  Mode flow_mode() const { return flow_mode_; }
  Mode jump_mode() const { return jump_mode_; }
  bool has_flow_inputs() const;
  bool has_jump_inputs() const;

  InputSignal sample_flow(Rng& rng) const;
  Vec sample_jump(Rng& rng) const;

  /// Finite sides only.
  const std::vector<InputSignal>& flow_signals() const { return flow_signals_; }
  const std::vector<Vec>& jump_values() const { return jump_values_; }

  double max_hold() const { return max_hold_; }
  const Box& flow_level_box() const { return flow_levels_; }
  const Box& jump_level_box() const { return jump_levels_; }

 private:
  Mode flow_mode_ = Mode::Finite;
  Mode jump_mode_ = Mode::Finite;
  std::vector<InputSignal> flow_signals_;
  std::vector<Vec> jump_values_;
  Box flow_levels_;
  Box jump_levels_;
  double max_hold_ = 0.0;
};

}  // namespace hyrrt
