#include "hyrrt/inputs.hpp"

#include <utility>

namespace hyrrt {

std::vector<InputSignal> build_flow_signals(const std::vector<Vec>& levels, double hold_time) {
  if (hold_time < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "signal hold time must be non-negative");
  }
  std::vector<InputSignal> out;
  out.reserve(levels.size());
  for (const Vec& level : levels) out.push_back({hold_time, level});
  return out;
}

InputLibrary InputLibrary::finite(std::vector<InputSignal> flow_signals,
                                  std::vector<Vec> jump_values) {
  InputLibrary lib;
  lib.flow_signals_ = std::move(flow_signals);
  lib.jump_values_ = std::move(jump_values);
  return lib;
}

InputLibrary InputLibrary::continuous(Box flow_levels, double max_hold, Box jump_levels) {
  if (max_hold < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "maximum hold time must be non-negative");
  }
  InputLibrary lib;
  lib.flow_mode_ = Mode::Continuous;
  lib.jump_mode_ = Mode::Continuous;
  lib.flow_levels_ = std::move(flow_levels);
  lib.jump_levels_ = std::move(jump_levels);
  lib.max_hold_ = max_hold;
  return lib;
}

InputLibrary InputLibrary::flow_family(Box flow_levels, double max_hold,
                                       std::vector<Vec> jump_values) {
  if (max_hold < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "maximum hold time must be non-negative");
  }
  InputLibrary lib;
  lib.flow_mode_ = Mode::Continuous;
  lib.flow_levels_ = std::move(flow_levels);
  lib.max_hold_ = max_hold;
  lib.jump_values_ = std::move(jump_values);
  return lib;
}

bool InputLibrary::has_flow_inputs() const {
  return flow_mode_ == Mode::Continuous ? flow_levels_.dim() > 0 : !flow_signals_.empty();
}

bool InputLibrary::has_jump_inputs() const {
  return jump_mode_ == Mode::Continuous ? jump_levels_.dim() > 0 : !jump_values_.empty();
}

InputSignal InputLibrary::sample_flow(Rng& rng) const {
  if (!has_flow_inputs()) {
    throw Error(ErrorCode::Sampling, "input library has no flow signals");
  }
  if (flow_mode_ == Mode::Finite) {
    return flow_signals_[rng.uniform_index(flow_signals_.size())];
  }
  // Draw order is part of the deterministic contract: duration, then level.
  const double hold = rng.uniform(0.0, max_hold_);
  return {hold, rng.uniform_box(flow_levels_)};
}

Vec InputLibrary::sample_jump(Rng& rng) const {
  if (!has_jump_inputs()) {
    throw Error(ErrorCode::Sampling, "input library has no jump values");
  }
  if (jump_mode_ == Mode::Finite) {
    return jump_values_[rng.uniform_index(jump_values_.size())];
  }
  return rng.uniform_box(jump_levels_);
}

}  // namespace hyrrt
