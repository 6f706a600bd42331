#pragma once

#include "hyrrt/arc.hpp"

#include <string>

namespace hyrrt {

/// Plan document: {"n", "m", "segments": [{"j", "samples": [{"t","x","u"}]}]}.
/// Serialization uses shortest round-trip number formatting, so equal inputs
/// produce identical bytes and a load/save cycle is exact.
std::string plan_to_json(const SolutionPair& plan);
SolutionPair plan_from_json(const std::string& text);

/// Flat table: t, j, x_0..x_{n-1}, u_0..u_{m-1}; rows ordered by (j, t).
std::string plan_to_csv(const SolutionPair& plan);

/// CSV with a blank line between segments so plotting tools break the line
/// at transitions.
std::string plan_to_plot(const SolutionPair& plan);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

SolutionPair load_plan_file(const std::string& path);
void save_plan_file(const std::string& path, const SolutionPair& plan);

}  // namespace hyrrt
