#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyrrt {

using Vec = Eigen::VectorXd;
using ConstVecRef = Eigen::Ref<const Eigen::VectorXd>;
using VecRef = Eigen::Ref<Eigen::VectorXd>;

/// All recoverable failures surface as this; the C API maps codes to ints.
enum class ErrorCode {
  InvalidArgument,
  Parse,
  Io,
  Simulation,
  Sampling,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Axis-aligned box, lo <= hi per axis. A zero-width axis is allowed.
struct Box {
  Vec lo;
  Vec hi;

  Box() = default;
  Box(Vec lo_in, Vec hi_in);
  static Box cube(int dim, double lo, double hi);

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(ConstVecRef x, double tol = 0.0) const;
  Vec center() const { return 0.5 * (lo + hi); }
};

/// Deterministic RNG. All randomness in the library flows through this so
/// that a seed fixes every downstream draw, independent of platform quirks
/// in std:: distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform on [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Uniform on {0, ..., n-1}, unbiased.
  std::size_t uniform_index(std::size_t n);

  /// Uniform over a box, per-axis independent.
  Vec uniform_box(const Box& box);

  /// Uniform direction on the unit sphere of the given dimension.
  Vec unit_direction(int dim);

 private:
  std::mt19937_64 gen_;
};

/// Shortest round-trip decimal form; identical bytes for identical doubles.
std::string format_double(double v);

std::string format_vector(ConstVecRef v, char sep = ',');

}  // namespace hyrrt
