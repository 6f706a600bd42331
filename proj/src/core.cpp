#include "hyrrt/core.hpp"

#include <charconv>
#include <cmath>

namespace hyrrt {

Box::Box(Vec lo_in, Vec hi_in) : lo(std::move(lo_in)), hi(std::move(hi_in)) {
  if (lo.size() != hi.size()) {
    throw Error(ErrorCode::InvalidArgument, "box bounds have mismatched dimensions");
  }
  for (int i = 0; i < lo.size(); ++i) {
    if (!(lo[i] <= hi[i])) {
      throw Error(ErrorCode::InvalidArgument, "box has lo > hi on axis " + std::to_string(i));
    }
  }
}

Box Box::cube(int dim, double lo, double hi) {
  return Box(Vec::Constant(dim, lo), Vec::Constant(dim, hi));
}

bool Box::contains(ConstVecRef x, double tol) const {
  if (x.size() != lo.size()) return false;
  for (int i = 0; i < lo.size(); ++i) {
    if (x[i] < lo[i] - tol || x[i] > hi[i] + tol) return false;
  }
  return true;
}

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "uniform_index over empty range");
  // Rejection keeps the draw unbiased for any n.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
  std::uint64_t r;
  do {
    r = gen_();
  } while (r >= limit);
  return static_cast<std::size_t>(r % n);
}

Vec Rng::uniform_box(const Box& box) {
  Vec x(box.dim());
  for (int i = 0; i < box.dim(); ++i) x[i] = uniform(box.lo[i], box.hi[i]);
  return x;
}

Vec Rng::unit_direction(int dim) {
  // Gaussian draws via Box-Muller on our own uniform stream, normalized.
  Vec d(dim);
  int i = 0;
  while (i < dim) {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    d[i++] = r * std::cos(2.0 * M_PI * u2);
    if (i < dim) d[i++] = r * std::sin(2.0 * M_PI * u2);
  }
  const double norm = d.norm();
  if (norm == 0.0) return unit_direction(dim);
  return d / norm;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_vector(ConstVecRef v, char sep) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    if (i) out.push_back(sep);
    out += format_double(v[i]);
  }
  return out;
}

}  // namespace hyrrt
