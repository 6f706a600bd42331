#include "doctest.h"

#include "hyrrt/arc.hpp"

#include <cmath>

using namespace hyrrt;

namespace {

HybridArc line_arc(std::vector<double> times, std::vector<double> values) {
  return HybridArc::from_samples(1, std::move(times), std::move(values));
}

// Random arc satisfying the constructor invariants: segments chain in time,
// sample times strictly increase inside a segment, first time is zero.
HybridArc random_arc(Rng& rng, int dim) {
  const int segs = 1 + static_cast<int>(rng.uniform_index(3));
  std::vector<HybridArc::Segment> segments(segs);
  double t = 0.0;
  for (auto& seg : segments) {
    const int n = 1 + static_cast<int>(rng.uniform_index(5));
    for (int i = 0; i < n; ++i) {
      seg.times.push_back(t);
      for (int d = 0; d < dim; ++d) seg.values.push_back(rng.uniform(-5.0, 5.0));
      if (i + 1 < n) t += rng.uniform(0.01, 1.0);
    }
  }
  return HybridArc(dim, std::move(segments));
}

}  // namespace

TEST_CASE("hybrid time domain bookkeeping") {
  HybridTimeDomain dom({0.0, 1.5, 1.5, 2.0});
  CHECK(dom.jump_count() == 2);
  CHECK(dom.total_duration() == 2.0);
  CHECK(dom.interval(1) == std::pair<double, double>{1.5, 1.5});
  CHECK(dom.contains({1.5, 0}));
  CHECK(dom.contains({1.5, 1}));
  CHECK(dom.contains({1.7, 2}));
  CHECK_FALSE(dom.contains({1.0, 1}));
  CHECK_FALSE(dom.contains({0.5, 3}));
  CHECK(dom.end().t == 2.0);
  CHECK(dom.end().j == 2);

  CHECK_THROWS_AS(HybridTimeDomain({1.0, 2.0}), Error);   // must start at zero
  CHECK_THROWS_AS(HybridTimeDomain({0.0, 2.0, 1.0}), Error);
}

TEST_CASE("arc construction rejects broken sample grids") {
  CHECK_THROWS_AS(line_arc({0.0, 1.0, 1.0}, {0.0, 1.0, 2.0}), Error);  // repeated time
  CHECK_THROWS_AS(line_arc({0.5, 1.0}, {0.0, 1.0}), Error);           // starts late
  CHECK_THROWS_AS(line_arc({0.0, 1.0}, {0.0}), Error);                // row count off

  // Segments must chain: second starts where the first ends.
  std::vector<HybridArc::Segment> segs(2);
  segs[0].times = {0.0, 1.0};
  segs[0].values = {0.0, 1.0};
  segs[1].times = {2.0};
  segs[1].values = {9.0};
  CHECK_THROWS_AS(HybridArc(1, std::move(segs)), Error);
}

TEST_CASE("arc interpolation and endpoint queries") {
  HybridArc arc = line_arc({0.0, 1.0, 2.0}, {0.0, 2.0, 2.0});
  CHECK(arc.value(0.5, 0)[0] == doctest::Approx(1.0));
  CHECK(arc.value(1.0, 0)[0] == 2.0);     // grid point, no interpolation
  CHECK(arc.value(1.75, 0)[0] == 2.0);
  CHECK(arc.start_value()[0] == 0.0);
  CHECK(arc.end_value()[0] == 2.0);
  CHECK(arc.end_time().t == 2.0);
  CHECK(arc.end_time().j == 0);
  CHECK(arc.total_samples() == 3);
  CHECK_THROWS_AS(arc.value(2.5, 0), Error);
  CHECK_THROWS_AS(arc.value(0.5, 1), Error);
}

TEST_CASE("concat merges the junction and adds domains") {
  HybridArc a = line_arc({0.0, 1.0}, {0.0, 10.0});
  std::vector<HybridArc::Segment> segs(2);
  segs[0].times = {0.0, 0.5};
  segs[0].values = {20.0, 21.0};
  segs[1].times = {0.5, 2.0};
  segs[1].values = {30.0, 31.0};
  HybridArc b(1, std::move(segs));

  HybridArc ab = concat(a, b);
  CHECK(ab.segment_count() == 2);
  CHECK(ab.domain().jump_count() == a.domain().jump_count() + b.domain().jump_count());
  CHECK(ab.domain().total_duration() == 3.0);
  // Junction sample takes the second arc's initial value.
  CHECK(ab.value(1.0, 0)[0] == 20.0);
  CHECK(ab.value(1.5, 0)[0] == 21.0);
  CHECK(ab.value(1.5, 1)[0] == 30.0);
  CHECK(ab.end_value()[0] == 31.0);

  HybridArc c = line_arc({0.0, 0.25}, {7.0, 8.0});
  CHECK_THROWS_AS(concat(a, HybridArc::from_samples(2, {0.0}, {0.0, 0.0})), Error);

  // Associativity up to roundoff in the shifted time grids.
  HybridArc left = concat(concat(a, b), c);
  HybridArc right = concat(a, concat(b, c));
  REQUIRE(left.segment_count() == right.segment_count());
  CHECK(almost_equal(left.domain(), right.domain(), 1e-12));
  for (int j = 0; j < left.segment_count(); ++j) {
    REQUIRE(left.sample_count(j) == right.sample_count(j));
    for (std::size_t i = 0; i < left.sample_count(j); ++i) {
      CHECK(left.sample(j, i)[0] == doctest::Approx(right.sample(j, i)[0]).epsilon(1e-12));
    }
  }
}

TEST_CASE("truncate restricts and re-roots the window") {
  HybridArc arc = line_arc({0.0, 1.0, 2.0, 3.0, 4.0}, {0.0, 1.0, 2.0, 3.0, 4.0});
  HybridArc cut = truncate(arc, {0.5, 0}, {3.5, 0});
  CHECK(cut.segment_count() == 1);
  CHECK(cut.domain().total_duration() == doctest::Approx(3.0));
  CHECK(cut.start_value()[0] == doctest::Approx(0.5));   // interpolated endpoints
  CHECK(cut.end_value()[0] == doctest::Approx(3.5));
  CHECK(cut.sample_time(0, 0) == 0.0);

  // Degenerate window: a single sample.
  HybridArc point = truncate(arc, {2.0, 0}, {2.0, 0});
  CHECK(point.total_samples() == 1);
  CHECK(point.start_value()[0] == 2.0);

  CHECK_THROWS_AS(truncate(arc, {3.0, 0}, {1.0, 0}), Error);
  CHECK_THROWS_AS(truncate(arc, {0.0, 0}, {5.0, 0}), Error);
}

TEST_CASE("truncate after concat recovers the appended arc") {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const int dim = 1 + static_cast<int>(rng.uniform_index(3));
    HybridArc a = random_arc(rng, dim);
    HybridArc b = random_arc(rng, dim);
    HybridArc ab = concat(a, b);
    HybridArc back = truncate(ab, a.end_time(), ab.end_time());
    REQUIRE(back.segment_count() == b.segment_count());
    CHECK(almost_equal(back.domain(), b.domain(), 1e-9));
    for (int j = 0; j < b.segment_count(); ++j) {
      REQUIRE(back.sample_count(j) == b.sample_count(j));
      for (std::size_t i = 0; i < b.sample_count(j); ++i) {
        CHECK((back.sample(j, i) - b.sample(j, i)).norm() <= 1e-9);
      }
    }
  }
}

TEST_CASE("closeness is strict and symmetric") {
  HybridArc zero = line_arc({0.0, 1.0}, {0.0, 0.0});
  HybridArc one = line_arc({0.0, 1.0}, {1.0, 1.0});
  CHECK_FALSE(are_close(zero, one, 2.0, 1.0));          // distance exactly eps
  CHECK(are_close(zero, one, 2.0, 1.0 + 1e-9));
  CHECK(are_close(zero, zero, 10.0, 1e-12));
  CHECK_FALSE(are_close(zero, one, 2.0, 0.0));

  // Mismatched jump counts inside the horizon break closeness.
  std::vector<HybridArc::Segment> segs(2);
  segs[0].times = {0.0, 1.0};
  segs[0].values = {0.0, 0.0};
  segs[1].times = {1.0};
  segs[1].values = {0.0};
  HybridArc jumpy(1, std::move(segs));
  CHECK_FALSE(are_close(jumpy, zero, 5.0, 0.5));
  CHECK_FALSE(are_close(zero, jumpy, 5.0, 0.5));
  // With the horizon cut before the transition the pair is close again.
  CHECK(are_close(jumpy, zero, 0.5, 0.5));

  // Time shift within eps is accepted through interpolation.
  HybridArc ramp = line_arc({0.0, 1.0}, {0.0, 1.0});
  HybridArc shifted = line_arc({0.0, 1.0}, {0.3, 1.3});
  CHECK(are_close(ramp, shifted, 2.0, 0.4));
  CHECK_FALSE(are_close(ramp, shifted, 2.0, 0.25));
}

TEST_CASE("solution pair invariants") {
  HybridArc x = line_arc({0.0, 1.0}, {0.0, 1.0});
  HybridArc u = line_arc({0.0, 1.0}, {5.0, 5.0});
  SolutionPair pair(x, u);
  CHECK(pair.purely_continuous());
  CHECK_FALSE(pair.purely_discrete());
  CHECK(pair.state_dim() == 1);

  HybridArc mismatched = line_arc({0.0, 2.0}, {5.0, 5.0});
  CHECK_THROWS_AS(SolutionPair(x, mismatched), Error);

  std::vector<HybridArc::Segment> segs(2);
  segs[0].times = {0.0};
  segs[0].values = {1.0};
  segs[1].times = {0.0};
  segs[1].values = {2.0};
  HybridArc jump_x(1, segs);
  HybridArc jump_u(1, std::move(segs));
  SolutionPair jump(jump_x, jump_u);
  CHECK(jump.purely_discrete());
  CHECK_FALSE(jump.purely_continuous());
}
