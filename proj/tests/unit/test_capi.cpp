#include "doctest.h"

#include "hyrrt.h"

#include <cstring>
#include <string>

namespace {

struct ProblemHandle {
  hyrrt_problem* p = nullptr;
  ~ProblemHandle() { hyrrt_problem_free(p); }
};

struct ResultHandle {
  hyrrt_result* r = nullptr;
  ~ResultHandle() { hyrrt_result_free(r); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  hyrrt_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("c api basics and error reporting") {
  CHECK(hyrrt_version() != nullptr);

  ProblemHandle bad;
  CHECK(hyrrt_problem_gallery("warp_drive", &bad.p) == HYRRT_ERR_INVALID_ARGUMENT);
  CHECK(bad.p == nullptr);
  CHECK(std::strlen(hyrrt_last_error()) > 0);
  CHECK(hyrrt_problem_gallery(nullptr, &bad.p) == HYRRT_ERR_INVALID_ARGUMENT);
  CHECK(hyrrt_problem_from_json("not json", &bad.p) == HYRRT_ERR_PARSE);
  CHECK(hyrrt_problem_load("missing_file.json", &bad.p) == HYRRT_ERR_IO);

  ProblemHandle ball;
  REQUIRE(hyrrt_problem_gallery("bouncing_ball", &ball.p) == HYRRT_OK);
  CHECK(hyrrt_problem_state_dim(ball.p) == 2);
  CHECK(hyrrt_problem_input_dim(ball.p) == 1);
}

TEST_CASE("c api plans, converts, and checks") {
  ProblemHandle pm;
  REQUIRE(hyrrt_problem_gallery("point_mass", &pm.p) == HYRRT_OK);

  hyrrt_plan_options opts;
  hyrrt_plan_options_defaults(&opts);
  opts.seed = 2;

  ResultHandle res;
  REQUIRE(hyrrt_plan(pm.p, &opts, &res.r) == HYRRT_OK);
  REQUIRE(hyrrt_result_found(res.r) == 1);
  CHECK(hyrrt_result_iterations(res.r) > 0);
  CHECK(hyrrt_result_vertex_count(res.r) > 1);
  CHECK(hyrrt_result_wall_time_seconds(res.r) >= 0.0);

  char* json = nullptr;
  REQUIRE(hyrrt_result_plan_json(res.r, &json) == HYRRT_OK);
  const std::string plan = take(json);
  CHECK(plan.find("\"segments\"") != std::string::npos);

  char* tree = nullptr;
  REQUIRE(hyrrt_result_tree_csv(res.r, &tree) == HYRRT_OK);
  CHECK(take(tree).rfind("edge,t,j", 0) == 0);

  char* csv = nullptr;
  REQUIRE(hyrrt_plan_convert(plan.c_str(), "csv", &csv) == HYRRT_OK);
  CHECK(take(csv).rfind("t,j,x_0,x_1,u_0", 0) == 0);
  char* none = nullptr;
  CHECK(hyrrt_plan_convert(plan.c_str(), "yaml", &none) == HYRRT_ERR_INVALID_ARGUMENT);

  int ok = -1;
  char* report = nullptr;
  REQUIRE(hyrrt_plan_check(pm.p, plan.c_str(), 0.0, &ok, &report) == HYRRT_OK);
  CHECK(ok == 1);
  CHECK(take(report) == "ok");

  // Determinism through the C surface: same options, same bytes.
  ResultHandle res2;
  REQUIRE(hyrrt_plan(pm.p, &opts, &res2.r) == HYRRT_OK);
  char* json2 = nullptr;
  REQUIRE(hyrrt_result_plan_json(res2.r, &json2) == HYRRT_OK);
  CHECK(take(json2) == plan);
}

TEST_CASE("c api refuses a plan that was never found") {
  ProblemHandle pm;
  REQUIRE(hyrrt_problem_gallery("point_mass", &pm.p) == HYRRT_OK);
  hyrrt_plan_options opts;
  hyrrt_plan_options_defaults(&opts);
  opts.max_iterations = 1;

  ResultHandle res;
  REQUIRE(hyrrt_plan(pm.p, &opts, &res.r) == HYRRT_OK);
  REQUIRE(hyrrt_result_found(res.r) == 0);
  char* json = nullptr;
  CHECK(hyrrt_result_plan_json(res.r, &json) == HYRRT_ERR_INVALID_ARGUMENT);
  CHECK(json == nullptr);
}

TEST_CASE("c api simulates and benches") {
  ProblemHandle ball;
  REQUIRE(hyrrt_problem_gallery("bouncing_ball", &ball.p) == HYRRT_OK);

  const double x0[2] = {15.0, 0.0};
  const double level[1] = {0.0};
  char* plan_json = nullptr;
  REQUIRE(hyrrt_simulate(ball.p, x0, 2, level, 1, 0.1, "flow", "rk4", 1e-3, &plan_json) ==
          HYRRT_OK);
  const std::string sim = take(plan_json);
  CHECK(sim.find("\"n\": 2") != std::string::npos);

  char* bad = nullptr;
  CHECK(hyrrt_simulate(ball.p, x0, 2, level, 1, 0.1, "sideways", nullptr, 0.0, &bad) ==
        HYRRT_ERR_INVALID_ARGUMENT);

  hyrrt_plan_options opts;
  hyrrt_plan_options_defaults(&opts);
  char* summary = nullptr;
  REQUIRE(hyrrt_bench(ball.p, &opts, 3, 0, 1, nullptr, &summary) == HYRRT_OK);
  const std::string text = take(summary);
  CHECK(text.find("\"n_trials\": 3") != std::string::npos);
}
