#include "hyrrt/gallery.hpp"

#include "hyrrt/io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <utility>

namespace hyrrt {

namespace {

Vec vec1(double a) {
  Vec v(1);
  v << a;
  return v;
}

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

Vec vec3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

Vec vec6(double a, double b, double c, double d, double e, double f) {
  Vec v(6);
  v << a, b, c, d, e, f;
  return v;
}

}  // namespace

GalleryEntry make_bouncing_ball(const BouncingBallParams& p) {
  if (p.gravity <= 0.0 || p.restitution <= 0.0 || p.restitution >= 1.0) {
    throw Error(ErrorCode::InvalidArgument, "bouncing ball needs gravity > 0, restitution in (0,1)");
  }
  if (p.height_bound <= 0.0 || p.speed_bound <= 0.0 || p.kick_max < 0.0 || p.inflation < 0.0 ||
      p.max_hold <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, "bad bouncing ball bounds");
  }
  const double grav = p.gravity;
  const double rest = p.restitution;
  const double delta = p.inflation;

  HybridSystem sys;
  sys.state_dim = 2;
  sys.input_dim = 1;
  sys.flow_field = [grav](ConstVecRef x, ConstVecRef, VecRef out) {
    out[0] = x[1];
    out[1] = -grav;
  };
  sys.jump_reset = [rest](ConstVecRef x, ConstVecRef u, VecRef out) {
    out[0] = x[0];
    out[1] = -rest * x[1] + u[0];
  };
  sys.flow_region = [](ConstVecRef x, ConstVecRef, double tol) { return x[0] >= -tol; };
  sys.jump_region = [](ConstVecRef x, ConstVecRef u, double tol) {
    return std::abs(x[0]) <= tol && x[1] <= tol && u[0] >= -tol;
  };
  sys.state_bounds = Box(vec2(0.0, -p.speed_bound), vec2(p.height_bound, p.speed_bound));
  sys.flow_input_bounds = Box(vec1(0.0), vec1(p.kick_max));
  sys.jump_input_bounds = Box(vec1(0.0), vec1(p.kick_max));
  sys.grow_flow_region = [](double r) {
    return [r](ConstVecRef x, ConstVecRef, double tol) { return x[0] >= -r - tol; };
  };
  // Grown contact set: a strip around the surface ray plus a disc at the
  // rest point, as a union; membership is exact, no sampling involved.
  sys.grow_jump_region = [](double r) {
    return [r](ConstVecRef x, ConstVecRef u, double tol) {
      if (u.size() > 0 && u[0] < -r - tol) return false;
      const bool strip = std::abs(x[0]) <= r + tol && x[1] <= tol;
      const bool disc = x.head(2).norm() <= r + tol;
      return strip || disc;
    };
  };

  GalleryEntry entry;
  entry.id = "bouncing_ball";
  entry.problem.system = delta > 0.0 ? inflate(sys, delta) : sys;
  entry.problem.start_states = StateSet::point(vec2(p.start_height, 0.0));
  entry.problem.goal_states = StateSet::point(vec2(p.goal_height, 0.0));
  const double kick_min = p.unsafe_kick_min;
  entry.problem.unsafe = [kick_min](ConstVecRef, ConstVecRef u, double tol) {
    return u[0] >= kick_min - tol;
  };

  entry.problem.flow_projection = StateSet::box(sys.state_bounds);
  const double speed = p.speed_bound;
  if (delta <= 0.0) {
    // The contact states form a ray; rejection sampling can't hit it.
    auto on_surface = [](ConstVecRef x, double tol) {
      return std::abs(x[0]) <= tol && x[1] <= tol;
    };
    auto sample_surface = [speed](Rng& rng) { return vec2(0.0, rng.uniform(-speed, 0.0)); };
    entry.problem.jump_projection = StateSet::predicate(
        on_surface, Box(vec2(0.0, -speed), vec2(0.0, 0.0)), sample_surface);
  } else {
    auto near_surface = [delta](ConstVecRef x, double tol) {
      return (std::abs(x[0]) <= delta + tol && x[1] <= tol) || x.norm() <= delta + tol;
    };
    // Within the state bounds the grown set is a strip plus a quarter disc;
    // pick the piece by area, then sample it uniformly.
    auto sample_near = [delta, speed](Rng& rng) {
      const double strip_area = delta * speed;
      const double disc_area = 0.25 * M_PI * delta * delta;
      if (rng.uniform() * (strip_area + disc_area) < strip_area) {
        return vec2(rng.uniform(0.0, delta), rng.uniform(-speed, 0.0));
      }
      const double radius = delta * std::sqrt(rng.uniform());
      const double angle = rng.uniform(0.0, 0.5 * M_PI);
      return vec2(radius * std::cos(angle), radius * std::sin(angle));
    };
    entry.problem.jump_projection = StateSet::predicate(
        near_surface, Box(vec2(-delta, -speed), vec2(delta, delta)), sample_near);
  }

  entry.sim.scheme.method = IntegrationMethod::RK4;
  entry.sim.scheme.step = 1e-3;
  if (delta <= 0.0) {
    entry.sim.guards.flow_rule = [](ConstVecRef x, ConstVecRef) { return x[0]; };
    entry.sim.guards.jump_rule = [](ConstVecRef x, ConstVecRef) { return x[0]; };
  } else {
    entry.sim.guards.flow_rule = [delta](ConstVecRef x, ConstVecRef) { return x[0] + delta; };
    entry.sim.guards.jump_rule = [delta](ConstVecRef x, ConstVecRef) { return x[0] - delta; };
  }

  std::vector<Vec> kicks;
  for (int k = 0; k <= static_cast<int>(p.kick_max); ++k) kicks.push_back(vec1(k));
  // Flow inputs do not act on the flow map, so the flow side is the family of
  // zero signals with hold times up to max_hold. The horizon must cover a full
  // bounce (about 2.8 s post-kick here): edges that stop mid-arc strand the
  // search below the apexes where the goal lives.
  entry.library =
      InputLibrary::flow_family(Box(vec1(0.0), vec1(0.0)), p.max_hold, std::move(kicks));

  entry.planner.max_iterations = 2000;
  entry.planner.goal_tolerance = 0.2;
  entry.planner.flow_sample_bias = 0.5;
  entry.planner.greedy_draws = 8;
  return entry;
}

GalleryEntry make_biped(const BipedParams& p) {
  if (p.step_angle <= 0.0 || p.leg_accel_limit <= 0.0 || p.torso_accel_limit <= 0.0 ||
      p.angle_bound <= p.step_angle || p.rate_bound <= 0.0 || p.inflation < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "bad biped parameters");
  }
  const double phi = p.step_angle;
  const double delta = p.inflation;

  // State (planted, swing, torso angles; their rates); input is the three
  // post-feedback angular accelerations. Contact when the planted angle
  // reaches the step angle while rotating forward.
  HybridSystem sys;
  sys.state_dim = 6;
  sys.input_dim = 3;
  sys.flow_field = [](ConstVecRef x, ConstVecRef u, VecRef out) {
    out[0] = x[3];
    out[1] = x[4];
    out[2] = x[5];
    out[3] = u[0];
    out[4] = u[1];
    out[5] = u[2];
  };
  auto contact = p.contact_map;
  if (!contact) {
    // Simplified plastic impact: leg rates scale with the inter-leg opening
    // angle, torso rate carries through. A stand-in, deliberately pluggable.
    const double scale = std::cos(2.0 * phi);
    contact = [scale](ConstVecRef s) { return vec3(scale * s[3], scale * s[4], s[5]); };
  }
  sys.jump_reset = [contact](ConstVecRef x, ConstVecRef, VecRef out) {
    Vec swapped = vec6(x[1], x[0], x[2], x[4], x[3], x[5]);
    const Vec rates = contact(swapped);
    if (rates.size() != 3) {
      throw Error(ErrorCode::InvalidArgument, "contact map must return three rates");
    }
    out.head(3) = swapped.head(3);
    out.tail(3) = rates;
  };
  sys.flow_region = [phi](ConstVecRef x, ConstVecRef, double tol) { return phi - x[0] >= -tol; };
  sys.jump_region = [phi](ConstVecRef x, ConstVecRef, double tol) {
    return std::abs(phi - x[0]) <= tol && x[3] >= -tol;
  };
  const double ab = p.angle_bound;
  const double rb = p.rate_bound;
  sys.state_bounds = Box(vec6(-ab, -ab, -ab, -rb, -rb, -rb), vec6(ab, ab, ab, rb, rb, rb));
  sys.flow_input_bounds = Box(vec3(-2.0, -2.0, -0.15), vec3(2.0, 2.0, 0.10));
  sys.jump_input_bounds = Box(vec3(0.0, 0.0, 0.0), vec3(0.0, 0.0, 0.0));
  sys.grow_flow_region = [phi](double r) {
    return [phi, r](ConstVecRef x, ConstVecRef, double tol) { return phi - x[0] >= -r - tol; };
  };
  sys.grow_jump_region = [phi](double r) {
    return [phi, r](ConstVecRef x, ConstVecRef, double tol) {
      const double h = phi - x[0];
      const bool strip = std::abs(h) <= r + tol && x[3] >= -tol;
      const double rr = r + tol;
      const bool disc = h * h + x[3] * x[3] <= rr * rr;
      return strip || disc;
    };
  };

  GalleryEntry entry;
  entry.id = "biped";
  entry.problem.system = delta > 0.0 ? inflate(sys, delta) : sys;

  const Vec goal = vec6(phi, -phi, 0.0, p.goal_planted_rate, p.goal_swing_rate, 0.0);
  entry.problem.goal_states = StateSet::point(goal);
  entry.problem.start_states = StateSet::point(sys.reset(goal, vec3(0.0, 0.0, 0.0)));

  const double la = p.leg_accel_limit;
  const double ta = p.torso_accel_limit;
  entry.problem.unsafe = [la, ta, phi](ConstVecRef x, ConstVecRef u, double tol) {
    if (std::abs(u[0]) > la - tol || std::abs(u[1]) > la - tol || std::abs(u[2]) > ta - tol) {
      return true;
    }
    // The contact set itself is off limits; with tol = 0 that means exact
    // equality, so trajectories merely touching it numerically are fine.
    return std::abs(phi - x[0]) <= tol && x[3] >= -tol;
  };

  entry.problem.flow_projection = StateSet::predicate(
      [phi, delta](ConstVecRef x, double tol) { return phi - x[0] >= -delta - tol; },
      sys.state_bounds);
  if (delta <= 0.0) {
    auto on_contact = [phi](ConstVecRef x, double tol) {
      return std::abs(phi - x[0]) <= tol && x[3] >= -tol;
    };
    auto sample_contact = [phi, ab, rb](Rng& rng) {
      return vec6(phi, rng.uniform(-ab, ab), rng.uniform(-ab, ab), rng.uniform(0.0, rb),
                  rng.uniform(-rb, rb), rng.uniform(-rb, rb));
    };
    entry.problem.jump_projection =
        StateSet::predicate(on_contact, sys.state_bounds, sample_contact);
  } else {
    auto near_contact = [phi, delta](ConstVecRef x, double tol) {
      const double h = phi - x[0];
      if (std::abs(h) <= delta + tol && x[3] >= -tol) return true;
      const double rr = delta + tol;
      return h * h + x[3] * x[3] <= rr * rr;
    };
    // Strip and half-disc in the (clearance, planted-rate) plane; the other
    // four coordinates are uniform either way.
    auto sample_near = [phi, delta, ab, rb](Rng& rng) {
      double h = 0.0;
      double wp = 0.0;
      const double strip_area = 2.0 * delta * rb;
      const double disc_area = 0.5 * M_PI * delta * delta;
      if (rng.uniform() * (strip_area + disc_area) < strip_area) {
        h = rng.uniform(-delta, delta);
        wp = rng.uniform(0.0, rb);
      } else {
        const double radius = delta * std::sqrt(rng.uniform());
        const double angle = rng.uniform(M_PI, 2.0 * M_PI);
        h = radius * std::cos(angle);
        wp = radius * std::sin(angle);
      }
      return vec6(phi - h, rng.uniform(-ab, ab), rng.uniform(-ab, ab), wp, rng.uniform(-rb, rb),
                  rng.uniform(-rb, rb));
    };
    entry.problem.jump_projection =
        StateSet::predicate(near_contact, sys.state_bounds, sample_near);
  }

  entry.sim.scheme.method = IntegrationMethod::RK4;
  entry.sim.scheme.step = 1e-2;
  if (delta <= 0.0) {
    entry.sim.guards.flow_rule = [phi](ConstVecRef x, ConstVecRef) { return phi - x[0]; };
    entry.sim.guards.jump_rule = [phi](ConstVecRef x, ConstVecRef) { return phi - x[0]; };
  } else {
    entry.sim.guards.flow_rule = [phi, delta](ConstVecRef x, ConstVecRef) {
      return phi - x[0] + delta;
    };
    entry.sim.guards.jump_rule = [phi, delta](ConstVecRef x, ConstVecRef) {
      return phi - x[0] - delta;
    };
  }

  std::vector<Vec> levels;
  for (int i = -2; i <= 2; ++i) {
    for (int k = -2; k <= 2; ++k) {
      for (int t = 0; t < 5; ++t) {
        levels.push_back(vec3(i, k, -0.15 + 0.0625 * t));
      }
    }
  }
  entry.library =
      InputLibrary::finite(build_flow_signals(levels, 0.2), {vec3(0.0, 0.0, 0.0)});

  entry.planner.max_iterations = 5000;
  entry.planner.goal_tolerance = 0.3;
  entry.planner.flow_sample_bias = 0.9;
  return entry;
}

GalleryEntry make_point_mass(const PointMassParams& p) {
  if (p.position_bound <= 0.0 || p.speed_bound <= 0.0 || p.accel_limit <= 0.0 ||
      p.hold_time <= 0.0 || p.inflation < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "bad point mass parameters");
  }
  const double pb = p.position_bound;
  const double vb = p.speed_bound;
  const double delta = p.inflation;

  HybridSystem sys;
  sys.state_dim = 2;
  sys.input_dim = 1;
  sys.flow_field = [](ConstVecRef x, ConstVecRef u, VecRef out) {
    out[0] = x[1];
    out[1] = u[0];
  };
  sys.jump_reset = [](ConstVecRef x, ConstVecRef, VecRef out) { out = x; };
  sys.flow_region = [pb, vb](ConstVecRef x, ConstVecRef, double tol) {
    return std::abs(x[0]) <= pb + tol && std::abs(x[1]) <= vb + tol;
  };
  sys.jump_region = [](ConstVecRef, ConstVecRef, double) { return false; };
  sys.state_bounds = Box(vec2(-pb, -vb), vec2(pb, vb));
  sys.flow_input_bounds = Box(vec1(-p.accel_limit), vec1(p.accel_limit));
  sys.jump_input_bounds = Box(vec1(0.0), vec1(0.0));
  sys.grow_flow_region = [pb, vb](double r) {
    return [pb, vb, r](ConstVecRef x, ConstVecRef, double tol) {
      const double dp = std::max(std::abs(x[0]) - pb, 0.0);
      const double dv = std::max(std::abs(x[1]) - vb, 0.0);
      return std::hypot(dp, dv) <= r + tol;
    };
  };
  sys.grow_jump_region = [](double) {
    return [](ConstVecRef, ConstVecRef, double) { return false; };
  };

  GalleryEntry entry;
  entry.id = "point_mass";
  entry.problem.system = delta > 0.0 ? inflate(sys, delta) : sys;
  entry.problem.start_states = StateSet::point(vec2(p.start_position, 0.0));
  entry.problem.goal_states = StateSet::point(vec2(p.goal_position, 0.0));
  entry.problem.flow_projection = StateSet::box(sys.state_bounds);
  entry.problem.jump_projection = StateSet::empty(2);

  entry.sim.scheme.method = IntegrationMethod::RK4;
  entry.sim.scheme.step = 1e-2;
  // Margin to the nearest box face; there is no contact set to stop at.
  auto margin = [pb, vb, delta](ConstVecRef x, ConstVecRef) {
    return std::min(std::min(pb - x[0], x[0] + pb), std::min(vb - x[1], x[1] + vb)) + delta;
  };
  entry.sim.guards.flow_rule = margin;
  entry.sim.guards.jump_rule = margin;

  std::vector<Vec> levels;
  for (int k = -2; k <= 2; ++k) levels.push_back(vec1(k * 0.5 * p.accel_limit));
  entry.library = InputLibrary::finite(build_flow_signals(levels, p.hold_time), {});

  entry.planner.max_iterations = 5000;
  entry.planner.goal_tolerance = 0.5;
  entry.planner.flow_sample_bias = 1.0;
  return entry;
}

GalleryEntry make_gallery_entry(const std::string& id) {
  if (id == "bouncing_ball") return make_bouncing_ball();
  if (id == "biped") return make_biped();
  if (id == "point_mass") return make_point_mass();
  throw Error(ErrorCode::InvalidArgument, "unknown gallery id: " + id);
}

namespace {

using nlohmann::json;

double number_or(const json& node, const char* key, double fallback) {
  if (!node.contains(key)) return fallback;
  if (!node[key].is_number()) {
    throw Error(ErrorCode::Parse, std::string("expected a number for ") + key);
  }
  return node[key].get<double>();
}

Vec parse_vec(const json& node, int dim, const char* what) {
  if (!node.is_array() || static_cast<int>(node.size()) != dim) {
    throw Error(ErrorCode::Parse, std::string(what) + " must be an array of length " +
                                      std::to_string(dim));
  }
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = node[i].get<double>();
  return v;
}

StateSet parse_state_set(const json& node, int dim, const char* what) {
  if (node.contains("point")) return StateSet::point(parse_vec(node["point"], dim, what));
  if (node.contains("box")) {
    const json& b = node["box"];
    return StateSet::box(Box(parse_vec(b.at("lo"), dim, what), parse_vec(b.at("hi"), dim, what)));
  }
  throw Error(ErrorCode::Parse, std::string(what) + " needs a \"point\" or \"box\" member");
}

std::vector<Vec> parse_levels(const json& node, int dim, const char* what) {
  if (!node.is_array()) {
    throw Error(ErrorCode::Parse, std::string(what) + " must be an array");
  }
  std::vector<Vec> out;
  out.reserve(node.size());
  for (const json& item : node) {
    if (item.is_number()) {
      if (dim != 1) {
        throw Error(ErrorCode::Parse, std::string(what) + " entries must have length " +
                                          std::to_string(dim));
      }
      out.push_back(vec1(item.get<double>()));
    } else {
      out.push_back(parse_vec(item, dim, what));
    }
  }
  return out;
}

}  // namespace

GalleryEntry load_problem_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("problem file: ") + e.what());
  }
  try {
    if (!doc.contains("system") || !doc["system"].is_string()) {
      throw Error(ErrorCode::Parse, "problem file needs a \"system\" string");
    }
    const std::string id = doc["system"].get<std::string>();
    const json params = doc.value("params", json::object());
    const double delta = number_or(doc, "delta_inflation", 0.0);

    GalleryEntry entry;
    if (id == "bouncing_ball") {
      BouncingBallParams p;
      p.gravity = number_or(params, "gravity", p.gravity);
      p.restitution = number_or(params, "restitution", p.restitution);
      p.start_height = number_or(params, "start_height", p.start_height);
      p.goal_height = number_or(params, "goal_height", p.goal_height);
      p.height_bound = number_or(params, "height_bound", p.height_bound);
      p.speed_bound = number_or(params, "speed_bound", p.speed_bound);
      p.kick_max = number_or(params, "kick_max", p.kick_max);
      p.max_hold = number_or(params, "max_hold", p.max_hold);
      p.inflation = delta;
      if (doc.contains("Xu") && !doc["Xu"].is_null()) {
        p.unsafe_kick_min = number_or(doc["Xu"], "input_min", p.unsafe_kick_min);
      }
      entry = make_bouncing_ball(p);
    } else if (id == "biped") {
      BipedParams p;
      p.step_angle = number_or(params, "step_angle", p.step_angle);
      p.leg_accel_limit = number_or(params, "leg_accel_limit", p.leg_accel_limit);
      p.torso_accel_limit = number_or(params, "torso_accel_limit", p.torso_accel_limit);
      p.angle_bound = number_or(params, "angle_bound", p.angle_bound);
      p.rate_bound = number_or(params, "rate_bound", p.rate_bound);
      p.inflation = delta;
      if (doc.contains("Xu") && !doc["Xu"].is_null()) {
        p.leg_accel_limit = number_or(doc["Xu"], "leg_accel_limit", p.leg_accel_limit);
        p.torso_accel_limit = number_or(doc["Xu"], "torso_accel_limit", p.torso_accel_limit);
      }
      entry = make_biped(p);
    } else if (id == "point_mass") {
      PointMassParams p;
      p.position_bound = number_or(params, "position_bound", p.position_bound);
      p.speed_bound = number_or(params, "speed_bound", p.speed_bound);
      p.accel_limit = number_or(params, "accel_limit", p.accel_limit);
      p.start_position = number_or(params, "start_position", p.start_position);
      p.goal_position = number_or(params, "goal_position", p.goal_position);
      p.hold_time = number_or(params, "hold_time", p.hold_time);
      p.inflation = delta;
      if (doc.contains("Xu") && !doc["Xu"].is_null()) {
        throw Error(ErrorCode::Parse, "point_mass has no unsafe-set parameters");
      }
      entry = make_point_mass(p);
    } else {
      throw Error(ErrorCode::Parse, "unknown system id: " + id);
    }

    const int n = entry.problem.system.state_dim;
    if (doc.contains("X0")) entry.problem.start_states = parse_state_set(doc["X0"], n, "X0");
    if (doc.contains("Xf")) entry.problem.goal_states = parse_state_set(doc["Xf"], n, "Xf");

    if (doc.contains("input_library")) {
      const json& lib = doc["input_library"];
      const std::string mode = lib.value("mode", "finite");
      const int m = entry.problem.system.input_dim;
      if (mode == "finite") {
        std::vector<InputSignal> signals = entry.library.flow_signals();
        if (lib.contains("flow_levels")) {
          if (!lib.contains("flow_t_star")) {
            throw Error(ErrorCode::Parse, "finite flow levels need \"flow_t_star\"");
          }
          signals = build_flow_signals(parse_levels(lib["flow_levels"], m, "flow_levels"),
                                       lib["flow_t_star"].get<double>());
        }
        std::vector<Vec> jumps = entry.library.jump_values();
        if (lib.contains("jump_values")) {
          jumps = parse_levels(lib["jump_values"], m, "jump_values");
        }
        entry.library = InputLibrary::finite(std::move(signals), std::move(jumps));
      } else if (mode == "continuous") {
        if (!lib.contains("flow_T_m")) {
          throw Error(ErrorCode::Parse, "continuous input library needs \"flow_T_m\"");
        }
        const double max_hold = lib["flow_T_m"].get<double>();
        if (lib.contains("jump_values")) {
          entry.library = InputLibrary::flow_family(
              entry.problem.system.flow_input_bounds, max_hold,
              parse_levels(lib["jump_values"], m, "jump_values"));
        } else {
          entry.library = InputLibrary::continuous(entry.problem.system.flow_input_bounds,
                                                   max_hold,
                                                   entry.problem.system.jump_input_bounds);
        }
      } else {
        throw Error(ErrorCode::Parse, "input library mode must be finite or continuous");
      }
    }

    if (doc.contains("planner")) {
      const json& pl = doc["planner"];
      PlannerConfig& cfg = entry.planner;
      cfg.goal_tolerance = number_or(pl, "eps", cfg.goal_tolerance);
      cfg.flow_sample_bias = number_or(pl, "p_n", cfg.flow_sample_bias);
      cfg.flow_when_both = number_or(pl, "p_fg", cfg.flow_when_both);
      if (pl.contains("max_iter")) cfg.max_iterations = pl["max_iter"].get<std::uint64_t>();
      if (pl.contains("seed")) cfg.seed = pl["seed"].get<std::uint64_t>();
      if (pl.contains("greedy_draws")) cfg.greedy_draws = pl["greedy_draws"].get<int>();
      cfg.jump_dedupe_radius = number_or(pl, "jump_dedupe_radius", cfg.jump_dedupe_radius);
      if (pl.contains("mode")) {
        const std::string mode = pl["mode"].get<std::string>();
        if (mode == "random") {
          cfg.mode = PlannerMode::Random;
        } else if (mode == "greedy") {
          cfg.mode = PlannerMode::Greedy;
        } else {
          throw Error(ErrorCode::Parse, "planner mode must be random or greedy");
        }
      }
    }

    if (doc.contains("integrator")) {
      const json& integ = doc["integrator"];
      if (integ.contains("method")) {
        entry.sim.scheme.method =
            integration_method_from_name(integ["method"].get<std::string>());
      }
      entry.sim.scheme.step = number_or(integ, "step", entry.sim.scheme.step);
      if (entry.sim.scheme.step <= 0.0) {
        throw Error(ErrorCode::Parse, "integrator step must be positive");
      }
    }
    return entry;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("problem file: ") + e.what());
  }
}

GalleryEntry load_problem_file(const std::string& path) {
  return load_problem_json(read_text_file(path));
}

}  // namespace hyrrt
