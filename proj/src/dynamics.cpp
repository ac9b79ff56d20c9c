#include "evogame/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "evogame/error.hpp"
#include "evogame/game.hpp"

namespace evogame {

void validate(const IntegratorConfig& c) {
  if (!(c.dt > 0) || !std::isfinite(c.dt)) throw ValidationError("dt must be positive");
  if (!(c.t_max >= c.dt) || !std::isfinite(c.t_max)) throw ValidationError("t_max must be >= dt");
  if (!(c.convergence_eps > 0)) throw ValidationError("convergence_eps must be positive");
  if (c.convergence_window < 1) throw ValidationError("convergence_window must be >= 1");
  if (!(c.threshold > 0 && c.threshold < 0.5)) {
    throw ValidationError("threshold must lie in (0, 0.5)");
  }
}

namespace {

StrategyState advance(const StrategyState& s, const FieldValue& f, double h) {
  return {s.x + h * f.dx, s.y + h * f.dy, s.z + h * f.dz};
}

double clamp_unit(double v, double& correction) {
  if (v < 0) {
    correction = std::max(correction, -v);
    return 0;
  }
  if (v > 1) {
    correction = std::max(correction, v - 1);
    return 1;
  }
  return v;
}

}  // namespace

StrategyState rk4_step(const ModelParams& params, const StrategyState& s, double dt) {
  if (!(dt > 0)) throw ValidationError("dt must be positive");
  const FieldValue k1 = replicator_field(params, s);
  const FieldValue k2 = replicator_field(params, advance(s, k1, dt / 2));
  const FieldValue k3 = replicator_field(params, advance(s, k2, dt / 2));
  const FieldValue k4 = replicator_field(params, advance(s, k3, dt));
  StrategyState next{s.x + dt / 6 * (k1.dx + 2 * k2.dx + 2 * k3.dx + k4.dx),
                     s.y + dt / 6 * (k1.dy + 2 * k2.dy + 2 * k3.dy + k4.dy),
                     s.z + dt / 6 * (k1.dz + 2 * k2.dz + 2 * k3.dz + k4.dz)};
  if (!std::isfinite(next.x) || !std::isfinite(next.y) || !std::isfinite(next.z)) {
    throw IntegrationError("RK4 step produced a non-finite state");
  }
  double correction = 0;
  next.x = clamp_unit(next.x, correction);
  next.y = clamp_unit(next.y, correction);
  next.z = clamp_unit(next.z, correction);
  if (correction > kClampBudget) {
    throw IntegrationError("RK4 step left the unit cube by " + std::to_string(correction) +
                           "; reduce dt");
  }
  return next;
}

Trajectory integrate(const ModelParams& params, const StrategyState& initial,
                     const IntegratorConfig& config) {
  validate(params);
  validate(initial);
  validate(config);

  Trajectory traj;
  traj.params = params;
  traj.config = config;
  const auto steps = static_cast<std::size_t>(std::floor(config.t_max / config.dt + 1e-9));
  traj.samples.reserve(steps + 1);
  traj.samples.push_back({0.0, initial});

  // Number of trailing samples within eps of the current nearest vertex.
  std::size_t streak = 0;
  StrategyState streak_vertex{};
  auto update_streak = [&](const StrategyState& s) {
    const StrategyState v{std::round(s.x), std::round(s.y), std::round(s.z)};
    if (max_norm_distance(s, v) <= config.convergence_eps) {
      streak = (streak > 0 && v == streak_vertex) ? streak + 1 : 1;
      streak_vertex = v;
    } else {
      streak = 0;
    }
  };
  update_streak(initial);

  StrategyState state = initial;
  for (std::size_t i = 1; i <= steps; ++i) {
    state = rk4_step(params, state, config.dt);
    // Times are step multiples so that halving dt lands on the same grid.
    traj.samples.push_back({static_cast<double>(i) * config.dt, state});
    if (config.stop_on_convergence) {
      update_streak(state);
      if (streak >= static_cast<std::size_t>(config.convergence_window)) break;
    }
  }
  return traj;
}

ConvergenceResult detect_convergence(const Trajectory& traj) {
  if (traj.samples.empty()) throw ValidationError("empty trajectory");
  const double eps = traj.config.convergence_eps;
  const StrategyState& last = traj.final_state();
  const StrategyState v{std::round(last.x), std::round(last.y), std::round(last.z)};

  const std::size_t n = traj.samples.size();
  const std::size_t window =
      std::min(n, static_cast<std::size_t>(std::max(1, traj.config.convergence_window)));
  for (std::size_t i = n - window; i < n; ++i) {
    if (max_norm_distance(traj.samples[i].state, v) > eps) return {};
  }

  std::size_t first = n - window;
  while (first > 0 && max_norm_distance(traj.samples[first - 1].state, v) <= eps) --first;

  ConvergenceResult result;
  result.converged = true;
  result.limit = vertex_point(static_cast<int>(v.x), static_cast<int>(v.y), static_cast<int>(v.z));
  result.t_converge = traj.samples[first].t;
  return result;
}

std::optional<double> time_to_threshold(const Trajectory& traj, Coordinate c, double target,
                                        double threshold) {
  if (traj.samples.empty()) return std::nullopt;
  auto inside = [&](const Sample& s) { return std::abs(coordinate(s.state, c) - target) < threshold; };
  std::size_t i = traj.samples.size();
  while (i > 0 && inside(traj.samples[i - 1])) --i;
  if (i == traj.samples.size()) return std::nullopt;
  return traj.samples[i].t;
}

}  // namespace evogame
