#pragma once

#include <optional>
#include <vector>

#include "evogame/params.hpp"
#include "evogame/stability.hpp"

namespace evogame {

struct IntegratorConfig {
  double dt = 0.01;
  double t_max = 200.0;
  double convergence_eps = 1e-4;
  int convergence_window = 100;
  // Band half-width used by the evolution-speed metric.
  double threshold = 0.01;
  // Stop as soon as the last convergence_window samples sit on one vertex.
  bool stop_on_convergence = false;

  friend bool operator==(const IntegratorConfig&, const IntegratorConfig&) = default;
};

void validate(const IntegratorConfig& config);

// Largest allowed correction when clamping a step back into the cube.
inline constexpr double kClampBudget = 1e-9;

struct Sample {
  double t = 0;
  StrategyState state;
};

struct Trajectory {
  std::vector<Sample> samples;
  ModelParams params;
  IntegratorConfig config;

  const StrategyState& final_state() const { return samples.back().state; }
};

// One classic fourth-order Runge-Kutta step of the replicator field, clamped
// into [0,1]^3. Throws IntegrationError if a clamp larger than kClampBudget
// is needed or the step is not finite.
StrategyState rk4_step(const ModelParams& params, const StrategyState& state, double dt);

// Fixed-step integration from t = 0 to t_max, one sample per step.
Trajectory integrate(const ModelParams& params, const StrategyState& initial,
                     const IntegratorConfig& config = {});

struct ConvergenceResult {
  bool converged = false;
  std::optional<EquilibriumPoint> limit;
  std::optional<double> t_converge;
};

// Converged when the last convergence_window samples (or all of them, if
// fewer) lie within convergence_eps of the same vertex in max-norm.
// t_converge is the first time after which the trajectory never leaves that
// ball.
ConvergenceResult detect_convergence(const Trajectory& traj);

// First sample time after which |coordinate - target| < threshold holds for
// the rest of the trajectory.
std::optional<double> time_to_threshold(const Trajectory& traj, Coordinate coordinate,
                                        double target, double threshold);

}  // namespace evogame
