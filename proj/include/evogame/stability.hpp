#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evogame/eigen.hpp"
#include "evogame/params.hpp"

namespace evogame {

using JacobianMatrix = Matrix3;

enum class EquilibriumKind { kPure, kInterior };

// gamma_1 .. gamma_8 are the cube vertices, gamma_9 the interior candidate.
struct EquilibriumPoint {
  int number = 0;
  StrategyState coords;
  EquilibriumKind kind = EquilibriumKind::kPure;

  std::string label() const;  // "gamma4"
};

enum class Sign { kNegative, kZero, kPositive };
char sign_symbol(Sign s);  // '-', '0', '+'

enum class Classification { kESS, kUnstable, kSaddle, kIndeterminate };
std::string_view classification_name(Classification c);

// Sufficient conditions for gamma4, gamma6 and gamma8 to be ESS.
struct ConditionCheck {
  bool condition1 = false;  // C_SJ < C_LF + C_MJ + C_DJ                   -> gamma4 ESS
  bool condition2 = false;  // C_SJ > C_LF + C_MJ + C_DJ, B_SP + C_LC < C_SC -> gamma6 ESS
  bool condition3 = false;  // C_SJ > C_DJ+C_HJ+C_LC+C_LF+C_MJ+I_J+T_RJ, C_SC < C_LC + B_SP -> gamma8 ESS
};

ConditionCheck check_conditions(const ModelParams& params);

// Partial derivatives of the replicator field. J(1,2) and J(2,1) (zero-based)
// vanish identically.
JacobianMatrix analytic_jacobian(const ModelParams& params, const StrategyState& state);

// Second-order differences of replicator_field: central in the interior,
// three-point one-sided within h of a face. Throws ValidationError for h <= 0.
JacobianMatrix finite_difference_jacobian(const ModelParams& params, const StrategyState& state,
                                          double h);

// gamma1..gamma8 in label order:
//   (0,0,0) (1,0,0) (0,1,0) (0,0,1) (1,1,0) (1,0,1) (0,1,1) (1,1,1)
std::vector<EquilibriumPoint> pure_equilibria();

// Vertex with the given coordinates (each 0 or 1).
EquilibriumPoint vertex_point(int x, int y, int z);

enum class InteriorStatus { kFeasible, kInfeasible, kDegenerate };
std::string_view interior_status_name(InteriorStatus s);

struct InteriorResult {
  InteriorStatus status = InteriorStatus::kInfeasible;
  std::optional<EquilibriumPoint> point;
  // x* = -C_IF / C_LF; absent when degenerate.
  std::optional<double> x_candidate;
  std::string reason;
};

// Solves the interior fixed-point conditions
//   y(-I_J-C_LC-T_RJ-C_HJ) - z C_LF - C_DJ - C_MJ + C_SJ = 0
//   x(C_HJ-C_SC+B_SP+C_LC) - C_HJ = 0
//   x C_LF + C_IF = 0
// x is fixed by the last line and must satisfy the second; the first line
// leaves a segment in (y, z), of which the midpoint is returned. With
// nonnegative parameters x* <= 0, so the point is never feasible.
// Does not check parameter signs.
InteriorResult interior_equilibrium(const ModelParams& params);

// Closed-form eigenvalues at a vertex in axis order (x, y, z). These equal the
// Jacobian diagonal there. Throws ValidationError for interior points.
std::array<double, 3> vertex_eigenvalues(const ModelParams& params, const EquilibriumPoint& point);

// ESS if every real part < -tol, Unstable if every real part > tol,
// Indeterminate if any real part lies in [-tol, tol], NonESS-Saddle otherwise.
Classification classify(const EigenTriple& eigs, double sign_tolerance);

Sign sign_of(double value, double sign_tolerance);

// 1e-9 * max(1, largest parameter).
double default_sign_tolerance(const ModelParams& params);

struct EquilibriumReport {
  EquilibriumPoint point;
  // Axis order (x, y, z) at vertices; sorted ascending at interior points.
  EigenTriple eigenvalues{};
  std::array<Sign, 3> signs{};
  Classification classification = Classification::kIndeterminate;

  std::string sign_string() const;  // e.g. "+-+"
};

struct StabilityReport {
  ModelParams params;
  double sign_tolerance = 0;
  std::vector<EquilibriumReport> vertices;  // gamma1..gamma8
  InteriorResult interior;
  std::optional<EquilibriumReport> interior_report;
  ConditionCheck conditions;

  std::vector<EquilibriumPoint> ess_points() const;
};

// sign_tolerance <= 0 selects default_sign_tolerance(params).
StabilityReport stability_report(const ModelParams& params, double sign_tolerance = 0);

// Expected eigenvalue signs at a vertex, '*' where the sign depends on params.
// The all-negative rows of gamma4/6/8 apply only under their condition; when
// it does not hold, the condition-dependent entries become '*'.
std::string documented_sign_pattern(int number, const ConditionCheck& conditions);

// True when every non-'*' entry of pattern equals the runtime sign.
bool matches_sign_pattern(std::string_view signs, std::string_view pattern);

}  // namespace evogame
