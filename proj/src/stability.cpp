#include "evogame/stability.hpp"

#include <algorithm>
#include <cmath>

#include "evogame/error.hpp"
#include "evogame/game.hpp"

namespace evogame {

namespace {

// Bracket of dx/dt, i.e. the discharge payoff advantage.
double japan_gain(const ModelParams& p, double y, double z) {
  return y * (-p.image_loss_japan - p.litigation_countries - p.export_tax_loss - p.aid_to_japan) -
         z * p.litigation_fisheries - p.discharge_cost - p.monitoring_japan + p.storage_cost;
}

// Coefficient of x in the dy/dt bracket.
double countries_slope(const ModelParams& p) {
  return p.aid_to_japan - p.own_seafood_cost + p.substitute_benefit + p.litigation_countries;
}

// Coefficient of y in the dx/dt bracket, negated.
double japan_sanction_loss(const ModelParams& p) {
  return p.image_loss_japan + p.litigation_countries + p.export_tax_loss + p.aid_to_japan;
}

}  // namespace

std::string EquilibriumPoint::label() const { return "gamma" + std::to_string(number); }

char sign_symbol(Sign s) {
  switch (s) {
    case Sign::kNegative: return '-';
    case Sign::kZero: return '0';
    case Sign::kPositive: return '+';
  }
  return '0';
}

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::kESS: return "ESS";
    case Classification::kUnstable: return "Unstable";
    case Classification::kSaddle: return "NonESS-Saddle";
    case Classification::kIndeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

ConditionCheck check_conditions(const ModelParams& p) {
  const double discharge_total = p.litigation_fisheries + p.monitoring_japan + p.discharge_cost;
  const double sanctioned_total = p.discharge_cost + p.aid_to_japan + p.litigation_countries +
                                  p.litigation_fisheries + p.monitoring_japan +
                                  p.image_loss_japan + p.export_tax_loss;
  const double sanction_gain = p.substitute_benefit + p.litigation_countries;
  ConditionCheck c;
  c.condition1 = p.storage_cost < discharge_total;
  c.condition2 = p.storage_cost > discharge_total && sanction_gain < p.own_seafood_cost;
  c.condition3 = p.storage_cost > sanctioned_total && p.own_seafood_cost < sanction_gain;
  return c;
}

JacobianMatrix analytic_jacobian(const ModelParams& p, const StrategyState& s) {
  const double k = countries_slope(p);
  JacobianMatrix j;
  j(0, 0) = (1 - 2 * s.x) * japan_gain(p, s.y, s.z);
  j(0, 1) = s.x * (1 - s.x) * -japan_sanction_loss(p);
  j(0, 2) = s.x * (1 - s.x) * -p.litigation_fisheries;
  j(1, 0) = s.y * (1 - s.y) * k;
  j(1, 1) = (1 - 2 * s.y) * (s.x * k - p.aid_to_japan);
  j(1, 2) = 0;
  j(2, 0) = s.z * (1 - s.z) * p.litigation_fisheries;
  j(2, 1) = 0;
  j(2, 2) = (1 - 2 * s.z) * (s.x * p.litigation_fisheries + p.image_fisheries);
  return j;
}

JacobianMatrix finite_difference_jacobian(const ModelParams& params, const StrategyState& state,
                                          double h) {
  if (!(h > 0)) throw ValidationError("finite-difference step must be positive");

  auto field_at = [&](const StrategyState& s) {
    const FieldValue f = replicator_field(params, s);
    return std::array<double, 3>{f.dx, f.dy, f.dz};
  };
  auto shifted = [&](int axis, double delta) {
    StrategyState s = state;
    double* coords[] = {&s.x, &s.y, &s.z};
    *coords[axis] += delta;
    return field_at(s);
  };

  JacobianMatrix j;
  const double coords[] = {state.x, state.y, state.z};
  for (int col = 0; col < 3; ++col) {
    std::array<double, 3> deriv{};
    if (coords[col] - h < 0) {
      const auto f0 = field_at(state), f1 = shifted(col, h), f2 = shifted(col, 2 * h);
      for (int r = 0; r < 3; ++r) deriv[r] = (-3 * f0[r] + 4 * f1[r] - f2[r]) / (2 * h);
    } else if (coords[col] + h > 1) {
      const auto f0 = field_at(state), f1 = shifted(col, -h), f2 = shifted(col, -2 * h);
      for (int r = 0; r < 3; ++r) deriv[r] = (3 * f0[r] - 4 * f1[r] + f2[r]) / (2 * h);
    } else {
      const auto fp = shifted(col, h), fm = shifted(col, -h);
      for (int r = 0; r < 3; ++r) deriv[r] = (fp[r] - fm[r]) / (2 * h);
    }
    for (int r = 0; r < 3; ++r) j(r, col) = deriv[r];
  }
  return j;
}

EquilibriumPoint vertex_point(int x, int y, int z) {
  static constexpr int kOrder[8][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                       {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  for (int i = 0; i < 8; ++i) {
    if (kOrder[i][0] == x && kOrder[i][1] == y && kOrder[i][2] == z) {
      return {i + 1,
              StrategyState{static_cast<double>(x), static_cast<double>(y), static_cast<double>(z)},
              EquilibriumKind::kPure};
    }
  }
  throw ValidationError("vertex coordinates must be 0 or 1");
}

std::vector<EquilibriumPoint> pure_equilibria() {
  return {vertex_point(0, 0, 0), vertex_point(1, 0, 0), vertex_point(0, 1, 0),
          vertex_point(0, 0, 1), vertex_point(1, 1, 0), vertex_point(1, 0, 1),
          vertex_point(0, 1, 1), vertex_point(1, 1, 1)};
}

std::string_view interior_status_name(InteriorStatus s) {
  switch (s) {
    case InteriorStatus::kFeasible: return "feasible";
    case InteriorStatus::kInfeasible: return "infeasible";
    case InteriorStatus::kDegenerate: return "degenerate";
  }
  return "infeasible";
}

InteriorResult interior_equilibrium(const ModelParams& p) {
  InteriorResult result;
  if (p.litigation_fisheries == 0) {
    result.status = InteriorStatus::kDegenerate;
    result.reason = "C_LF = 0";
    return result;
  }
  const double x = -p.image_fisheries / p.litigation_fisheries;
  result.x_candidate = x;
  if (!(x > 0 && x < 1)) {
    result.status = InteriorStatus::kInfeasible;
    result.reason = "x* = -C_IF/C_LF lies outside (0,1)";
    return result;
  }

  const double k = countries_slope(p);
  const double loss = japan_sanction_loss(p);
  if (k == 0 || loss == 0) {
    result.status = InteriorStatus::kDegenerate;
    result.reason = k == 0 ? "C_HJ - C_SC + B_SP + C_LC = 0" : "I_J + C_LC + T_RJ + C_HJ = 0";
    return result;
  }
  const double tol = 1e-12 * std::max(1.0, param_scale(p));
  if (std::abs(x * k - p.aid_to_japan) > tol) {
    result.status = InteriorStatus::kInfeasible;
    result.reason = "x* from the fisheries condition violates the countries condition";
    return result;
  }

  // y(z) = (C_SJ - C_DJ - C_MJ - z C_LF) / loss; collect z in (0,1) with y in (0,1).
  const double y_at_0 = (p.storage_cost - p.discharge_cost - p.monitoring_japan) / loss;
  const double y_slope = -p.litigation_fisheries / loss;
  // y_at_0 + z * y_slope in (0,1), y_slope < 0
  const double z_lo = std::max(0.0, (y_at_0 - 1) / -y_slope);
  const double z_hi = std::min(1.0, y_at_0 / -y_slope);
  if (!(z_lo < z_hi)) {
    result.status = InteriorStatus::kInfeasible;
    result.reason = "no point of the (y, z) segment lies inside the cube";
    return result;
  }
  const double z = (z_lo + z_hi) / 2;
  result.status = InteriorStatus::kFeasible;
  result.point = EquilibriumPoint{9, StrategyState{x, y_at_0 + z * y_slope, z},
                                  EquilibriumKind::kInterior};
  return result;
}

std::array<double, 3> vertex_eigenvalues(const ModelParams& p, const EquilibriumPoint& point) {
  if (point.kind != EquilibriumKind::kPure) {
    throw ValidationError("vertex eigenvalues requested for a non-vertex point");
  }
  const double sj = p.storage_cost, mj = p.monitoring_japan, dj = p.discharge_cost;
  const double hj = p.aid_to_japan, lc = p.litigation_countries, lf = p.litigation_fisheries;
  const double ij = p.image_loss_japan, trj = p.export_tax_loss, cif = p.image_fisheries;
  const double bsp = p.substitute_benefit, sc = p.own_seafood_cost;
  switch (point.number) {
    case 1: return {sj - mj - dj, -hj, cif};
    case 2: return {dj + mj - sj, bsp + lc - sc, lf + cif};
    case 3: return {sj - hj - lc - mj - dj - ij - trj, hj, cif};
    case 4: return {sj - lf - mj - dj, -hj, -cif};
    case 5: return {dj + hj + lc + mj - sj + ij + trj, sc - lc - bsp, lf + cif};
    case 6: return {dj + lf + mj - sj, bsp + lc - sc, -cif - lf};
    case 7: return {sj - hj - lc - lf - mj - dj - ij - trj, hj, -cif};
    case 8: return {dj + hj + lc + lf + mj - sj + ij + trj, sc - lc - bsp, -cif - lf};
    default: break;
  }
  throw ValidationError("unknown vertex label " + point.label());
}

Sign sign_of(double value, double tol) {
  if (value < -tol) return Sign::kNegative;
  if (value > tol) return Sign::kPositive;
  return Sign::kZero;
}

Classification classify(const EigenTriple& eigs, double tol) {
  int negative = 0, positive = 0;
  for (const Complex& e : eigs) {
    switch (sign_of(e.real(), tol)) {
      case Sign::kZero: return Classification::kIndeterminate;
      case Sign::kNegative: ++negative; break;
      case Sign::kPositive: ++positive; break;
    }
  }
  if (negative == 3) return Classification::kESS;
  if (positive == 3) return Classification::kUnstable;
  return Classification::kSaddle;
}

double default_sign_tolerance(const ModelParams& p) {
  return 1e-9 * std::max(1.0, param_scale(p));
}

std::string EquilibriumReport::sign_string() const {
  std::string s;
  for (Sign v : signs) s.push_back(sign_symbol(v));
  return s;
}

std::vector<EquilibriumPoint> StabilityReport::ess_points() const {
  std::vector<EquilibriumPoint> out;
  for (const auto& r : vertices) {
    if (r.classification == Classification::kESS) out.push_back(r.point);
  }
  if (interior_report && interior_report->classification == Classification::kESS) {
    out.push_back(interior_report->point);
  }
  return out;
}

namespace {

EquilibriumReport make_report(const EquilibriumPoint& point, const EigenTriple& eigs, double tol) {
  EquilibriumReport r;
  r.point = point;
  r.eigenvalues = eigs;
  for (int i = 0; i < 3; ++i) r.signs[i] = sign_of(eigs[i].real(), tol);
  r.classification = classify(eigs, tol);
  return r;
}

}  // namespace

StabilityReport stability_report(const ModelParams& params, double sign_tolerance) {
  validate(params);
  StabilityReport report;
  report.params = params;
  report.sign_tolerance = sign_tolerance > 0 ? sign_tolerance : default_sign_tolerance(params);
  report.conditions = check_conditions(params);

  for (const EquilibriumPoint& v : pure_equilibria()) {
    const auto ev = vertex_eigenvalues(params, v);
    report.vertices.push_back(make_report(
        v, EigenTriple{Complex(ev[0], 0), Complex(ev[1], 0), Complex(ev[2], 0)},
        report.sign_tolerance));
  }

  report.interior = interior_equilibrium(params);
  if (report.interior.point) {
    const auto eigs = general_eigenvalues(analytic_jacobian(params, report.interior.point->coords));
    report.interior_report = make_report(*report.interior.point, eigs, report.sign_tolerance);
  }
  return report;
}

std::string documented_sign_pattern(int number, const ConditionCheck& c) {
  switch (number) {
    case 1: return "*-+";
    case 2: return "**+";
    case 3: return "*++";
    case 4: return c.condition1 ? "---" : "*--";
    case 5: return "**+";
    case 6: return c.condition2 ? "---" : "**-";
    case 7: return "*+-";
    case 8: return c.condition3 ? "---" : "**-";
    default: break;
  }
  throw ValidationError("no documented sign pattern for gamma" + std::to_string(number));
}

bool matches_sign_pattern(std::string_view signs, std::string_view pattern) {
  if (signs.size() != pattern.size()) return false;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (pattern[i] != '*' && pattern[i] != signs[i]) return false;
  }
  return true;
}

}  // namespace evogame
