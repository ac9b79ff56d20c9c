#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "evogame/error.hpp"
#include "evogame/game.hpp"
#include "test_support.hpp"

using namespace evogame;
using evogame::testing::condition1;
using evogame::testing::random_params;
using evogame::testing::random_state;

namespace {

using J = JapanMove;
using C = CountryMove;
using F = FisheriesMove;

void check_cell(const PayoffCell& c, double japan, double countries, double fisheries) {
  CHECK(c.japan == doctest::Approx(japan).epsilon(1e-15));
  CHECK(c.countries == doctest::Approx(countries).epsilon(1e-15));
  CHECK(c.fisheries == doctest::Approx(fisheries).epsilon(1e-15));
}

// Expected utilities written as the four-term sums over the opponents'
// strategies, straight from the outcome payoffs.
struct ExpandedUtilities {
  double u11, u12, u21, u22, u31, u32;
};

ExpandedUtilities expanded(const ModelParams& p, const StrategyState& s) {
  const double x = s.x, y = s.y, z = s.z;
  const double ij = p.image_loss_japan, lc = p.litigation_countries, trj = p.export_tax_loss;
  const double hj = p.aid_to_japan, lf = p.litigation_fisheries, dj = p.discharge_cost;
  const double mj = p.monitoring_japan, sj = p.storage_cost, cif = p.image_fisheries;
  const double bsp = p.substitute_benefit, sc = p.own_seafood_cost, mc = p.monitoring_countries;
  const double erf = p.fisheries_revenue_loss;
  ExpandedUtilities u;
  u.u11 = y * z * (-ij - lf - lc - trj - dj - mj) + y * (1 - z) * (-ij - lc - trj - dj - mj) +
          (1 - y) * z * (-lf - dj - mj) + (1 - y) * (1 - z) * (-dj - mj);
  u.u12 = y * z * (hj - sj) + y * (1 - z) * (hj - sj) + (1 - y) * z * (-sj) +
          (1 - y) * (1 - z) * (-sj);
  u.u21 = x * z * (-sc + bsp + lc - mc) + x * (1 - z) * (-sc + bsp + lc - mc) +
          (1 - x) * z * (-hj) + (1 - x) * (1 - z) * (-hj);
  u.u22 = x * z * (-mc) + x * (1 - z) * (-mc);
  u.u31 = x * y * (lf - erf) + x * (1 - y) * lf;
  u.u32 = x * y * (-erf - cif) + x * (1 - y) * (-cif) + (1 - x) * y * (-cif) +
          (1 - x) * (1 - y) * (-cif);
  return u;
}

}  // namespace

TEST_CASE("payoff matrix under Condition 1 matches hand substitution") {
  const PayoffMatrix m = build_payoff_matrix(condition1());
  check_cell(m.at(J::kDischarge, C::kSanction, F::kOppose), -77, -21, 35);
  check_cell(m.at(J::kDischarge, C::kSanction, F::kAccept), -42, -21, -1);
  check_cell(m.at(J::kDischarge, C::kNoSanction, F::kOppose), -44, 0, 35);
  check_cell(m.at(J::kDischarge, C::kNoSanction, F::kAccept), -9, 0, -1);
  check_cell(m.at(J::kNoDischarge, C::kSanction, F::kOppose), -20, -10, 0);
  check_cell(m.at(J::kNoDischarge, C::kSanction, F::kAccept), -20, -10, -1);
  check_cell(m.at(J::kNoDischarge, C::kNoSanction, F::kOppose), -30, 0, 0);
  check_cell(m.at(J::kNoDischarge, C::kNoSanction, F::kAccept), -30, 0, -1);
}

TEST_CASE("no-discharge / no-sanction / oppose cell is (-C_SJ, 0, 0)") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const ModelParams p = random_params(rng);
    check_cell(build_payoff_matrix(p).at(J::kNoDischarge, C::kNoSanction, F::kOppose),
               -p.storage_cost, 0, 0);
  }
}

TEST_CASE("all-zero parameters give an all-zero matrix") {
  const PayoffMatrix m = build_payoff_matrix(ModelParams{});
  for (J j : {J::kDischarge, J::kNoDischarge}) {
    for (C c : {C::kSanction, C::kNoSanction}) {
      for (F f : {F::kOppose, F::kAccept}) check_cell(m.at(j, c, f), 0, 0, 0);
    }
  }
}

TEST_CASE("build_payoff_matrix rejects negative and non-finite parameters") {
  ModelParams p = condition1();
  p.storage_cost = -1;
  CHECK_THROWS_AS(build_payoff_matrix(p), ValidationError);
  p = condition1();
  p.image_fisheries = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(build_payoff_matrix(p), ValidationError);
  p = condition1();
  p.aid_to_japan = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(build_payoff_matrix(p), ValidationError);
}

TEST_CASE("utilities at the centre under Condition 1") {
  const StrategyState centre{0.5, 0.5, 0.5};
  const UtilityBundle japan = utilities_japan(condition1(), centre);
  CHECK(japan.u_strat == doctest::Approx(-43));
  CHECK(japan.u_alt == doctest::Approx(-25));
  CHECK(japan.u_avg == doctest::Approx(-34));

  const UtilityBundle countries = utilities_countries(condition1(), centre);
  CHECK(countries.u_strat == doctest::Approx(-15.5));
  CHECK(countries.u_alt == doctest::Approx(0));

  const UtilityBundle fisheries = utilities_fisheries(condition1(), centre);
  CHECK(fisheries.u_strat == doctest::Approx(17.5));
  CHECK(fisheries.u_alt == doctest::Approx(-1));
}

TEST_CASE("utilities: vanishing mixed terms") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    const ModelParams p = random_params(rng);
    std::uniform_real_distribution<double> u(0, 1);

    const UtilityBundle japan = utilities_japan(p, {u(rng), 0, 0});
    CHECK(japan.u_strat == doctest::Approx(-p.discharge_cost - p.monitoring_japan));
    CHECK(japan.u_alt == doctest::Approx(-p.storage_cost));

    const UtilityBundle countries = utilities_countries(p, {0, u(rng), u(rng)});
    CHECK(countries.u_strat == doctest::Approx(-p.aid_to_japan));
    CHECK(countries.u_alt == 0);

    const UtilityBundle fisheries = utilities_fisheries(p, {0, u(rng), u(rng)});
    CHECK(fisheries.u_strat == 0);
    CHECK(fisheries.u_alt == doctest::Approx(-p.image_fisheries));
  }
}

TEST_CASE("utilities: all-zero parameters") {
  const StrategyState s{0.3, 0.6, 0.9};
  for (const UtilityBundle& u : {utilities_japan({}, s), utilities_countries({}, s),
                                 utilities_fisheries({}, s)}) {
    CHECK(u.u_strat == 0);
    CHECK(u.u_alt == 0);
    CHECK(u.u_avg == 0);
  }
}

TEST_CASE("C_MC enters the countries' utilities") {
  ModelParams p = condition1();
  p.monitoring_countries = 7;
  CHECK(utilities_countries(p, {1, 0.2, 0.8}).u_alt == doctest::Approx(-7));
  CHECK(utilities_countries(p, {1, 0.9, 0.1}).u_alt == doctest::Approx(-7));
}

TEST_CASE("closed-form utilities equal the expanded four-term sums") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const ModelParams p = random_params(rng);
    const StrategyState s = random_state(rng);
    const ExpandedUtilities e = expanded(p, s);
    const double tol = 1e-12 * 50 * 6;
    const UtilityBundle j = utilities_japan(p, s), c = utilities_countries(p, s),
                        f = utilities_fisheries(p, s);
    CHECK(std::abs(j.u_strat - e.u11) <= tol);
    CHECK(std::abs(j.u_alt - e.u12) <= tol);
    CHECK(std::abs(c.u_strat - e.u21) <= tol);
    CHECK(std::abs(c.u_alt - e.u22) <= tol);
    CHECK(std::abs(f.u_strat - e.u31) <= tol);
    CHECK(std::abs(f.u_alt - e.u32) <= tol);
    // Average lies between the two strategy utilities.
    for (const UtilityBundle& u : {j, c, f}) {
      CHECK(u.u_avg >= std::min(u.u_strat, u.u_alt) - tol);
      CHECK(u.u_avg <= std::max(u.u_strat, u.u_alt) + tol);
    }
  }
}

TEST_CASE("fisheries advantage is x C_LF + C_IF for every state") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    const ModelParams p = random_params(rng);
    const StrategyState s = random_state(rng);
    const UtilityBundle f = utilities_fisheries(p, s);
    CHECK(f.u_strat - f.u_alt ==
          doctest::Approx(s.x * p.litigation_fisheries + p.image_fisheries).epsilon(1e-12));
  }
}

TEST_CASE("replicator field at the centre under Condition 1") {
  const FieldValue f = replicator_field(condition1(), {0.5, 0.5, 0.5});
  CHECK(f.dx == doctest::Approx(-4.5).epsilon(1e-15));
  CHECK(f.dy == doctest::Approx(-3.875).epsilon(1e-15));
  CHECK(f.dz == doctest::Approx(4.625).epsilon(1e-15));

  const FieldValue g = generic_expected_field(build_payoff_matrix(condition1()), {0.5, 0.5, 0.5});
  CHECK(g.dx == doctest::Approx(-4.5).epsilon(1e-15));
  CHECK(g.dy == doctest::Approx(-3.875).epsilon(1e-15));
  CHECK(g.dz == doctest::Approx(4.625).epsilon(1e-15));
}

TEST_CASE("replicator field equals p(1-p) times the utility advantage") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 200; ++i) {
    const ModelParams p = random_params(rng);
    const StrategyState s = random_state(rng);
    const FieldValue f = replicator_field(p, s);
    const UtilityBundle j = utilities_japan(p, s), c = utilities_countries(p, s),
                        fi = utilities_fisheries(p, s);
    // x (U11 - avg) = x(1-x)(U11 - U12)
    CHECK(f.dx == doctest::Approx(s.x * (j.u_strat - j.u_avg)).epsilon(1e-10));
    CHECK(f.dy == doctest::Approx(s.y * (c.u_strat - c.u_avg)).epsilon(1e-10));
    CHECK(f.dz == doctest::Approx(s.z * (fi.u_strat - fi.u_avg)).epsilon(1e-10));
  }
}

TEST_CASE("generic field: all-zero matrix gives zero field") {
  const FieldValue f = generic_expected_field(PayoffMatrix{}, {0.2, 0.4, 0.6});
  CHECK(f.dx == 0);
  CHECK(f.dy == 0);
  CHECK(f.dz == 0);
}

TEST_CASE("property: generic oracle matches the closed form") {
  std::mt19937_64 rng(16);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p = random_params(rng);
    const StrategyState s = random_state(rng);
    const FieldValue a = replicator_field(p, s);
    const FieldValue b = generic_expected_field(build_payoff_matrix(p), s);
    const double scale = std::max(1.0, param_scale(p));
    worst = std::max({worst, std::abs(a.dx - b.dx) / scale, std::abs(a.dy - b.dy) / scale,
                      std::abs(a.dz - b.dz) / scale});
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("property: vertices are fixed points and faces are invariant") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const ModelParams p = random_params(rng);
    for (int v = 0; v < 8; ++v) {
      const FieldValue f = replicator_field(p, {double(v & 1), double((v >> 1) & 1), double(v >> 2)});
      CHECK(f.dx == 0);
      CHECK(f.dy == 0);
      CHECK(f.dz == 0);
    }
    StrategyState s = random_state(rng);
    for (double face : {0.0, 1.0}) {
      CHECK(replicator_field(p, {face, s.y, s.z}).dx == 0);
      CHECK(replicator_field(p, {s.x, face, s.z}).dy == 0);
      CHECK(replicator_field(p, {s.x, s.y, face}).dz == 0);
    }
    CHECK(replicator_field(p, {0, s.y, s.z}).dx == 0);
  }
}

TEST_CASE("property: opposition never decreases") {
  std::mt19937_64 rng(18);
  for (int i = 0; i < 1000; ++i) {
    CHECK(replicator_field(random_params(rng), random_state(rng)).dz >= 0);
  }
}

TEST_CASE("property: C_MC and E_RF cancel from the field") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0, 100);
  for (int i = 0; i < 200; ++i) {
    ModelParams p = random_params(rng);
    const StrategyState s = random_state(rng);
    const FieldValue a = replicator_field(p, s);
    p.monitoring_countries = u(rng);
    p.fisheries_revenue_loss = u(rng);
    const FieldValue b = replicator_field(p, s);
    CHECK(a.dx == b.dx);
    CHECK(a.dy == b.dy);
    CHECK(a.dz == b.dz);
    // The payoff-matrix route sees them and must still cancel them.
    const FieldValue g = generic_expected_field(build_payoff_matrix(p), s);
    CHECK(std::abs(g.dx - a.dx) <= 1e-12 * 100);
    CHECK(std::abs(g.dy - a.dy) <= 1e-12 * 100);
    CHECK(std::abs(g.dz - a.dz) <= 1e-12 * 100);
  }
}

TEST_CASE("property: positive scaling scales the field") {
  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> u(0.1, 10);
  for (int i = 0; i < 200; ++i) {
    const ModelParams p = random_params(rng);
    const StrategyState s = random_state(rng);
    const double c = u(rng);
    ModelParams q = p;
    for (ParamId id : kAllParams) set_param(q, id, c * get_param(p, id));
    const FieldValue a = replicator_field(p, s);
    const FieldValue b = replicator_field(q, s);
    const double tol = 1e-12 * c * 50;
    CHECK(std::abs(b.dx - c * a.dx) <= tol);
    CHECK(std::abs(b.dy - c * a.dy) <= tol);
    CHECK(std::abs(b.dz - c * a.dz) <= tol);
    CHECK(std::signbit(a.dx) == std::signbit(b.dx));
    CHECK(std::signbit(a.dy) == std::signbit(b.dy));
  }
}
