#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "evogame/error.hpp"
#include "evogame/experiments.hpp"
#include "test_support.hpp"

using namespace evogame;
using evogame::testing::condition1;
using evogame::testing::table5;

namespace {

ModelParams row(double ij, double clc, double trj, double chj, double clf, double cdj, double cmj,
                double csj, double cif, double bsp, double csc) {
  ModelParams p;
  p.image_loss_japan = ij;
  p.litigation_countries = clc;
  p.export_tax_loss = trj;
  p.aid_to_japan = chj;
  p.litigation_fisheries = clf;
  p.discharge_cost = cdj;
  p.monitoring_japan = cmj;
  p.storage_cost = csj;
  p.image_fisheries = cif;
  p.substitute_benefit = bsp;
  p.own_seafood_cost = csc;
  return p;
}

SweepSpec param_spec(ParamId id, std::vector<double> values) {
  return SweepSpec{preset(ScenarioName::kTable5), ParamSweep{id, std::move(values)}, {}};
}

}  // namespace

TEST_CASE("scenario presets") {
  CHECK(preset(ScenarioName::kCondition1).params == row(20, 8, 5, 10, 35, 3, 6, 30, 1, 1, 30));
  CHECK(preset(ScenarioName::kCondition2).params == row(20, 8, 5, 10, 20, 3, 6, 30, 1, 1, 30));
  CHECK(preset(ScenarioName::kCondition3).params == row(20, 10, 5, 10, 5, 3, 6, 80, 1, 1, 10));
  CHECK(preset(ScenarioName::kTable5).params == row(20, 8, 5, 10, 30, 3, 6, 30, 1, 1, 30));
  for (ScenarioName n : {ScenarioName::kCondition1, ScenarioName::kCondition2,
                         ScenarioName::kCondition3, ScenarioName::kTable5}) {
    CHECK(preset(n).initial == StrategyState{0.5, 0.5, 0.5});
    CHECK(scenario_from_name(scenario_name(n)) == n);
    CHECK(preset(scenario_name(n)).params == preset(n).params);
  }
  CHECK_FALSE(scenario_from_name("Nope"));
  CHECK_THROWS_AS(preset("Nope"), UsageError);
}

TEST_CASE("empty and invalid sweeps are rejected") {
  CHECK_THROWS_AS(run_sweep(param_spec(ParamId::kDischargeCost, {})), ValidationError);
  CHECK_THROWS_AS(run_sweep(SweepSpec{preset(ScenarioName::kTable5), InitialSweep{}, {}}),
                  ValidationError);
  CHECK_THROWS_AS(run_sweep(param_spec(ParamId::kDischargeCost, {1, -2})), ValidationError);
}

TEST_CASE("sweep entries keep input order and match direct integration") {
  const SweepResult r = run_sweep(param_spec(ParamId::kDischargeCost, {4, 1, 6}));
  REQUIRE(r.entries.size() == 3);
  CHECK(r.failures.empty());
  CHECK(r.entries[0].label == "C_DJ=4");
  CHECK(r.entries[1].params.discharge_cost == 1);
  CHECK(sweep_value(r, 2, Coordinate::kX) == 6);

  ModelParams p = table5();
  p.discharge_cost = 1;
  const Trajectory direct = integrate(p, {0.5, 0.5, 0.5});
  CHECK(r.entries[1].trajectory.final_state() == direct.final_state());
  CHECK(r.entries[1].settle_time[0] == time_to_threshold(direct, Coordinate::kX, 0, 0.01));
  CHECK(r.entries[1].settle_time[2] == time_to_threshold(direct, Coordinate::kZ, 1, 0.01));
}

TEST_CASE("initial-state sweep converges to gamma4") {
  const NamedSweep s = *named_sweep("initial");
  const SweepResult r = run_sweep(s.spec);
  REQUIRE(r.entries.size() == 4);
  CHECK(r.failures.empty());
  for (const SweepEntry& e : r.entries) {
    REQUIRE(e.convergence.converged);
    CHECK(e.convergence.limit->number == 4);
  }
  CHECK(r.entries[1].initial == StrategyState{0.8, 0.1, 0.1});
  CHECK(sweep_value(r, 1, Coordinate::kX) == 0.8);
  CHECK(sweep_value(r, 2, Coordinate::kY) == 0.7);
}

TEST_CASE("forced orderings of the Japan settle time") {
  struct Case {
    const char* name;
    bool increasing;
  };
  for (const Case& c : {Case{"C_DJ", false}, Case{"C_SJ", true}, Case{"C_LF", false}}) {
    CAPTURE(c.name);
    const NamedSweep s = *named_sweep(c.name);
    CHECK(s.x_trend_forced);
    const SweepResult r = run_sweep(s.spec);
    CHECK(r.failures.empty());
    const SpeedOrdering o = speed_ordering(r, Coordinate::kX, 0);
    CHECK(o.points.size() == r.entries.size());
    CHECK(std::is_sorted(o.points.begin(), o.points.end(),
                         [](const SpeedPoint& a, const SpeedPoint& b) { return a.value < b.value; }));
    CHECK(o.strictly_increasing == c.increasing);
    CHECK(o.strictly_decreasing == !c.increasing);
    CHECK(observed_trend(o) == (c.increasing ? Trend::kIncreasing : Trend::kDecreasing));
  }
}

TEST_CASE("every named sweep reaches gamma4 and yields a report") {
  const auto sweeps = named_sweeps();
  REQUIRE(sweeps.size() == 6);
  for (const NamedSweep& s : sweeps) {
    CAPTURE(s.name);
    const SweepResult r = run_sweep(s.spec);
    CHECK(r.failures.empty());
    const SweepReport rep = compare_with_expected(s, r);
    REQUIRE(rep.common_limit);
    CHECK(rep.common_limit->number == 4);
    CHECK(rep.trends[0].target == 0);
    CHECK(rep.trends[1].target == 0);
    CHECK(rep.trends[2].target == 1);
    if (s.x_trend_forced) CHECK(rep.trends[0].agrees());
  }
}

TEST_CASE("observed_trend classification") {
  auto ordering = [](std::vector<double> times) {
    SpeedOrdering o;
    for (std::size_t i = 0; i < times.size(); ++i) {
      o.points.push_back({static_cast<double>(i), times[i]});
    }
    return o;
  };
  CHECK(observed_trend(ordering({1, 2, 3})) == Trend::kIncreasing);
  CHECK(observed_trend(ordering({3, 2, 1})) == Trend::kDecreasing);
  CHECK(observed_trend(ordering({1.00, 1.02, 0.99})) == Trend::kFlat);
  CHECK(observed_trend(ordering({1, 3, 2})) == Trend::kMixed);
  CHECK(observed_trend(ordering({5})) == Trend::kFlat);
  CHECK(trend_name(Trend::kDecreasing) == "decreasing");
}

TEST_CASE("non-converged variant is recorded as a failure") {
  SweepSpec spec = param_spec(ParamId::kDischargeCost, {3});
  spec.config.t_max = 0.1;
  const SweepResult r = run_sweep(spec);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].index == 0);
  CHECK(r.failures[0].label == "C_DJ=3");
  CHECK_FALSE(r.entries[0].convergence.converged);
  CHECK_THROWS_AS(speed_ordering(r, Coordinate::kX, 0), ValidationError);
  CHECK_THROWS_AS(compare_with_expected(*named_sweep("C_DJ"), r), ValidationError);
}

TEST_CASE("named_sweep lookup") {
  CHECK(named_sweep("C_HJ")->spec.base.params == table5());
  CHECK_FALSE(named_sweep("C_XX"));
  CHECK(condition1() != table5());
}
