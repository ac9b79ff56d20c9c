#include "evogame/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "evogame/error.hpp"
#include "evogame/io.hpp"

namespace evogame {

std::string_view scenario_name(ScenarioName name) {
  switch (name) {
    case ScenarioName::kCondition1: return "Condition1";
    case ScenarioName::kCondition2: return "Condition2";
    case ScenarioName::kCondition3: return "Condition3";
    case ScenarioName::kTable5: return "Table5";
  }
  return "Condition1";
}

std::optional<ScenarioName> scenario_from_name(std::string_view name) {
  for (auto n : {ScenarioName::kCondition1, ScenarioName::kCondition2, ScenarioName::kCondition3,
                 ScenarioName::kTable5}) {
    if (scenario_name(n) == name) return n;
  }
  return std::nullopt;
}

namespace {

ModelParams table_row(double image_loss_japan, double litigation_countries,
                      double export_tax_loss, double aid_to_japan, double litigation_fisheries,
                      double discharge_cost, double monitoring_japan, double storage_cost,
                      double image_fisheries, double substitute_benefit, double own_seafood_cost) {
  ModelParams p;
  p.image_loss_japan = image_loss_japan;
  p.litigation_countries = litigation_countries;
  p.export_tax_loss = export_tax_loss;
  p.aid_to_japan = aid_to_japan;
  p.litigation_fisheries = litigation_fisheries;
  p.discharge_cost = discharge_cost;
  p.monitoring_japan = monitoring_japan;
  p.storage_cost = storage_cost;
  p.image_fisheries = image_fisheries;
  p.substitute_benefit = substitute_benefit;
  p.own_seafood_cost = own_seafood_cost;
  return p;
}

}  // namespace

ScenarioPreset preset(ScenarioName name) {
  ScenarioPreset s;
  s.name = name;
  //                                 I_J C_LC T_RJ C_HJ C_LF C_DJ C_MJ C_SJ C_IF B_SP C_SC
  switch (name) {
    case ScenarioName::kCondition1: s.params = table_row(20, 8, 5, 10, 35, 3, 6, 30, 1, 1, 30); break;
    case ScenarioName::kCondition2: s.params = table_row(20, 8, 5, 10, 20, 3, 6, 30, 1, 1, 30); break;
    case ScenarioName::kCondition3: s.params = table_row(20, 10, 5, 10, 5, 3, 6, 80, 1, 1, 10); break;
    case ScenarioName::kTable5: s.params = table_row(20, 8, 5, 10, 30, 3, 6, 30, 1, 1, 30); break;
  }
  return s;
}

ScenarioPreset preset(std::string_view name) {
  const auto n = scenario_from_name(name);
  if (!n) {
    throw UsageError("unknown preset '" + std::string(name) +
                     "' (expected Condition1, Condition2, Condition3 or Table5)");
  }
  return preset(*n);
}

namespace {

std::string state_label(const StrategyState& s) {
  return "(" + format_number(s.x) + "," + format_number(s.y) + "," + format_number(s.z) + ")";
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  struct Variant {
    std::string label;
    ModelParams params;
    StrategyState initial;
  };
  std::vector<Variant> variants;
  if (const auto* ps = std::get_if<ParamSweep>(&spec.variable)) {
    for (double v : ps->values) {
      ModelParams p = spec.base.params;
      set_param(p, ps->param, v);
      variants.push_back({std::string(param_key(ps->param)) + "=" + format_number(v), p,
                          spec.base.initial});
    }
  } else {
    for (const StrategyState& s : std::get<InitialSweep>(spec.variable).states) {
      variants.push_back({"initial=" + state_label(s), spec.base.params, s});
    }
  }
  if (variants.empty()) throw ValidationError("sweep has no values");
  for (const Variant& v : variants) {
    validate(v.params);
    validate(v.initial);
  }

  SweepResult result;
  result.variable = spec.variable;
  for (std::size_t i = 0; i < variants.size(); ++i) {
    SweepEntry e;
    e.label = variants[i].label;
    e.params = variants[i].params;
    e.initial = variants[i].initial;
    e.trajectory = integrate(e.params, e.initial, spec.config);
    e.convergence = detect_convergence(e.trajectory);
    if (e.convergence.converged) {
      const StrategyState& limit = e.convergence.limit->coords;
      for (Coordinate c : {Coordinate::kX, Coordinate::kY, Coordinate::kZ}) {
        e.settle_time[static_cast<std::size_t>(c)] =
            time_to_threshold(e.trajectory, c, coordinate(limit, c), spec.config.threshold);
      }
    } else {
      result.failures.push_back({i, e.label, "did not converge to a vertex by t_max"});
    }
    result.entries.push_back(std::move(e));
  }
  return result;
}

double sweep_value(const SweepResult& result, std::size_t i, Coordinate c) {
  if (const auto* ps = std::get_if<ParamSweep>(&result.variable)) return ps->values.at(i);
  return coordinate(std::get<InitialSweep>(result.variable).states.at(i), c);
}

SpeedOrdering speed_ordering(const SweepResult& result, Coordinate c, double target) {
  SpeedOrdering out;
  out.coordinate = c;
  out.target = target;
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    const SweepEntry& e = result.entries[i];
    if (!e.convergence.converged) {
      throw ValidationError("variant " + e.label + " did not converge");
    }
    const auto t = time_to_threshold(e.trajectory, c, target, e.trajectory.config.threshold);
    if (!t) {
      throw ValidationError("variant " + e.label + ": " + std::string(coordinate_name(c)) +
                            " never settles near " + format_number(target));
    }
    out.points.push_back({sweep_value(result, i, c), *t});
  }
  std::stable_sort(out.points.begin(), out.points.end(),
                   [](const SpeedPoint& a, const SpeedPoint& b) { return a.value < b.value; });
  out.strictly_increasing = out.strictly_decreasing = out.points.size() > 1;
  for (std::size_t i = 1; i < out.points.size(); ++i) {
    const auto& prev = out.points[i - 1];
    const auto& cur = out.points[i];
    if (!(cur.value > prev.value && cur.time > prev.time)) out.strictly_increasing = false;
    if (!(cur.value > prev.value && cur.time < prev.time)) out.strictly_decreasing = false;
  }
  return out;
}

std::string_view trend_name(Trend t) {
  switch (t) {
    case Trend::kIncreasing: return "increasing";
    case Trend::kDecreasing: return "decreasing";
    case Trend::kFlat: return "flat";
    case Trend::kMixed: return "mixed";
  }
  return "mixed";
}

Trend observed_trend(const SpeedOrdering& ordering) {
  if (ordering.points.empty()) return Trend::kMixed;
  const auto [lo, hi] = std::minmax_element(
      ordering.points.begin(), ordering.points.end(),
      [](const SpeedPoint& a, const SpeedPoint& b) { return a.time < b.time; });
  const double mean =
      std::accumulate(ordering.points.begin(), ordering.points.end(), 0.0,
                      [](double acc, const SpeedPoint& p) { return acc + p.time; }) /
      static_cast<double>(ordering.points.size());
  if (hi->time - lo->time <= kFlatSpread * mean) return Trend::kFlat;
  if (ordering.strictly_increasing) return Trend::kIncreasing;
  if (ordering.strictly_decreasing) return Trend::kDecreasing;

  // Ties in the swept value (initial-state sweeps) compare by mean time per value.
  std::vector<SpeedPoint> grouped;
  for (const SpeedPoint& p : ordering.points) {
    if (!grouped.empty() && grouped.back().value == p.value) continue;
    double sum = 0;
    int count = 0;
    for (const SpeedPoint& q : ordering.points) {
      if (q.value == p.value) {
        sum += q.time;
        ++count;
      }
    }
    grouped.push_back({p.value, sum / count});
  }
  if (grouped.size() < 2) return Trend::kMixed;
  bool inc = true, dec = true;
  for (std::size_t i = 1; i < grouped.size(); ++i) {
    inc = inc && grouped[i].time > grouped[i - 1].time;
    dec = dec && grouped[i].time < grouped[i - 1].time;
  }
  return inc ? Trend::kIncreasing : dec ? Trend::kDecreasing : Trend::kMixed;
}

std::vector<NamedSweep> named_sweeps(const IntegratorConfig& config) {
  const ScenarioPreset base = preset(ScenarioName::kTable5);
  auto param_sweep = [&](ParamId id, std::vector<double> values, std::array<Trend, 3> expected,
                         bool forced) {
    return NamedSweep{std::string(param_key(id)),
                      SweepSpec{base, ParamSweep{id, std::move(values)}, config}, expected,
                      forced};
  };
  using T = Trend;
  return {
      param_sweep(ParamId::kDischargeCost, {1, 2, 3, 4, 5, 6},
                  {T::kDecreasing, T::kFlat, T::kIncreasing}, true),
      param_sweep(ParamId::kStorageCost, {25, 27, 29, 31, 33, 35},
                  {T::kIncreasing, T::kFlat, T::kDecreasing}, true),
      param_sweep(ParamId::kLitigationCountries, {1, 5, 15, 20, 25, 30},
                  {T::kIncreasing, T::kIncreasing, T::kIncreasing}, false),
      param_sweep(ParamId::kLitigationFisheries, {30, 32, 34, 36, 38, 40},
                  {T::kDecreasing, T::kFlat, T::kIncreasing}, true),
      param_sweep(ParamId::kAidToJapan, {5, 9, 13, 17},
                  {T::kIncreasing, T::kDecreasing, T::kDecreasing}, false),
      NamedSweep{"initial",
                 SweepSpec{base,
                           InitialSweep{{{0.5, 0.5, 0.5}, {0.8, 0.1, 0.1}, {0.2, 0.7, 0.1},
                                         {0.7, 0.2, 0.1}}},
                           config},
                 {T::kIncreasing, T::kIncreasing, T::kIncreasing}, false},
  };
}

std::optional<NamedSweep> named_sweep(std::string_view name, const IntegratorConfig& config) {
  for (auto& s : named_sweeps(config)) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

SweepReport compare_with_expected(const NamedSweep& sweep, const SweepResult& result) {
  SweepReport report;
  report.name = sweep.name;
  for (const SweepEntry& e : result.entries) {
    if (!e.convergence.converged) {
      throw ValidationError("variant " + e.label + " did not converge");
    }
    if (!report.common_limit) {
      report.common_limit = e.convergence.limit;
    } else if (report.common_limit->number != e.convergence.limit->number) {
      report.common_limit.reset();
      break;
    }
  }
  if (!report.common_limit) throw ValidationError("sweep variants reach different vertices");

  for (Coordinate c : {Coordinate::kX, Coordinate::kY, Coordinate::kZ}) {
    const auto idx = static_cast<std::size_t>(c);
    TrendComparison& t = report.trends[idx];
    t.coordinate = c;
    t.target = coordinate(report.common_limit->coords, c);
    const SpeedOrdering ordering = speed_ordering(result, c, t.target);
    t.expected = sweep.expected[idx];
    t.observed = observed_trend(ordering);
    t.points = ordering.points;
  }
  return report;
}

}  // namespace evogame
