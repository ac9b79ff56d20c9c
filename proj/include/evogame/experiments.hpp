#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "evogame/dynamics.hpp"
#include "evogame/params.hpp"

namespace evogame {

enum class ScenarioName { kCondition1, kCondition2, kCondition3, kTable5 };

std::string_view scenario_name(ScenarioName name);
std::optional<ScenarioName> scenario_from_name(std::string_view name);

struct ScenarioPreset {
  ScenarioName name = ScenarioName::kCondition1;
  ModelParams params;
  StrategyState initial{0.5, 0.5, 0.5};
};

// Throws UsageError for an unknown name.
ScenarioPreset preset(ScenarioName name);
ScenarioPreset preset(std::string_view name);

struct ParamSweep {
  ParamId param = ParamId::kDischargeCost;
  std::vector<double> values;
};

struct InitialSweep {
  std::vector<StrategyState> states;
};

struct SweepSpec {
  ScenarioPreset base;
  std::variant<ParamSweep, InitialSweep> variable;
  IntegratorConfig config;
};

struct SweepEntry {
  std::string label;  // "C_DJ=3" or "initial=(0.5,0.5,0.5)"
  ModelParams params;
  StrategyState initial;
  Trajectory trajectory;
  ConvergenceResult convergence;
  // Per coordinate x, y, z: time to settle within the threshold band of the
  // limit vertex. Absent when the variant did not converge or never settled.
  std::array<std::optional<double>, 3> settle_time;
};

struct SweepFailure {
  std::size_t index = 0;
  std::string label;
  std::string reason;
};

struct SweepResult {
  std::variant<ParamSweep, InitialSweep> variable;
  std::vector<SweepEntry> entries;  // input order
  std::vector<SweepFailure> failures;
};

// Runs every variant. Variants that fail to converge are kept in entries and
// also listed in failures; integration errors propagate. Throws
// ValidationError for an empty value list or invalid variant parameters.
SweepResult run_sweep(const SweepSpec& spec);

// Value the sweep varied for entry i. For initial-state sweeps this is the
// initial value of the given coordinate.
double sweep_value(const SweepResult& result, std::size_t i, Coordinate coordinate);

struct SpeedPoint {
  double value = 0;
  double time = 0;
};

struct SpeedOrdering {
  Coordinate coordinate = Coordinate::kX;
  double target = 0;
  std::vector<SpeedPoint> points;  // sorted by value
  bool strictly_increasing = false;
  bool strictly_decreasing = false;
};

// Settle times of one coordinate towards target (0 or 1) for every variant,
// sorted by the swept value. Throws ValidationError naming the first variant
// that did not converge or never settles.
SpeedOrdering speed_ordering(const SweepResult& result, Coordinate coordinate, double target);

// How the settle time moves as the swept value grows.
enum class Trend { kIncreasing, kDecreasing, kFlat, kMixed };
std::string_view trend_name(Trend t);

// Relative spread below which a series of settle times counts as flat.
inline constexpr double kFlatSpread = 0.10;

Trend observed_trend(const SpeedOrdering& ordering);

// A sensitivity sweep on the Table5 preset, together with the expected
// qualitative trend of each player's settle time.
struct NamedSweep {
  std::string name;  // "C_DJ", ..., "initial"
  SweepSpec spec;
  // Expected trend of settle time for x -> 0, y -> 0, z -> 1.
  std::array<Trend, 3> expected;
  // Whether the x trend follows directly from the sign with which the
  // parameter enters the x bracket.
  bool x_trend_forced = false;
};

std::vector<NamedSweep> named_sweeps(const IntegratorConfig& config = {});
std::optional<NamedSweep> named_sweep(std::string_view name, const IntegratorConfig& config = {});

struct TrendComparison {
  Coordinate coordinate = Coordinate::kX;
  double target = 0;
  Trend expected = Trend::kFlat;
  Trend observed = Trend::kMixed;
  std::vector<SpeedPoint> points;
  bool agrees() const { return expected == observed; }
};

struct SweepReport {
  std::string name;
  // Vertex reached by every variant; compare_with_expected throws otherwise.
  std::optional<EquilibriumPoint> common_limit;
  std::array<TrendComparison, 3> trends;
};

// Orders settle times for all three players and compares them with the
// expected trends. Requires every variant to have converged.
SweepReport compare_with_expected(const NamedSweep& sweep, const SweepResult& result);

}  // namespace evogame
