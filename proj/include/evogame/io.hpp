#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evogame/dynamics.hpp"
#include "evogame/error.hpp"
#include "evogame/experiments.hpp"
#include "evogame/params.hpp"
#include "evogame/stability.hpp"

namespace evogame {

// Numbers in every output use printf "%.12g"; negative zero prints as "0".
std::string format_number(double v);

// ---------------------------------------------------------------------------
// Run configuration
//
// JSON document:
//   {
//     "preset": "Condition1",                 // or "params", not both
//     "params": {"I_J": 20, "C_LC": 8, ...},  // all of I_J..C_SC; C_MC, E_RF optional (0)
//     "initial": [0.5, 0.5, 0.5],             // optional, defaults to the preset's
//     "integrator": {"dt": 0.01, "t_max": 200, "convergence_eps": 1e-4,
//                    "convergence_window": 100, "threshold": 0.01,
//                    "stop_on_convergence": false},  // every key optional
//     "outputs": {"csv": "run.csv", "json": "report.json", "svg": "run.svg"}
//   }
// ---------------------------------------------------------------------------

enum class ConfigErrorKind { kSyntax, kMissingField, kOutOfRange, kUnknownKey, kConflict };
std::string_view config_error_kind_name(ConfigErrorKind k);

class ConfigError : public ValidationError {
 public:
  ConfigError(ConfigErrorKind kind, const std::string& what)
      : ValidationError(std::string(config_error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ConfigErrorKind kind() const { return kind_; }

 private:
  ConfigErrorKind kind_;
};

struct OutputSinks {
  std::optional<std::string> csv;
  std::optional<std::string> json;
  std::optional<std::string> svg;

  friend bool operator==(const OutputSinks&, const OutputSinks&) = default;
};

struct RunConfig {
  std::optional<std::string> preset;  // set when params came from a preset
  ModelParams params;
  StrategyState initial{0.5, 0.5, 0.5};
  IntegratorConfig integrator;
  OutputSinks outputs;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

RunConfig parse_config(std::string_view text);
std::string serialize_config(const RunConfig& config);

// ---------------------------------------------------------------------------
// Trajectory CSV: header "t,x,y,z", one row per sample.
// ---------------------------------------------------------------------------

// Throws ValidationError for an empty trajectory.
std::string write_trajectory_csv(const Trajectory& traj);
std::vector<Sample> read_trajectory_csv(std::string_view text);

// ---------------------------------------------------------------------------
// Stability report JSON (keys in this order):
//   {
//     "params": {"I_J": .., ..., "E_RF": ..},
//     "sign_tolerance": ..,
//     "conditions": {"condition1": bool, "condition2": bool, "condition3": bool},
//     "equilibria": [
//       {"label": "gamma1", "kind": "pure", "coordinates": [0,0,0],
//        "eigenvalues": [{"re": .., "im": ..}, x3], "signs": ["+","-","+"],
//        "table_signs": "*-+", "matches_table": true,
//        "classification": "NonESS-Saddle"},
//       ...,
//       {"label": "gamma9", "kind": "interior", "status": "infeasible",
//        "x_candidate": -0.0285714285714, "reason": "..."}  // plus the
//        // gamma1..8 fields when feasible
//     ],
//     "ess": ["gamma4"]
//   }
// ---------------------------------------------------------------------------

std::string write_report_json(const StabilityReport& report);

std::string write_sweep_json(const SweepReport& report, const SweepResult& result);

// ---------------------------------------------------------------------------
// SVG line charts
// ---------------------------------------------------------------------------

struct ChartSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct ChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<ChartSeries> series;
};

// Standalone SVG 1.1 document. Throws ValidationError when there are no
// series, a series is empty or a value is not finite.
std::string render_chart_svg(const ChartSpec& spec);

// Chart of x, y, z against time, keeping at most max_points samples per series.
ChartSpec trajectory_chart(const Trajectory& traj, std::string title, std::size_t max_points = 2000);

}  // namespace evogame
