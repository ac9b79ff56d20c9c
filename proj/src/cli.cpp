#include "evogame/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evogame/dynamics.hpp"
#include "evogame/error.hpp"
#include "evogame/experiments.hpp"
#include "evogame/game.hpp"
#include "evogame/io.hpp"
#include "evogame/stability.hpp"

namespace evogame {

namespace {

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ValidationError("cannot open " + path + " for writing");
  f << bytes;
  if (!f) throw ValidationError("failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + item + "' is not a number");
    }
  }
  return values;
}

StrategyState parse_state(const std::string& text) {
  const auto v = parse_list(text, "--initial");
  if (v.size() != 3) throw UsageError("--initial expects x,y,z");
  StrategyState s{v[0], v[1], v[2]};
  validate(s);
  return s;
}

// Scenario selection shared by every subcommand.
struct ScenarioOptions {
  std::string preset_name;
  std::vector<std::string> overrides;

  void attach(CLI::App& cmd, const std::string& default_preset) {
    preset_name = default_preset;
    cmd.add_option("--preset", preset_name,
                   "Condition1, Condition2, Condition3 or Table5 (default " + default_preset + ")");
    cmd.add_option("--param", overrides, "Override one parameter, e.g. --param C_SJ=25")
        ->allow_extra_args(false);
  }

  ScenarioPreset resolve() const {
    ScenarioPreset s = preset(preset_name);
    for (const std::string& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos) throw UsageError("--param expects NAME=VALUE, got " + o);
      const auto id = param_from_key(o.substr(0, eq));
      if (!id) throw UsageError("unknown parameter " + o.substr(0, eq));
      const auto v = parse_list(o.substr(eq + 1), "--param");
      if (v.size() != 1) throw UsageError("--param expects one value, got " + o);
      set_param(s.params, *id, v[0]);
    }
    validate(s.params);
    return s;
  }
};

struct IntegratorOptions {
  IntegratorConfig config;

  void attach(CLI::App& cmd) {
    cmd.add_option("--dt", config.dt, "RK4 step size")->capture_default_str();
    cmd.add_option("--t-max", config.t_max, "Integration horizon")->capture_default_str();
    cmd.add_option("--eps", config.convergence_eps, "Convergence ball radius (max-norm)")
        ->capture_default_str();
    cmd.add_option("--threshold", config.threshold, "Band for settle-time measurements")
        ->capture_default_str();
  }
};

void print_summary(std::ostream& out, const Trajectory& traj, const ConvergenceResult& conv) {
  const StrategyState& f = traj.final_state();
  out << "final t=" << format_number(traj.samples.back().t) << " state=(" << format_number(f.x)
      << ", " << format_number(f.y) << ", " << format_number(f.z) << ")\n";
  if (conv.converged) {
    out << "converged to " << conv.limit->label() << " at t=" << format_number(*conv.t_converge)
        << "\n";
    for (Coordinate c : {Coordinate::kX, Coordinate::kY, Coordinate::kZ}) {
      const double target = coordinate(conv.limit->coords, c);
      const auto t = time_to_threshold(traj, c, target, traj.config.threshold);
      out << "  " << coordinate_name(c) << " -> " << format_number(target) << " settles at t="
          << (t ? format_number(*t) : std::string("never")) << "\n";
    }
  } else {
    out << "not converged\n";
  }
}

int run_simulate(std::ostream& out, const ScenarioOptions& scen, const IntegratorOptions& integ,
                 const std::string& config_path, const std::string& initial_text,
                 std::string csv_path, std::string svg_path, std::string json_path,
                 double plot_until) {
  ModelParams params;
  StrategyState initial;
  IntegratorConfig config = integ.config;
  std::string title;
  if (!config_path.empty()) {
    const RunConfig cfg = parse_config(read_file(config_path));
    params = cfg.params;
    initial = cfg.initial;
    config = cfg.integrator;
    if (csv_path.empty() && cfg.outputs.csv) csv_path = *cfg.outputs.csv;
    if (svg_path.empty() && cfg.outputs.svg) svg_path = *cfg.outputs.svg;
    if (json_path.empty() && cfg.outputs.json) json_path = *cfg.outputs.json;
    title = cfg.preset ? *cfg.preset : std::string("custom parameters");
  } else {
    const ScenarioPreset s = scen.resolve();
    params = s.params;
    initial = s.initial;
    title = std::string(scenario_name(s.name));
  }
  if (!initial_text.empty()) initial = parse_state(initial_text);

  const Trajectory traj = integrate(params, initial, config);
  const ConvergenceResult conv = detect_convergence(traj);
  print_summary(out, traj, conv);

  if (!csv_path.empty()) write_file(csv_path, write_trajectory_csv(traj));
  if (!json_path.empty()) write_file(json_path, write_report_json(stability_report(params)));
  if (!svg_path.empty()) {
    Trajectory shown = traj;
    if (plot_until > 0) {
      std::erase_if(shown.samples, [&](const Sample& s) { return s.t > plot_until + 1e-12; });
    }
    write_file(svg_path, render_chart_svg(trajectory_chart(shown, "Evolution over time: " + title)));
  }
  return 0;
}

int run_stability(std::ostream& out, const ScenarioOptions& scen, double sign_tol,
                  const std::string& out_path) {
  const ScenarioPreset s = scen.resolve();
  const std::string json = write_report_json(stability_report(s.params, sign_tol));
  if (out_path.empty()) {
    out << json;
  } else {
    write_file(out_path, json);
  }
  return 0;
}

int run_equilibria(std::ostream& out, const ScenarioOptions& scen) {
  const ScenarioPreset s = scen.resolve();
  const StabilityReport report = stability_report(s.params);
  for (const EquilibriumReport& r : report.vertices) {
    const auto& c = r.point.coords;
    out << r.point.label() << " (" << format_number(c.x) << "," << format_number(c.y) << ","
        << format_number(c.z) << ")  pure  eigenvalues";
    for (const Complex& e : r.eigenvalues) out << " " << format_number(e.real());
    out << "  signs " << r.sign_string() << "  " << classification_name(r.classification) << "\n";
  }
  out << "gamma9 interior  " << interior_status_name(report.interior.status);
  if (report.interior.x_candidate) out << "  x*=" << format_number(*report.interior.x_candidate);
  if (report.interior.point) {
    const auto& c = report.interior.point->coords;
    out << "  (" << format_number(c.x) << "," << format_number(c.y) << "," << format_number(c.z)
        << ")";
  }
  if (!report.interior.reason.empty()) out << "  " << report.interior.reason;
  out << "\n";
  return 0;
}

int run_payoff(std::ostream& out, const ScenarioOptions& scen) {
  const ScenarioPreset s = scen.resolve();
  const PayoffMatrix m = build_payoff_matrix(s.params);
  out << "japan,countries,fisheries,payoff_japan,payoff_countries,payoff_fisheries\n";
  for (JapanMove j : {JapanMove::kDischarge, JapanMove::kNoDischarge}) {
    for (CountryMove c : {CountryMove::kSanction, CountryMove::kNoSanction}) {
      for (FisheriesMove f : {FisheriesMove::kOppose, FisheriesMove::kAccept}) {
        const PayoffCell& cell = m.at(j, c, f);
        out << move_name(j) << "," << move_name(c) << "," << move_name(f) << ","
            << format_number(cell.japan) << "," << format_number(cell.countries) << ","
            << format_number(cell.fisheries) << "\n";
      }
    }
  }
  return 0;
}

void print_sweep(std::ostream& out, const SweepReport& report, bool forced_x) {
  out << "sweep " << report.name << ": all variants -> "
      << (report.common_limit ? report.common_limit->label() : std::string("different limits"))
      << "\n";
  for (const TrendComparison& t : report.trends) {
    out << "  " << coordinate_name(t.coordinate) << " -> " << format_number(t.target) << ":";
    for (const SpeedPoint& p : t.points) {
      out << " " << format_number(p.value) << ":" << format_number(p.time);
    }
    out << "  observed " << trend_name(t.observed) << ", expected " << trend_name(t.expected);
    if (!t.agrees()) out << "  [reproduction note: differs]";
    if (forced_x && t.coordinate == Coordinate::kX) out << "  (forced)";
    out << "\n";
  }
}

int run_sweep_command(std::ostream& out, const std::string& name, const std::string& param_name,
                      const std::string& values_text, const ScenarioOptions& scen,
                      const IntegratorOptions& integ, const std::string& out_dir) {
  std::vector<NamedSweep> sweeps;
  if (!param_name.empty()) {
    const auto id = param_from_key(param_name);
    if (!id) throw UsageError("unknown parameter " + param_name);
    if (values_text.empty()) throw UsageError("--values is required with --param-name");
    NamedSweep custom;
    custom.name = param_name;
    custom.spec = SweepSpec{scen.resolve(), ParamSweep{*id, parse_list(values_text, "--values")},
                            integ.config};
    custom.expected = {Trend::kMixed, Trend::kMixed, Trend::kMixed};
    sweeps.push_back(std::move(custom));
  } else if (name == "all") {
    sweeps = named_sweeps(integ.config);
  } else {
    auto s = named_sweep(name, integ.config);
    if (!s) {
      throw UsageError("unknown sweep '" + name + "' (expected C_DJ, C_SJ, C_LC, C_LF, C_HJ, initial or all)");
    }
    sweeps.push_back(std::move(*s));
  }

  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  for (const NamedSweep& sweep : sweeps) {
    const SweepResult result = run_sweep(sweep.spec);
    for (const SweepFailure& f : result.failures) {
      out << "variant " << f.label << ": " << f.reason << "\n";
    }
    if (!result.failures.empty()) {
      throw IntegrationError("sweep " + sweep.name + " has variants that did not converge");
    }
    const SweepReport report = compare_with_expected(sweep, result);
    print_sweep(out, report, sweep.x_trend_forced);
    if (out_dir.empty()) continue;

    const std::filesystem::path dir(out_dir);
    for (std::size_t i = 0; i < result.entries.size(); ++i) {
      write_file((dir / (sweep.name + "_" + std::to_string(i) + ".csv")).string(),
                 write_trajectory_csv(result.entries[i].trajectory));
    }
    write_file((dir / (sweep.name + ".json")).string(), write_sweep_json(report, result));
    for (Coordinate c : {Coordinate::kX, Coordinate::kY, Coordinate::kZ}) {
      ChartSpec chart;
      chart.title = "Sweep " + sweep.name + ": " + std::string(coordinate_name(c));
      chart.x_label = "t";
      chart.y_label = std::string(coordinate_name(c));
      for (const SweepEntry& e : result.entries) {
        // The interesting dynamics end well before t_max; plot until the
        // slowest coordinate has settled.
        ChartSeries s;
        s.name = e.label;
        const double until = std::max(1.0, 2 * e.convergence.t_converge.value_or(e.trajectory.samples.back().t));
        const std::size_t stride = std::max<std::size_t>(1, e.trajectory.samples.size() / 4000);
        for (std::size_t k = 0; k < e.trajectory.samples.size(); k += stride) {
          const Sample& sm = e.trajectory.samples[k];
          if (sm.t > until) break;
          s.points.emplace_back(sm.t, coordinate(sm.state, c));
        }
        chart.series.push_back(std::move(s));
      }
      write_file((dir / (sweep.name + "_" + std::string(coordinate_name(c)) + ".svg")).string(),
                 render_chart_svg(chart));
    }
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tripartite discharge game: replicator dynamics, stability and sensitivity"};
  app.name("evogame");
  app.require_subcommand(1);

  ScenarioOptions sim_scen, stab_scen, eq_scen, pay_scen, sweep_scen;
  IntegratorOptions sim_integ, sweep_integ;

  auto* simulate = app.add_subcommand("simulate", "Integrate one scenario and write CSV/SVG");
  sim_scen.attach(*simulate, "Condition1");
  sim_integ.attach(*simulate);
  std::string config_path, initial_text, csv_path, svg_path, json_path;
  double plot_until = 0;
  simulate->add_option("--config", config_path, "JSON run configuration")
      ->excludes(simulate->get_option("--preset"));
  simulate->add_option("--initial", initial_text, "Initial state x,y,z");
  simulate->add_option("--out-csv", csv_path, "Trajectory CSV path");
  simulate->add_option("--out-svg", svg_path, "Trajectory chart path");
  simulate->add_option("--out-json", json_path, "Stability report path");
  simulate->add_option("--plot-until", plot_until, "Only chart samples with t <= this");

  auto* stability = app.add_subcommand("stability", "Emit the equilibrium stability report (JSON)");
  stab_scen.attach(*stability, "Condition1");
  double sign_tol = 0;
  std::string stab_out;
  stability->add_option("--sign-tol", sign_tol, "Eigenvalue sign dead-band (default 1e-9*scale)");
  stability->add_option("--out", stab_out, "Write the report here instead of stdout");

  auto* equilibria = app.add_subcommand("equilibria", "List gamma1..gamma9 and their status");
  eq_scen.attach(*equilibria, "Condition1");

  auto* payoff = app.add_subcommand("payoff", "Print the payoff matrix with numbers substituted");
  pay_scen.attach(*payoff, "Condition1");

  auto* sweep = app.add_subcommand("sweep", "Run a one-parameter or initial-state sweep");
  sweep_scen.attach(*sweep, "Table5");
  sweep_integ.attach(*sweep);
  std::string sweep_name = "all", param_name, values_text, out_dir;
  sweep->add_option("--name", sweep_name, "C_DJ, C_SJ, C_LC, C_LF, C_HJ, initial or all")
      ->capture_default_str();
  sweep->add_option("--param-name", param_name, "Custom sweep parameter")
      ->excludes(sweep->get_option("--name"));
  sweep->add_option("--values", values_text, "Comma-separated values for --param-name");
  sweep->add_option("--out-dir", out_dir, "Directory for per-variant CSV, JSON and SVG");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return static_cast<int>(ExitCode::kUsage);
  }

  try {
    if (simulate->parsed()) {
      return run_simulate(out, sim_scen, sim_integ, config_path, initial_text, csv_path, svg_path,
                          json_path, plot_until);
    }
    if (stability->parsed()) return run_stability(out, stab_scen, sign_tol, stab_out);
    if (equilibria->parsed()) return run_equilibria(out, eq_scen);
    if (payoff->parsed()) return run_payoff(out, pay_scen);
    if (sweep->parsed()) {
      return run_sweep_command(out, sweep_name, param_name, values_text, sweep_scen, sweep_integ,
                               out_dir);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kUsage);
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kValidation);
  } catch (const IntegrationError& e) {
    err << "integration error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kNumeric);
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kValidation);
  }
  return static_cast<int>(ExitCode::kUsage);
}

int cli_main(int argc, char** argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace evogame
