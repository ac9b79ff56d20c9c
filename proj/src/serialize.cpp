#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "evogame/io.hpp"

namespace evogame {

using nlohmann::ordered_json;

std::string format_number(double v) {
  if (v == 0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

// Rounded to the same 12 significant digits as the text outputs.
double rounded(double v) { return std::stod(format_number(v)); }

ordered_json coords_json(const StrategyState& s) {
  return ordered_json::array({rounded(s.x), rounded(s.y), rounded(s.z)});
}

ordered_json params_json(const ModelParams& p) {
  ordered_json obj = ordered_json::object();
  for (ParamId id : kAllParams) obj[std::string(param_key(id))] = rounded(get_param(p, id));
  return obj;
}

ordered_json equilibrium_json(const EquilibriumReport& r, const ConditionCheck* conditions) {
  ordered_json rec;
  rec["label"] = r.point.label();
  rec["kind"] = r.point.kind == EquilibriumKind::kPure ? "pure" : "interior";
  rec["coordinates"] = coords_json(r.point.coords);
  ordered_json eigs = ordered_json::array();
  for (const Complex& e : r.eigenvalues) {
    eigs.push_back({{"re", rounded(e.real())}, {"im", rounded(e.imag())}});
  }
  rec["eigenvalues"] = eigs;
  ordered_json signs = ordered_json::array();
  for (Sign s : r.signs) signs.push_back(std::string(1, sign_symbol(s)));
  rec["signs"] = signs;
  if (conditions) {
    const std::string pattern = documented_sign_pattern(r.point.number, *conditions);
    rec["table_signs"] = pattern;
    rec["matches_table"] = matches_sign_pattern(r.sign_string(), pattern);
  }
  rec["classification"] = std::string(classification_name(r.classification));
  return rec;
}

}  // namespace

std::string write_trajectory_csv(const Trajectory& traj) {
  if (traj.samples.empty()) throw ValidationError("cannot write an empty trajectory");
  std::string out = "t,x,y,z\n";
  out.reserve(traj.samples.size() * 48);
  for (const Sample& s : traj.samples) {
    out += format_number(s.t);
    out += ',';
    out += format_number(s.state.x);
    out += ',';
    out += format_number(s.state.y);
    out += ',';
    out += format_number(s.state.z);
    out += '\n';
  }
  return out;
}

std::vector<Sample> read_trajectory_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "t,x,y,z") {
    throw ValidationError("trajectory CSV must start with the header t,x,y,z");
  }
  std::vector<Sample> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Sample s;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream row(line);
    if (!(row >> s.t >> c1 >> s.state.x >> c2 >> s.state.y >> c3 >> s.state.z) || c1 != ',' ||
        c2 != ',' || c3 != ',') {
      throw ValidationError("malformed trajectory CSV row: " + line);
    }
    samples.push_back(s);
  }
  return samples;
}

std::string write_report_json(const StabilityReport& report) {
  ordered_json doc;
  doc["params"] = params_json(report.params);
  doc["sign_tolerance"] = rounded(report.sign_tolerance);
  doc["conditions"] = {{"condition1", report.conditions.condition1},
                       {"condition2", report.conditions.condition2},
                       {"condition3", report.conditions.condition3}};
  ordered_json eqs = ordered_json::array();
  for (const EquilibriumReport& r : report.vertices) {
    eqs.push_back(equilibrium_json(r, &report.conditions));
  }
  ordered_json interior;
  if (report.interior_report) {
    interior = equilibrium_json(*report.interior_report, nullptr);
  } else {
    interior["label"] = "gamma9";
    interior["kind"] = "interior";
  }
  interior["status"] = std::string(interior_status_name(report.interior.status));
  if (report.interior.x_candidate) interior["x_candidate"] = rounded(*report.interior.x_candidate);
  if (!report.interior.reason.empty()) interior["reason"] = report.interior.reason;
  eqs.push_back(interior);
  doc["equilibria"] = eqs;
  ordered_json ess = ordered_json::array();
  for (const EquilibriumPoint& p : report.ess_points()) ess.push_back(p.label());
  doc["ess"] = ess;
  return doc.dump(2) + "\n";
}

std::string write_sweep_json(const SweepReport& report, const SweepResult& result) {
  ordered_json doc;
  doc["sweep"] = report.name;
  doc["common_limit"] = report.common_limit ? ordered_json(report.common_limit->label())
                                            : ordered_json(nullptr);
  ordered_json entries = ordered_json::array();
  for (const SweepEntry& e : result.entries) {
    ordered_json rec;
    rec["label"] = e.label;
    rec["converged"] = e.convergence.converged;
    rec["limit"] = e.convergence.limit ? ordered_json(e.convergence.limit->label())
                                       : ordered_json(nullptr);
    rec["t_converge"] = e.convergence.t_converge ? ordered_json(rounded(*e.convergence.t_converge))
                                                 : ordered_json(nullptr);
    ordered_json settle = ordered_json::object();
    for (Coordinate c : {Coordinate::kX, Coordinate::kY, Coordinate::kZ}) {
      const auto& t = e.settle_time[static_cast<std::size_t>(c)];
      settle[std::string(coordinate_name(c))] = t ? ordered_json(rounded(*t)) : ordered_json(nullptr);
    }
    rec["settle_time"] = settle;
    entries.push_back(rec);
  }
  doc["entries"] = entries;

  ordered_json trends = ordered_json::array();
  ordered_json notes = ordered_json::array();
  for (const TrendComparison& t : report.trends) {
    ordered_json rec;
    rec["coordinate"] = std::string(coordinate_name(t.coordinate));
    rec["target"] = rounded(t.target);
    rec["expected"] = std::string(trend_name(t.expected));
    rec["observed"] = std::string(trend_name(t.observed));
    rec["agrees"] = t.agrees();
    ordered_json pts = ordered_json::array();
    for (const SpeedPoint& p : t.points) pts.push_back({rounded(p.value), rounded(p.time)});
    rec["points"] = pts;
    trends.push_back(rec);
    if (!t.agrees()) {
      notes.push_back(report.name + ": settle time of " + std::string(coordinate_name(t.coordinate)) +
                      " is " + std::string(trend_name(t.observed)) + ", expected " +
                      std::string(trend_name(t.expected)));
    }
  }
  doc["trends"] = trends;
  doc["reproduction_notes"] = notes;
  return doc.dump(2) + "\n";
}

}  // namespace evogame
