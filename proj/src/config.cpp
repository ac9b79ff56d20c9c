#include <cmath>
#include <string>

#include <json.hpp>

#include "evogame/experiments.hpp"
#include "evogame/io.hpp"

namespace evogame {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view config_error_kind_name(ConfigErrorKind k) {
  switch (k) {
    case ConfigErrorKind::kSyntax: return "syntax error";
    case ConfigErrorKind::kMissingField: return "missing field";
    case ConfigErrorKind::kOutOfRange: return "out of range";
    case ConfigErrorKind::kUnknownKey: return "unknown key";
    case ConfigErrorKind::kConflict: return "conflicting fields";
  }
  return "error";
}

namespace {

double number_at(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw ConfigError(ConfigErrorKind::kSyntax, where + "." + key + " must be a number");
  }
  return v.get<double>();
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ConfigError(ConfigErrorKind::kUnknownKey, where + "." + key);
  }
}

const json& object_at(const json& obj, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_object()) throw ConfigError(ConfigErrorKind::kSyntax, key + " must be an object");
  return v;
}

ModelParams parse_params(const json& obj) {
  ModelParams p;
  for (const auto& [key, value] : obj.items()) {
    if (!param_from_key(key)) throw ConfigError(ConfigErrorKind::kUnknownKey, "params." + key);
  }
  for (ParamId id : kAllParams) {
    const std::string key(param_key(id));
    const bool optional = id == ParamId::kMonitoringCountries || id == ParamId::kFisheriesRevenueLoss;
    if (!obj.contains(key)) {
      if (optional) continue;
      throw ConfigError(ConfigErrorKind::kMissingField, "params." + key);
    }
    const double v = number_at(obj, key, "params");
    if (!std::isfinite(v) || v < 0) {
      throw ConfigError(ConfigErrorKind::kOutOfRange, "params." + key + " must be nonnegative");
    }
    set_param(p, id, v);
  }
  return p;
}

StrategyState parse_initial(const json& v) {
  if (!v.is_array() || v.size() != 3) {
    throw ConfigError(ConfigErrorKind::kSyntax, "initial must be an array of three numbers");
  }
  double c[3];
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_number()) {
      throw ConfigError(ConfigErrorKind::kSyntax, "initial must be an array of three numbers");
    }
    c[i] = v[i].get<double>();
    if (!(c[i] >= 0 && c[i] <= 1)) {
      throw ConfigError(ConfigErrorKind::kOutOfRange, "initial coordinates must lie in [0,1]");
    }
  }
  return {c[0], c[1], c[2]};
}

IntegratorConfig parse_integrator(const json& obj) {
  reject_unknown(obj,
                 {"dt", "t_max", "convergence_eps", "convergence_window", "threshold",
                  "stop_on_convergence"},
                 "integrator");
  IntegratorConfig c;
  if (obj.contains("dt")) c.dt = number_at(obj, "dt", "integrator");
  if (obj.contains("t_max")) c.t_max = number_at(obj, "t_max", "integrator");
  if (obj.contains("convergence_eps")) {
    c.convergence_eps = number_at(obj, "convergence_eps", "integrator");
  }
  if (obj.contains("convergence_window")) {
    const json& w = obj.at("convergence_window");
    if (!w.is_number_integer()) {
      throw ConfigError(ConfigErrorKind::kSyntax, "integrator.convergence_window must be an integer");
    }
    c.convergence_window = w.get<int>();
  }
  if (obj.contains("threshold")) c.threshold = number_at(obj, "threshold", "integrator");
  if (obj.contains("stop_on_convergence")) {
    const json& b = obj.at("stop_on_convergence");
    if (!b.is_boolean()) {
      throw ConfigError(ConfigErrorKind::kSyntax, "integrator.stop_on_convergence must be a boolean");
    }
    c.stop_on_convergence = b.get<bool>();
  }
  try {
    validate(c);
  } catch (const ValidationError& e) {
    throw ConfigError(ConfigErrorKind::kOutOfRange, std::string("integrator: ") + e.what());
  }
  return c;
}

OutputSinks parse_outputs(const json& obj) {
  reject_unknown(obj, {"csv", "json", "svg"}, "outputs");
  OutputSinks sinks;
  auto path = [&](const char* key, std::optional<std::string>& slot) {
    if (!obj.contains(key)) return;
    const json& v = obj.at(key);
    if (!v.is_string()) {
      throw ConfigError(ConfigErrorKind::kSyntax, std::string("outputs.") + key + " must be a string");
    }
    if (v.get<std::string>().empty()) {
      throw ConfigError(ConfigErrorKind::kOutOfRange, std::string("outputs.") + key + " is empty");
    }
    slot = v.get<std::string>();
  };
  path("csv", sinks.csv);
  path("json", sinks.json);
  path("svg", sinks.svg);
  if (!sinks.csv && !sinks.json && !sinks.svg) {
    throw ConfigError(ConfigErrorKind::kMissingField, "outputs needs at least one of csv, json, svg");
  }
  return sinks;
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(ConfigErrorKind::kSyntax, e.what());
  }
  if (!doc.is_object()) throw ConfigError(ConfigErrorKind::kSyntax, "document must be an object");
  reject_unknown(doc, {"preset", "params", "initial", "integrator", "outputs"}, "config");

  const bool has_preset = doc.contains("preset");
  const bool has_params = doc.contains("params");
  if (has_preset && has_params) {
    throw ConfigError(ConfigErrorKind::kConflict, "preset and params are mutually exclusive");
  }
  if (!has_preset && !has_params) {
    throw ConfigError(ConfigErrorKind::kMissingField, "either preset or params is required");
  }

  RunConfig cfg;
  if (has_preset) {
    if (!doc.at("preset").is_string()) {
      throw ConfigError(ConfigErrorKind::kSyntax, "preset must be a string");
    }
    const std::string name = doc.at("preset").get<std::string>();
    const auto id = scenario_from_name(name);
    if (!id) throw ConfigError(ConfigErrorKind::kOutOfRange, "unknown preset " + name);
    const ScenarioPreset ps = preset(*id);
    cfg.preset = name;
    cfg.params = ps.params;
    cfg.initial = ps.initial;
  } else {
    cfg.params = parse_params(object_at(doc, "params"));
  }
  if (doc.contains("initial")) cfg.initial = parse_initial(doc.at("initial"));
  if (doc.contains("integrator")) cfg.integrator = parse_integrator(object_at(doc, "integrator"));
  if (!doc.contains("outputs")) throw ConfigError(ConfigErrorKind::kMissingField, "outputs");
  cfg.outputs = parse_outputs(object_at(doc, "outputs"));
  return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
  ordered_json doc;
  if (cfg.preset) {
    doc["preset"] = *cfg.preset;
  } else {
    ordered_json params;
    for (ParamId id : kAllParams) params[std::string(param_key(id))] = get_param(cfg.params, id);
    doc["params"] = params;
  }
  doc["initial"] = {cfg.initial.x, cfg.initial.y, cfg.initial.z};
  doc["integrator"] = {
      {"dt", cfg.integrator.dt},
      {"t_max", cfg.integrator.t_max},
      {"convergence_eps", cfg.integrator.convergence_eps},
      {"convergence_window", cfg.integrator.convergence_window},
      {"threshold", cfg.integrator.threshold},
      {"stop_on_convergence", cfg.integrator.stop_on_convergence},
  };
  ordered_json outputs = ordered_json::object();
  if (cfg.outputs.csv) outputs["csv"] = *cfg.outputs.csv;
  if (cfg.outputs.json) outputs["json"] = *cfg.outputs.json;
  if (cfg.outputs.svg) outputs["svg"] = *cfg.outputs.svg;
  doc["outputs"] = outputs;
  return doc.dump(2) + "\n";
}

}  // namespace evogame
