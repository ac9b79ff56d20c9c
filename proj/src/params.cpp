#include "evogame/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "evogame/error.hpp"

namespace evogame {

namespace {

struct ParamEntry {
  ParamId id;
  std::string_view key;
  double ModelParams::*field;
};

constexpr std::array<ParamEntry, kParamCount> kParamTable = {{
    {ParamId::kImageLossJapan, "I_J", &ModelParams::image_loss_japan},
    {ParamId::kLitigationCountries, "C_LC", &ModelParams::litigation_countries},
    {ParamId::kExportTaxLoss, "T_RJ", &ModelParams::export_tax_loss},
    {ParamId::kAidToJapan, "C_HJ", &ModelParams::aid_to_japan},
    {ParamId::kLitigationFisheries, "C_LF", &ModelParams::litigation_fisheries},
    {ParamId::kDischargeCost, "C_DJ", &ModelParams::discharge_cost},
    {ParamId::kMonitoringJapan, "C_MJ", &ModelParams::monitoring_japan},
    {ParamId::kStorageCost, "C_SJ", &ModelParams::storage_cost},
    {ParamId::kImageFisheries, "C_IF", &ModelParams::image_fisheries},
    {ParamId::kSubstituteBenefit, "B_SP", &ModelParams::substitute_benefit},
    {ParamId::kOwnSeafoodCost, "C_SC", &ModelParams::own_seafood_cost},
    {ParamId::kMonitoringCountries, "C_MC", &ModelParams::monitoring_countries},
    {ParamId::kFisheriesRevenueLoss, "E_RF", &ModelParams::fisheries_revenue_loss},
}};

const ParamEntry& entry(ParamId id) { return kParamTable[static_cast<std::size_t>(id)]; }

}  // namespace

std::string_view param_key(ParamId id) { return entry(id).key; }

std::optional<ParamId> param_from_key(std::string_view key) {
  for (const auto& e : kParamTable) {
    if (e.key == key) return e.id;
  }
  return std::nullopt;
}

double get_param(const ModelParams& p, ParamId id) { return p.*(entry(id).field); }

void set_param(ModelParams& p, ParamId id, double value) { p.*(entry(id).field) = value; }

double param_scale(const ModelParams& p) {
  double scale = 0;
  for (ParamId id : kAllParams) scale = std::max(scale, std::abs(get_param(p, id)));
  return scale;
}

void validate(const ModelParams& p) {
  for (ParamId id : kAllParams) {
    const double v = get_param(p, id);
    if (!std::isfinite(v)) {
      throw ValidationError("parameter " + std::string(param_key(id)) + " is not finite");
    }
    if (v < 0) {
      throw ValidationError("parameter " + std::string(param_key(id)) +
                            " must be nonnegative, got " + std::to_string(v));
    }
  }
}

void validate(const StrategyState& s) {
  for (double v : {s.x, s.y, s.z}) {
    if (!std::isfinite(v) || v < 0 || v > 1) {
      throw ValidationError("strategy state coordinates must lie in [0,1]");
    }
  }
}

double max_norm_distance(const StrategyState& a, const StrategyState& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

double coordinate(const StrategyState& s, Coordinate c) {
  switch (c) {
    case Coordinate::kX: return s.x;
    case Coordinate::kY: return s.y;
    case Coordinate::kZ: return s.z;
  }
  return s.x;
}

std::string_view coordinate_name(Coordinate c) {
  switch (c) {
    case Coordinate::kX: return "x";
    case Coordinate::kY: return "y";
    case Coordinate::kZ: return "z";
  }
  return "x";
}

std::optional<Coordinate> coordinate_from_name(std::string_view name) {
  if (name == "x") return Coordinate::kX;
  if (name == "y") return Coordinate::kY;
  if (name == "z") return Coordinate::kZ;
  return std::nullopt;
}

}  // namespace evogame
