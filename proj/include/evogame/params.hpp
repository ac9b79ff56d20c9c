#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace evogame {

// Cost/benefit magnitudes of the discharge game. All are nonnegative; the
// payoff formulas apply the signs. Units are arbitrary monetary units.
struct ModelParams {
  double image_loss_japan = 0;        // I_J   international image of Japan
  double litigation_countries = 0;    // C_LC  litigation compensation to other countries
  double export_tax_loss = 0;         // T_RJ  export tax revenue lost by discharging
  double aid_to_japan = 0;            // C_HJ  aid received when not discharging
  double litigation_fisheries = 0;    // C_LF  litigation compensation to the fisheries association
  double discharge_cost = 0;          // C_DJ
  double monitoring_japan = 0;        // C_MJ  ocean monitoring cost borne by Japan
  double storage_cost = 0;            // C_SJ
  double image_fisheries = 0;         // C_IF  international image of the fisheries association
  double substitute_benefit = 0;      // B_SP  gain from introducing seafood substitutes
  double own_seafood_cost = 0;        // C_SC  cost for other countries to develop own seafood
  double monitoring_countries = 0;    // C_MC  ocean monitoring cost borne by other countries
  double fisheries_revenue_loss = 0;  // E_RF

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

enum class ParamId {
  kImageLossJapan,
  kLitigationCountries,
  kExportTaxLoss,
  kAidToJapan,
  kLitigationFisheries,
  kDischargeCost,
  kMonitoringJapan,
  kStorageCost,
  kImageFisheries,
  kSubstituteBenefit,
  kOwnSeafoodCost,
  kMonitoringCountries,
  kFisheriesRevenueLoss,
};

inline constexpr std::size_t kParamCount = 13;

// In the order of the parameter table, which is also the serialization order.
inline constexpr std::array<ParamId, kParamCount> kAllParams = {
    ParamId::kImageLossJapan,      ParamId::kLitigationCountries, ParamId::kExportTaxLoss,
    ParamId::kAidToJapan,          ParamId::kLitigationFisheries, ParamId::kDischargeCost,
    ParamId::kMonitoringJapan,     ParamId::kStorageCost,         ParamId::kImageFisheries,
    ParamId::kSubstituteBenefit,   ParamId::kOwnSeafoodCost,      ParamId::kMonitoringCountries,
    ParamId::kFisheriesRevenueLoss,
};

// External key used by config files and the CLI, e.g. "C_SJ".
std::string_view param_key(ParamId id);
std::optional<ParamId> param_from_key(std::string_view key);

double get_param(const ModelParams& p, ParamId id);
void set_param(ModelParams& p, ParamId id, double value);

// Largest parameter magnitude; used to scale tolerances.
double param_scale(const ModelParams& p);

// Throws ValidationError when any field is negative or non-finite.
void validate(const ModelParams& p);

// Mixed-strategy point in the unit cube.
//   x: probability that Japan discharges
//   y: probability that other countries sanction
//   z: probability that the fisheries association opposes
struct StrategyState {
  double x = 0;
  double y = 0;
  double z = 0;

  friend bool operator==(const StrategyState&, const StrategyState&) = default;
};

void validate(const StrategyState& s);

double max_norm_distance(const StrategyState& a, const StrategyState& b);

enum class Coordinate { kX, kY, kZ };

double coordinate(const StrategyState& s, Coordinate c);
std::string_view coordinate_name(Coordinate c);
std::optional<Coordinate> coordinate_from_name(std::string_view name);

}  // namespace evogame
