#include "evogame/game.hpp"

#include "evogame/error.hpp"

namespace evogame {

std::string_view move_name(JapanMove m) {
  return m == JapanMove::kDischarge ? "Discharge" : "NoDischarge";
}
std::string_view move_name(CountryMove m) {
  return m == CountryMove::kSanction ? "Sanction" : "NoSanction";
}
std::string_view move_name(FisheriesMove m) {
  return m == FisheriesMove::kOppose ? "Oppose" : "Accept";
}

PayoffMatrix build_payoff_matrix(const ModelParams& p) {
  validate(p);
  using J = JapanMove;
  using C = CountryMove;
  using F = FisheriesMove;

  const double japan_discharge_base = -p.discharge_cost - p.monitoring_japan;
  const double japan_sanctioned = -p.image_loss_japan - p.litigation_countries - p.export_tax_loss;
  const double countries_sanction_discharge =
      -p.own_seafood_cost + p.substitute_benefit + p.litigation_countries - p.monitoring_countries;

  PayoffMatrix m;
  m.at(J::kDischarge, C::kSanction, F::kOppose) = {
      japan_sanctioned - p.litigation_fisheries + japan_discharge_base,
      countries_sanction_discharge, p.litigation_fisheries - p.fisheries_revenue_loss};
  m.at(J::kDischarge, C::kSanction, F::kAccept) = {
      japan_sanctioned + japan_discharge_base, countries_sanction_discharge,
      -p.fisheries_revenue_loss - p.image_fisheries};
  m.at(J::kDischarge, C::kNoSanction, F::kOppose) = {
      -p.litigation_fisheries + japan_discharge_base, -p.monitoring_countries,
      p.litigation_fisheries};
  m.at(J::kDischarge, C::kNoSanction, F::kAccept) = {japan_discharge_base,
                                                     -p.monitoring_countries, -p.image_fisheries};
  m.at(J::kNoDischarge, C::kSanction, F::kOppose) = {p.aid_to_japan - p.storage_cost,
                                                     -p.aid_to_japan, 0};
  m.at(J::kNoDischarge, C::kSanction, F::kAccept) = {p.aid_to_japan - p.storage_cost,
                                                     -p.aid_to_japan, -p.image_fisheries};
  m.at(J::kNoDischarge, C::kNoSanction, F::kOppose) = {-p.storage_cost, 0, 0};
  m.at(J::kNoDischarge, C::kNoSanction, F::kAccept) = {-p.storage_cost, 0, -p.image_fisheries};
  return m;
}

UtilityBundle utilities_japan(const ModelParams& p, const StrategyState& s) {
  UtilityBundle u;
  u.u_strat = s.y * (-p.image_loss_japan - p.litigation_countries - p.export_tax_loss) -
              s.z * p.litigation_fisheries - p.discharge_cost - p.monitoring_japan;
  u.u_alt = s.y * p.aid_to_japan - p.storage_cost;
  u.u_avg = s.x * u.u_strat + (1 - s.x) * u.u_alt;
  return u;
}

UtilityBundle utilities_countries(const ModelParams& p, const StrategyState& s) {
  UtilityBundle u;
  u.u_strat = s.x * (p.aid_to_japan - p.own_seafood_cost + p.substitute_benefit +
                     p.litigation_countries - p.monitoring_countries) -
              p.aid_to_japan;
  u.u_alt = -s.x * p.monitoring_countries;
  u.u_avg = s.y * u.u_strat + (1 - s.y) * u.u_alt;
  return u;
}

UtilityBundle utilities_fisheries(const ModelParams& p, const StrategyState& s) {
  UtilityBundle u;
  u.u_strat = -s.x * s.y * p.fisheries_revenue_loss + s.x * p.litigation_fisheries;
  u.u_alt = -s.x * s.y * p.fisheries_revenue_loss - p.image_fisheries;
  u.u_avg = s.z * u.u_strat + (1 - s.z) * u.u_alt;
  return u;
}

FieldValue replicator_field(const ModelParams& p, const StrategyState& s) {
  const double japan_gain = s.y * (-p.image_loss_japan - p.litigation_countries -
                                   p.export_tax_loss - p.aid_to_japan) -
                            s.z * p.litigation_fisheries - p.discharge_cost -
                            p.monitoring_japan + p.storage_cost;
  const double countries_gain = s.x * (p.aid_to_japan - p.own_seafood_cost +
                                       p.substitute_benefit + p.litigation_countries) -
                                p.aid_to_japan;
  const double fisheries_gain = s.x * p.litigation_fisheries + p.image_fisheries;
  return {s.x * (1 - s.x) * japan_gain, s.y * (1 - s.y) * countries_gain,
          s.z * (1 - s.z) * fisheries_gain};
}

FieldValue generic_expected_field(const PayoffMatrix& m, const StrategyState& s) {
  using J = JapanMove;
  using C = CountryMove;
  using F = FisheriesMove;
  const J japan_moves[] = {J::kDischarge, J::kNoDischarge};
  const C country_moves[] = {C::kSanction, C::kNoSanction};
  const F fisheries_moves[] = {F::kOppose, F::kAccept};
  const double px[] = {s.x, 1 - s.x};
  const double py[] = {s.y, 1 - s.y};
  const double pz[] = {s.z, 1 - s.z};

  // u[player][own strategy]
  double u_japan[2] = {0, 0};
  double u_countries[2] = {0, 0};
  double u_fisheries[2] = {0, 0};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        const PayoffCell& cell = m.at(japan_moves[a], country_moves[b], fisheries_moves[c]);
        u_japan[a] += py[b] * pz[c] * cell.japan;
        u_countries[b] += px[a] * pz[c] * cell.countries;
        u_fisheries[c] += px[a] * py[b] * cell.fisheries;
      }
    }
  }
  return {s.x * (1 - s.x) * (u_japan[0] - u_japan[1]),
          s.y * (1 - s.y) * (u_countries[0] - u_countries[1]),
          s.z * (1 - s.z) * (u_fisheries[0] - u_fisheries[1])};
}

}  // namespace evogame
