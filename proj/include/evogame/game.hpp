#pragma once

#include <array>
#include <string_view>

#include "evogame/params.hpp"

namespace evogame {

enum class JapanMove { kDischarge, kNoDischarge };
enum class CountryMove { kSanction, kNoSanction };
enum class FisheriesMove { kOppose, kAccept };

std::string_view move_name(JapanMove m);
std::string_view move_name(CountryMove m);
std::string_view move_name(FisheriesMove m);

struct PayoffCell {
  double japan = 0;
  double countries = 0;
  double fisheries = 0;
};

// One payoff triple per pure outcome of the three-player game.
class PayoffMatrix {
 public:
  PayoffCell& at(JapanMove j, CountryMove c, FisheriesMove f) { return cells_[index(j, c, f)]; }
  const PayoffCell& at(JapanMove j, CountryMove c, FisheriesMove f) const {
    return cells_[index(j, c, f)];
  }

 private:
  static std::size_t index(JapanMove j, CountryMove c, FisheriesMove f) {
    return static_cast<std::size_t>(j) * 4 + static_cast<std::size_t>(c) * 2 +
           static_cast<std::size_t>(f);
  }
  std::array<PayoffCell, 8> cells_{};
};

// Throws ValidationError on negative or non-finite parameters.
PayoffMatrix build_payoff_matrix(const ModelParams& params);

// Expected utilities of one player: first strategy, second strategy and the
// population average weighted by the player's own mixed strategy.
struct UtilityBundle {
  double u_strat = 0;
  double u_alt = 0;
  double u_avg = 0;
};

// Discharge vs. no discharge.
UtilityBundle utilities_japan(const ModelParams& params, const StrategyState& state);
// Sanction vs. no sanction.
UtilityBundle utilities_countries(const ModelParams& params, const StrategyState& state);
// Oppose vs. accept.
UtilityBundle utilities_fisheries(const ModelParams& params, const StrategyState& state);

struct FieldValue {
  double dx = 0;
  double dy = 0;
  double dz = 0;
};

// Replicator vector field in closed form:
//   dx = x(1-x) [y(-I_J-C_LC-T_RJ-C_HJ) - z C_LF - C_DJ - C_MJ + C_SJ]
//   dy = y(1-y) [x(C_HJ-C_SC+B_SP+C_LC) - C_HJ]
//   dz = z(1-z) (x C_LF + C_IF)
// C_MC and E_RF cancel out of every bracket.
FieldValue replicator_field(const ModelParams& params, const StrategyState& state);

// Same field computed directly from a payoff matrix: each player's strategy
// utilities are cell payoffs weighted by the opponents' mixed strategies, and
// the rate is p(1-p)(u_strat - u_alt). Independent of the closed forms above.
FieldValue generic_expected_field(const PayoffMatrix& matrix, const StrategyState& state);

}  // namespace evogame
