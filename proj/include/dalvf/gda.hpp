#pragma once

#include "dalvf/params.hpp"

// Gradual Dutch auction analytics: the purchase-cost curve, the myopic
// arbitrageur's block response, and the steady-state arbitrage-profit and
// volume rates.

namespace dalvf {

/// A myopic arbitrageur's optimal block trade against a GDA.
struct ArbAction {
    double quantity;  ///< asset units bought, >= 0
    double profit;    ///< numeraire profit, >= 0 (0 whenever quantity is 0)
};

/// Steady-state arbitrage-profit and dollar-volume rates of a GDA.
/// Always satisfies arb_rate = vol_rate * lvf_plus.
struct GdaRates {
    double arb_rate;  ///< numeraire per second leaked to arbitrageurs
    double vol_rate;  ///< numeraire per second of volume sold
};

/// Total cost of buying q units against the auction queue at best ask `ask`:
/// ask * (r/lambda) * (e^{lambda q / r} - 1). Convex increasing in q with
/// marginal cost ask at q = 0. Throws overflow_error when lambda q / r > 700.
double gda_cost(double q, double ask, const GdaSpec& spec);

/// Optimal myopic block trade at log mispricing z: buy q* = -(r/lambda) z
/// when z <= 0 (nothing otherwise), collecting profit
/// (P r / lambda) (e^z - 1 - z). The profit term is evaluated as
/// expm1(z) - z so sub-1e-5 mispricings keep their leading z^2/2 accuracy.
ArbAction myopic_arb(double z, const GdaSpec& spec);

/// Closed-form steady-state rates:
/// vol_rate = P r delta / lambda and arb_rate = vol_rate * lvf_plus, with
/// delta = lambda + mu - sigma^2/2 >= 0 (both rates are zero at delta = 0).
GdaRates gda_rates(const GdaSpec& spec, const MarketParams& market,
                   const ChainParams& chain);

}  // namespace dalvf
