#include "dalvf/gda.hpp"

#include <cmath>
#include <stdexcept>

#include "dalvf/analytic.hpp"

namespace dalvf {

double gda_cost(double q, double ask, const GdaSpec& spec) {
    if (!(q >= 0.0) || !std::isfinite(q)) {
        throw std::domain_error("gda_cost: q must be >= 0 and finite");
    }
    if (!(ask > 0.0) || !std::isfinite(ask)) {
        throw std::domain_error("gda_cost: ask must be positive and finite");
    }
    const double x = spec.lambda * q / spec.emission_rate;
    if (x > 700.0) {
        throw std::overflow_error("gda_cost: lambda * q / r exceeds 700");
    }
    return ask * (spec.emission_rate / spec.lambda) * std::expm1(x);
}

ArbAction myopic_arb(double z, const GdaSpec& spec) {
    if (!std::isfinite(z)) {
        throw std::domain_error("myopic_arb: z must be finite");
    }
    if (z >= 0.0) return ArbAction{0.0, 0.0};
    const double scale = spec.emission_rate / spec.lambda;
    const double quantity = -scale * z;
    const double profit = spec.price * scale * (std::expm1(z) - z);
    return ArbAction{quantity, profit};
}

GdaRates gda_rates(const GdaSpec& spec, const MarketParams& market,
                   const ChainParams& chain) {
    const double delta = composite_drift(market, spec.lambda);
    if (!(delta >= 0.0)) {
        throw std::domain_error(
            "Assumption 1 violated: delta = lambda + mu - sigma^2/2 must be >= 0");
    }
    const double dt = chain.mean_interblock_time;
    if (delta == 0.0) return GdaRates{0.0, 0.0};
    const double vol = spec.price * spec.emission_rate * delta / spec.lambda;
    const double arb = vol * lvf_plus_limit(delta, market.sigma, dt);
    return GdaRates{arb, vol};
}

}  // namespace dalvf
