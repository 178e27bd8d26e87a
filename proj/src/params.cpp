#include "dalvf/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dalvf {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

}  // namespace

MarketParams::MarketParams(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
    require_finite(mu, "mu");
    require_finite(sigma, "sigma");
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("sigma must be > 0");
    }
}

ChainParams::ChainParams(double dt) : mean_interblock_time(dt) {
    require_finite(dt, "mean_interblock_time");
    if (!(dt > 0.0)) {
        throw std::invalid_argument("mean_interblock_time must be > 0");
    }
}

AuctionSpec::AuctionSpec(double z0_, double lambda_, const MarketParams& market)
    : z0(z0_), lambda(lambda_) {
    require_finite(z0, "z0");
    require_finite(lambda, "lambda");
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("lambda must be > 0");
    }
    const double delta = composite_drift(market, lambda);
    if (!(delta > 0.0)) {
        throw std::domain_error(
            "Assumption 1 violated: delta = lambda + mu - sigma^2/2 = " +
            std::to_string(delta) + " must be > 0");
    }
}

GdaSpec::GdaSpec(double emission_rate_, double lambda_, double price_,
                 const MarketParams& market)
    : emission_rate(emission_rate_), lambda(lambda_), price(price_) {
    require_finite(emission_rate, "emission_rate");
    require_finite(lambda, "lambda");
    require_finite(price, "price");
    if (!(emission_rate > 0.0)) {
        throw std::invalid_argument("emission_rate must be > 0");
    }
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("lambda must be > 0");
    }
    if (!(price > 0.0)) {
        throw std::invalid_argument("price must be > 0");
    }
    const double delta = composite_drift(market, lambda);
    if (!(delta >= 0.0)) {
        throw std::domain_error(
            "Assumption 1 violated: delta = lambda + mu - sigma^2/2 = " +
            std::to_string(delta) + " must be >= 0 for a gradual auction");
    }
}

double composite_drift(const MarketParams& market, double lambda) {
    return lambda + market.mu - 0.5 * market.sigma * market.sigma;
}

double convert_daily_vol(double sigma_daily) {
    if (!(sigma_daily >= 0.0)) {
        throw std::invalid_argument("daily volatility must be >= 0");
    }
    return sigma_daily / std::sqrt(kSecondsPerDay);
}

}  // namespace dalvf
