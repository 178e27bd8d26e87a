#pragma once

// Canonical parameter types and unit conversions. Everything downstream works
// in SI seconds: drift and decay rates are per second, volatility is per
// square-root-second, and one day is exactly 86400 seconds.

namespace dalvf {

inline constexpr double kSecondsPerDay = 86400.0;

/// Geometric Brownian motion price dynamics: dP/P = mu dt + sigma dW.
struct MarketParams {
    double mu;     ///< price drift, per second
    double sigma;  ///< price volatility, per sqrt-second (> 0)

    MarketParams(double mu, double sigma);
};

/// Poisson block generation with the given mean interblock time (seconds).
struct ChainParams {
    double mean_interblock_time;  ///< seconds (> 0)

    explicit ChainParams(double mean_interblock_time);
};

/// A regular Dutch auction: initial log mispricing z0 = log(A0/P0) and
/// exponential ask decay rate lambda. Construction enforces Assumption 1:
/// the composite drift delta = lambda + mu - sigma^2/2 must be positive,
/// otherwise the auction is not guaranteed to trade in finite expected time.
struct AuctionSpec {
    double z0;      ///< initial log mispricing, dimensionless
    double lambda;  ///< ask decay rate, per second (> 0)

    AuctionSpec(double z0, double lambda, const MarketParams& market);
};

/// A gradual Dutch auction: continuous emission at rate r, per-auction decay
/// lambda, quoted against the current fundamental price. Requires the
/// composite drift delta = lambda + mu - sigma^2/2 to be nonnegative.
struct GdaSpec {
    double emission_rate;  ///< r, asset units per second (> 0)
    double lambda;         ///< decay rate, per second (> 0)
    double price;          ///< current fundamental price, numeraire per unit (> 0)

    GdaSpec(double emission_rate, double lambda, double price,
            const MarketParams& market);
};

/// Composite downward drift of the log mispricing process:
/// delta = lambda + mu - sigma^2/2. No positivity check here; callers that
/// need delta > 0 (or >= 0) enforce it themselves.
double composite_drift(const MarketParams& market, double lambda);

/// Convert a per-sqrt-day volatility to per-sqrt-second (divide by sqrt(86400)).
/// Rejects negative input.
double convert_daily_vol(double sigma_daily);

}  // namespace dalvf
