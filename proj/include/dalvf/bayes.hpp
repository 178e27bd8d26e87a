#pragma once

// Expected loss and fill time when the fundamental value is uncertain and the
// initial log mispricing carries a normal prior z0 ~ N(mu0, sigma0^2). Both
// expectations have closed forms built from normal CDF terms; the tails of
// the exp * Phi products are evaluated in scaled form (see normal.hpp) so
// arbitrarily tight or wide priors are safe.

namespace dalvf {

/// Normal prior on the initial log mispricing.
struct MispricingPrior {
    double mu0;     ///< prior mean of z0
    double sigma0;  ///< prior standard deviation of z0 (> 0)

    MispricingPrior(double mu0, double sigma0);
};

/// Map a lognormal belief about the fundamental value into the z0 prior:
/// with P0 ~ value_mean * exp(-sigma0^2/2 + sigma0 Z), the mispricing
/// z0 = log(ask0/P0) is normal with mean log(ask0/value_mean) + sigma0^2/2
/// and standard deviation sigma0.
MispricingPrior prior_from_value_belief(double ask0, double value_mean,
                                        double sigma0);

/// E[lvf(z0)] under the prior. Requires the z0 < 0 branch of lvf to be valid,
/// i.e. 1 + dt (delta - sigma^2/2) > 0.
double expected_lvf(const MispricingPrior& prior, double delta, double sigma,
                    double dt);

/// E[fill_time(z0)] under the prior; always >= dt.
double expected_fill_time(const MispricingPrior& prior, double delta,
                          double sigma, double dt);

}  // namespace dalvf
