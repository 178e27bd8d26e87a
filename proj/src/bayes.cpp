#include "dalvf/bayes.hpp"

#include <cmath>
#include <stdexcept>

#include "dalvf/analytic.hpp"
#include "dalvf/normal.hpp"

namespace dalvf {

MispricingPrior::MispricingPrior(double mu0_, double sigma0_)
    : mu0(mu0_), sigma0(sigma0_) {
    if (!std::isfinite(mu0)) {
        throw std::invalid_argument("mu0 must be finite");
    }
    if (!(sigma0 > 0.0) || !std::isfinite(sigma0)) {
        throw std::invalid_argument("sigma0 must be > 0 and finite");
    }
}

MispricingPrior prior_from_value_belief(double ask0, double value_mean,
                                        double sigma0) {
    if (!(ask0 > 0.0) || !std::isfinite(ask0)) {
        throw std::domain_error("ask0 must be positive and finite");
    }
    if (!(value_mean > 0.0) || !std::isfinite(value_mean)) {
        throw std::domain_error("value_mean must be positive and finite");
    }
    return MispricingPrior(std::log(ask0 / value_mean) + 0.5 * sigma0 * sigma0,
                           sigma0);
}

double expected_lvf(const MispricingPrior& prior, double delta, double sigma,
                    double dt) {
    const StationaryDist sd = stationary_distribution(delta, sigma, dt);
    const double u = dt * (delta - 0.5 * sigma * sigma);
    if (!(1.0 + u > 0.0)) {
        throw std::domain_error(
            "expected_lvf: 1 + dt (delta - sigma^2/2) must be positive");
    }
    const double plus = 1.0 / (1.0 + sd.zeta_minus);
    const double rate = sd.zeta_minus + sd.zeta_plus;
    const double m = prior.mu0 / prior.sigma0;
    // E over the z0 >= 0 mass plus the constant part of the z0 < 0 branch.
    double result = plus + (1.0 - plus) * norm_cdf(-m);
    // - E[e^{z0} 1{z0<0}] / (1+u)
    result -= gauss_exp_below_zero(1.0, prior.mu0, prior.sigma0) / (1.0 + u);
    // + (LVF+ - u/(1+u)) E[e^{rate z0} 1{z0<0}]
    result += (plus - u / (1.0 + u)) *
              gauss_exp_below_zero(rate, prior.mu0, prior.sigma0);
    return result;
}

double expected_fill_time(const MispricingPrior& prior, double delta,
                          double sigma, double dt) {
    const StationaryDist sd = stationary_distribution(delta, sigma, dt);
    const double ft0 = fill_time(0.0, delta, sigma, dt);
    const double rate = sd.zeta_minus + sd.zeta_plus;
    const double m = prior.mu0 / prior.sigma0;
    double result = dt;
    result += prior.sigma0 / delta * norm_pdf(m);
    result += (ft0 - dt + prior.mu0 / delta) * norm_cdf(m);
    result += (ft0 - dt) * gauss_exp_below_zero(rate, prior.mu0, prior.sigma0);
    return result;
}

}  // namespace dalvf
