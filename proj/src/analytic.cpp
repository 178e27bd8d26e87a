#include "dalvf/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dalvf {

namespace {

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string(name) + " must be positive and finite");
    }
}

void check_delta_positive(double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw std::domain_error(
            "Assumption 1 violated: delta = lambda + mu - sigma^2/2 must be "
            "positive");
    }
}

void check_common(double delta, double sigma, double dt) {
    check_delta_positive(delta);
    check_positive(sigma, "sigma");
    check_positive(dt, "dt");
}

// hypot(delta, sigma sqrt(2/dt)) = sqrt(delta^2 + 2 sigma^2 / dt); the root
// that every rate below is built from. Using hypot avoids overflow and keeps
// the small-delta limit exact.
double drift_root(double delta, double sigma, double dt) {
    return std::hypot(delta, sigma * std::sqrt(2.0 / dt));
}

// Relaxation rate of the in-the-money (z0 < 0) branch. Equals
// zeta_minus + zeta_plus = (delta + drift_root)/sigma^2; with this rate the
// z0 < 0 expressions paste C^1-smoothly onto the z0 >= 0 ones at z0 = 0
// (e.g. d/dz0 fill_time -> 1/delta from both sides), and they match the
// block-by-block renewal integral (see the oracle tests).
double in_money_rate(double delta, double sigma, double dt) {
    return (delta + drift_root(delta, sigma, dt)) / (sigma * sigma);
}

double exp_clamped(double x) { return x < -745.0 ? 0.0 : std::exp(x); }

}  // namespace

double zeta_minus_limit(double delta, double sigma, double dt) {
    if (!(delta >= 0.0) || !std::isfinite(delta)) {
        throw std::domain_error("delta must be >= 0 and finite");
    }
    check_positive(sigma, "sigma");
    check_positive(dt, "dt");
    // (delta/sigma^2)(sqrt(1 + 2 sigma^2/(delta^2 dt)) - 1), rationalized so
    // the difference of near-equal square roots never appears.
    return (2.0 / dt) / (delta + drift_root(delta, sigma, dt));
}

StationaryDist stationary_distribution(double delta, double sigma, double dt) {
    check_common(delta, sigma, dt);
    const double h = drift_root(delta, sigma, dt);
    StationaryDist d{};
    d.zeta_minus = (2.0 / dt) / (delta + h);
    d.zeta_plus = 2.0 * delta / (sigma * sigma);
    d.pi_minus = 2.0 * delta / (delta + h);  // = delta * dt * zeta_minus
    d.pi_plus = 1.0 - d.pi_minus;
    return d;
}

double lvf_plus(double delta, double sigma, double dt) {
    check_common(delta, sigma, dt);
    return 1.0 / (1.0 + zeta_minus_limit(delta, sigma, dt));
}

double lvf_plus_limit(double delta, double sigma, double dt) {
    return 1.0 / (1.0 + zeta_minus_limit(delta, sigma, dt));
}

double lvf(double z0, double delta, double sigma, double dt) {
    check_common(delta, sigma, dt);
    if (!std::isfinite(z0)) throw std::domain_error("z0 must be finite");
    if (z0 >= 0.0) {
        return 1.0 / (1.0 + zeta_minus_limit(delta, sigma, dt));
    }
    const double u = dt * (delta - 0.5 * sigma * sigma);
    if (!(1.0 + u > 0.0)) {
        throw std::domain_error(
            "lvf: 1 + dt (delta - sigma^2/2) must be positive for z0 < 0");
    }
    const double plus = 1.0 / (1.0 + zeta_minus_limit(delta, sigma, dt));
    const double coeff = plus - u / (1.0 + u);
    const double rate = in_money_rate(delta, sigma, dt);
    return 1.0 - std::exp(z0) / (1.0 + u) + coeff * exp_clamped(rate * z0);
}

double fill_time(double z0, double delta, double sigma, double dt) {
    check_common(delta, sigma, dt);
    if (!std::isfinite(z0)) throw std::domain_error("z0 must be finite");
    const double h = drift_root(delta, sigma, dt);
    if (z0 >= 0.0) {
        // z0/delta + (dt/2)(1 + sqrt(1 + 2 sigma^2/(delta^2 dt)))
        return z0 / delta + 0.5 * dt * (delta + h) / delta;
    }
    // dt + (dt/2)(sqrt(...) - 1) e^{rate z0}; the bracket rationalizes to
    // sigma^2 / (delta (delta + h)).
    const double excess = sigma * sigma / (delta * (delta + h));
    const double rate = in_money_rate(delta, sigma, dt);
    return dt + excess * exp_clamped(rate * z0);
}

AuctionOutcome auction_outcome(double z0, double delta, double sigma, double dt) {
    return AuctionOutcome{lvf(z0, delta, sigma, dt),
                          fill_time(z0, delta, sigma, dt)};
}

double lvf_lower_bound(double sigma, double dt) {
    check_positive(sigma, "sigma");
    check_positive(dt, "dt");
    return 1.0 / (1.0 + 1.0 / (sigma * std::sqrt(0.5 * dt)));
}

double max_block_time_for_loss(double target_lvf, double sigma) {
    check_positive(sigma, "sigma");
    if (!(target_lvf > 0.0 && target_lvf < 1.0)) {
        throw std::domain_error("target_lvf must lie in (0, 1)");
    }
    const double odds = target_lvf / (1.0 - target_lvf);
    return 2.0 * odds * odds / (sigma * sigma);
}

}  // namespace dalvf
