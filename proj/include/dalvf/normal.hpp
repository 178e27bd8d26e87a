#pragma once

#include <cmath>

// Standard normal helpers. The CDF goes through erfc so the lower tail keeps
// full relative accuracy down to the underflow limit; the scaled-tail helper
// below handles the exp(huge) * Phi(-huge) products that appear in the
// prior-averaged closed forms without overflowing.

namespace dalvf {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;

inline double norm_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

inline double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

/// Mills ratio Phi(-w) / phi(w) for large w, by asymptotic expansion.
/// Accurate to ~1e-15 relative for w >= 26 (terms fall below 1e-16 by k ~ 8).
inline double mills_ratio_tail(double w) {
    const double w2 = w * w;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 24; ++k) {
        term *= -(2.0 * k - 1.0) / w2;
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return sum / w;
}

/// E[e^{c z} 1{z < 0}] for z ~ N(mu0, s0^2), c >= 0.
/// Equals exp(c mu0 + c^2 s0^2 / 2) * Phi(-(mu0/s0 + c s0)). When the Phi
/// argument is deep in the tail the two factors over/underflow individually,
/// but their product collapses to exp(-mu0^2 / (2 s0^2)) times a Mills-ratio
/// factor, which is what gets evaluated there. For w < 26 the direct product
/// is safe: the exponent equals (w^2 - m^2)/2 <= 338.
inline double gauss_exp_below_zero(double c, double mu0, double s0) {
    const double m = mu0 / s0;
    const double w = m + c * s0;
    if (w < 26.0) {
        return std::exp(c * mu0 + 0.5 * c * c * s0 * s0) * norm_cdf(-w);
    }
    const double tail = -0.5 * m * m;
    if (tail < -745.0) return 0.0;
    return std::exp(tail) * mills_ratio_tail(w) * kInvSqrt2Pi;
}

}  // namespace dalvf
