#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "quadrature.hpp"

// Independent oracles for the closed forms under test.
//
// The renewal oracle reconstructs the auction outcome functions from first
// principles: condition on the first block at an exponential time tau, where
// the mispricing is Gaussian with mean z0 - delta*tau and variance
// sigma^2*tau. A fill happens if that draw is <= 0; otherwise the run renews
// from the drawn state. The only analytic input is the first-passage mean
// z/delta for the above-water continuation; the loss and fill-time constants
// are solved as fixed points of the renewal equation, so nothing from the
// library's closed forms is reused.

namespace oracle {

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale > 0.0 ? std::fabs(a - b) / scale : 0.0;
}

inline double phi_cdf(double x) { return 0.5 * std::erfc(-x * 0.70710678118654752440); }

inline double phi_pdf(double x) {
    return 0.39894228040143267794 * std::exp(-0.5 * x * x);
}

namespace detail {

// Geometric panels over tau in (0, 60 dt], denser near zero where the
// Gaussian kernel degenerates.
inline std::vector<double> tau_panels(double dt) {
    std::vector<double> pts;
    for (double s : {1e-13, 1e-10, 1e-8, 1e-6, 1e-4, 1e-3, 1e-2, 0.1, 0.3, 1.0,
                     2.0, 4.0, 8.0, 16.0, 30.0, 60.0}) {
        pts.push_back(dt * s);
    }
    return pts;
}

struct RenewalKernels {
    // fill_loss(z0)  = E[(1 - e^{z_B}) 1{z_B <= 0}]
    // stay_prob(z0)  = P(z_B > 0)
    // drift_time(z0) = E[(z_B / delta) 1{z_B > 0}]
    double fill_loss, stay_prob, drift_time;
};

inline RenewalKernels kernels(double z0, double delta, double sigma, double dt,
                              double tol) {
    const auto pts = tau_panels(dt);
    const auto with_weight = [&](const std::function<double(double, double)>& g) {
        return integrate_panels(
            [&](double tau) {
                const double m = z0 - delta * tau;
                const double sd = sigma * std::sqrt(tau);
                return std::exp(-tau / dt) / dt * g(m, sd);
            },
            pts, tol);
    };
    RenewalKernels k{};
    k.fill_loss = with_weight([](double m, double sd) {
        // E[(1 - e^z) 1{z<=0}] for z ~ N(m, sd^2)
        return phi_cdf(-m / sd) -
               std::exp(m + 0.5 * sd * sd) * phi_cdf(-m / sd - sd);
    });
    k.stay_prob = with_weight([](double m, double sd) { return phi_cdf(m / sd); });
    k.drift_time = with_weight([&](double m, double sd) {
        // E[z 1{z>0}] / delta for z ~ N(m, sd^2)
        return (m * phi_cdf(m / sd) + sd * phi_pdf(m / sd)) / delta;
    });
    return k;
}

}  // namespace detail

/// Loss-versus-fair by the renewal equation. The flat continuation value is
/// solved from the z0 = 0 fixed point.
inline double renewal_lvf(double z0, double delta, double sigma, double dt,
                          double tol = 1e-12) {
    const auto k0 = detail::kernels(0.0, delta, sigma, dt, tol);
    const double flat = k0.fill_loss / (1.0 - k0.stay_prob);
    if (z0 == 0.0) return flat;
    const auto k = detail::kernels(z0, delta, sigma, dt, tol);
    return k.fill_loss + flat * k.stay_prob;
}

/// Time-to-fill by the renewal equation; the continuation after re-crossing
/// zero uses the first-passage mean z/delta plus the solved flat value.
inline double renewal_fill_time(double z0, double delta, double sigma, double dt,
                                double tol = 1e-12) {
    const auto k0 = detail::kernels(0.0, delta, sigma, dt, tol);
    // FT(0) = dt + E[(z_B/delta + FT(0)) 1{z_B>0}], solved for FT(0).
    const double ft0 = (dt + k0.drift_time) / (1.0 - k0.stay_prob);
    if (z0 == 0.0) return ft0;
    const auto k = detail::kernels(z0, delta, sigma, dt, tol);
    return dt + k.drift_time + ft0 * k.stay_prob;
}

/// E[f(z0)] against a N(mu0, sigma0^2) prior by quadrature. `layer_rate`
/// marks the width 1/layer_rate of any boundary layer of f below zero so the
/// panels can absorb it (pass 0 when f is smooth).
inline double prior_expectation(const std::function<double(double)>& f,
                                double mu0, double sigma0, double layer_rate,
                                double tol) {
    const double lo = mu0 - 12.0 * sigma0;
    const double hi = mu0 + 12.0 * sigma0;
    const double inv_s = 1.0 / sigma0;
    const auto g = [&](double z) {
        const double u = (z - mu0) * inv_s;
        return f(z) * phi_pdf(u) * inv_s;
    };
    std::vector<double> pts;
    pts.push_back(lo);
    if (lo < 0.0 && hi > 0.0) {
        if (layer_rate > 0.0) {
            std::vector<double> layer;
            for (double w = 1.0 / layer_rate; w < -lo; w *= 4.0) {
                layer.push_back(-w);
            }
            std::sort(layer.begin(), layer.end());
            for (double p : layer) {
                if (p > lo && p < 0.0) pts.push_back(p);
            }
        }
        pts.push_back(0.0);
    }
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return integrate_panels(g, pts, tol);
}

/// Kolmogorov-Smirnov distance of a sample against Exponential(rate).
inline double ks_statistic_exponential(std::vector<double> sample, double rate) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double cdf = -std::expm1(-rate * sample[i]);
        const double lo = cdf - static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n - cdf;
        d = std::max(d, std::max(lo, hi));
    }
    return d;
}

}  // namespace oracle
