#include "dalvf/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dalvf/analytic.hpp"
#include "dalvf/bayes.hpp"

namespace dalvf {

namespace {

constexpr double kInvPhi = 0.6180339887498948482;

struct Best {
    double x = 0.0;
    double f = 0.0;
};

// Golden-section minimum on [lo, hi] assuming unimodality; the endpoints are
// always evaluated too, so monotone objectives land exactly on the boundary.
Best golden_min(const std::function<double(double)>& f, double lo, double hi) {
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    Best best{lo, f_lo};
    if (f_hi < best.f) best = {hi, f_hi};
    if (!(hi > lo)) return best;

    double a = lo, c = hi;
    double x1 = c - kInvPhi * (c - a);
    double x2 = a + kInvPhi * (c - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 120; ++it) {
        const double scale = std::max({1e-300, std::fabs(a), std::fabs(c)});
        if (c - a <= 1e-14 * scale) break;
        if (f1 < f2) {
            c = x2;
            x2 = x1;
            f2 = f1;
            x1 = c - kInvPhi * (c - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (c - a);
            f2 = f(x2);
        }
    }
    if (f1 < best.f) best = {x1, f1};
    if (f2 < best.f) best = {x2, f2};
    // Prefer an endpoint whenever it ties the interior candidate to rounding
    // noise; monotone objectives then land on the box corner exactly.
    const double tie = 1e-13 * std::max(1.0, std::fabs(best.f));
    if (f_lo <= best.f + tie) return {lo, f_lo};
    if (f_hi <= best.f + tie) return {hi, f_hi};
    return best;
}

// Coarse scan (optionally log-spaced) followed by golden refinement around
// the best coarse point. Unimodality is only assumed locally, which the scan
// protects.
Best scan_refine(const std::function<double(double)>& f, double lo, double hi,
                 int coarse, bool log_spaced) {
    if (!(hi > lo)) return Best{lo, f(lo)};
    std::vector<double> xs(static_cast<std::size_t>(coarse));
    const double a = log_spaced ? std::log(lo) : lo;
    const double b = log_spaced ? std::log(hi) : hi;
    int best_i = 0;
    double best_f = 0.0;
    for (int i = 0; i < coarse; ++i) {
        const double t = static_cast<double>(i) / (coarse - 1);
        double x = log_spaced ? std::exp(a + t * (b - a)) : a + t * (b - a);
        if (i == 0) x = lo;
        if (i == coarse - 1) x = hi;
        xs[static_cast<std::size_t>(i)] = x;
        const double fx = f(x);
        if (i == 0 || fx < best_f) {
            best_i = i;
            best_f = fx;
        }
    }
    const double rlo = xs[static_cast<std::size_t>(std::max(0, best_i - 1))];
    const double rhi =
        xs[static_cast<std::size_t>(std::min(coarse - 1, best_i + 1))];
    Best refined = golden_min(f, rlo, rhi);
    if (best_f < refined.f) refined = {xs[static_cast<std::size_t>(best_i)], best_f};
    return refined;
}

void check_box(const SearchBox& box) {
    if (!(box.delta_min > 0.0) || !(box.delta_max >= box.delta_min) ||
        !(box.z0_max >= box.z0_min) || !std::isfinite(box.z0_min) ||
        !std::isfinite(box.delta_max)) {
        throw std::invalid_argument("invalid search box");
    }
}

void check_theta(double theta) {
    if (!(theta >= 0.0) || !std::isfinite(theta)) {
        throw std::invalid_argument("theta must be >= 0 and finite");
    }
}

// Generic 2-D solve: outer variable x (z0 or log ask ratio), inner delta.
Best solve_2d(const std::function<double(double, double)>& objective,
              double x_lo, double x_hi, const SearchBox& box, double* delta_out) {
    const auto inner = [&](double x) {
        return scan_refine([&](double d) { return objective(x, d); },
                           box.delta_min, box.delta_max, 48, true);
    };
    const auto outer_f = [&](double x) { return inner(x).f; };
    Best outer = scan_refine(outer_f, x_lo, x_hi, 65, false);
    const Best in = inner(outer.x);
    *delta_out = in.x;
    return Best{outer.x, in.f};
}

}  // namespace

FrontierPoint solve_known_value(double theta, const MarketParams& market,
                                const ChainParams& chain, const SearchBox& box) {
    check_theta(theta);
    check_box(box);
    const double sigma = market.sigma;
    const double dt = chain.mean_interblock_time;
    // z0 > 0 is dominated: it leaves lvf at lvf_plus while adding z0/delta of
    // waiting. The scan therefore stops at zero, or at the box's lower edge
    // when the whole box sits above fair value.
    const double x_hi =
        box.z0_max <= 0.0 ? box.z0_max : std::max(0.0, box.z0_min);
    const double x_lo = box.z0_min;

    const auto objective = [&](double z0, double d) {
        return lvf(z0, d, sigma, dt) + theta * fill_time(z0, d, sigma, dt);
    };
    double delta_star = box.delta_min;
    const Best best = solve_2d(objective, x_lo, x_hi, box, &delta_star);

    FrontierPoint p{};
    p.theta = theta;
    p.z0 = best.x;
    p.delta = delta_star;
    p.lvf = lvf(best.x, delta_star, sigma, dt);
    p.fill_time = fill_time(best.x, delta_star, sigma, dt);
    p.objective = p.lvf + theta * p.fill_time;
    return p;
}

std::vector<FrontierPoint> frontier_sweep(const std::vector<double>& thetas,
                                          const MarketParams& market,
                                          const ChainParams& chain,
                                          const SearchBox& box) {
    if (thetas.empty()) {
        throw std::invalid_argument("thetas must be nonempty");
    }
    if (!std::is_sorted(thetas.begin(), thetas.end())) {
        throw std::invalid_argument("thetas must be sorted ascending");
    }
    std::vector<FrontierPoint> out;
    out.reserve(thetas.size());
    for (double theta : thetas) {
        out.push_back(solve_known_value(theta, market, chain, box));
    }
    return out;
}

FrontierPoint solve_unknown_value(double theta, double prior_sigma0,
                                  double value_mean, const MarketParams& market,
                                  const ChainParams& chain,
                                  const SearchBox& box) {
    check_theta(theta);
    check_box(box);
    if (!(prior_sigma0 > 0.0) || !std::isfinite(prior_sigma0)) {
        throw std::invalid_argument("prior_sigma0 must be > 0");
    }
    if (!(value_mean > 0.0) || !std::isfinite(value_mean)) {
        throw std::invalid_argument("value_mean must be > 0");
    }
    const double sigma = market.sigma;
    const double dt = chain.mean_interblock_time;

    // Decision variable x = log(A0 / value_mean); the prior mean of z0 is
    // then x + sigma0^2/2.
    const auto objective = [&](double x, double d) {
        const MispricingPrior prior(x + 0.5 * prior_sigma0 * prior_sigma0,
                                    prior_sigma0);
        return expected_lvf(prior, d, sigma, dt) +
               theta * expected_fill_time(prior, d, sigma, dt);
    };
    double delta_star = box.delta_min;
    const Best best = solve_2d(objective, box.z0_min, box.z0_max, box, &delta_star);

    const MispricingPrior prior(best.x + 0.5 * prior_sigma0 * prior_sigma0,
                                prior_sigma0);
    FrontierPoint p{};
    p.theta = theta;
    p.z0 = best.x;
    p.delta = delta_star;
    p.lvf = expected_lvf(prior, delta_star, sigma, dt);
    p.fill_time = expected_fill_time(prior, delta_star, sigma, dt);
    p.objective = p.lvf + theta * p.fill_time;
    return p;
}

GdaChoice solve_gda(double theta, const MarketParams& market,
                    const ChainParams& chain, double price, Interval r_box,
                    Interval delta_box) {
    check_theta(theta);
    if (!(price > 0.0) || !std::isfinite(price)) {
        throw std::invalid_argument("price must be > 0");
    }
    if (!(r_box.hi >= r_box.lo) || !(r_box.lo >= 0.0) || !(r_box.hi > 0.0)) {
        throw std::invalid_argument("invalid emission-rate box");
    }
    const double sigma = market.sigma;
    const double dt = chain.mean_interblock_time;
    const double lam_zero = market.mu - 0.5 * sigma * sigma;  // delta at lambda = 0

    double lo = std::max(delta_box.lo, std::max(0.0, lam_zero));
    const double hi = delta_box.hi;
    if (lo == lam_zero) {
        // The decay rate must stay strictly positive; step just inside.
        lo = lam_zero + 1e-12 * std::max(1.0, std::fabs(lam_zero));
    }
    if (!(hi >= lo)) {
        throw std::invalid_argument("infeasible delta box for gradual auction");
    }

    // Objective is linear in r with slope -theta * P * delta / lambda <= 0.
    const double r = r_box.hi;
    const auto vol = [&](double d) {
        const double lambda = d - market.mu + 0.5 * sigma * sigma;
        return price * r * d / lambda;
    };
    const auto objective = [&](double d) {
        return lvf_plus_limit(d, sigma, dt) - theta * vol(d);
    };
    const bool log_scan = lo > 0.0;
    const Best best = scan_refine(objective, lo, hi, 96, log_scan);

    GdaChoice out{};
    out.theta = theta;
    out.emission_rate = r;
    out.delta = best.x;
    out.lvf = lvf_plus_limit(best.x, sigma, dt);
    out.vol_rate = best.x > 0.0 ? vol(best.x) : 0.0;
    out.objective = out.lvf - theta * out.vol_rate;
    return out;
}

}  // namespace dalvf
