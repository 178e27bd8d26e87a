#pragma once

#include <vector>

#include "dalvf/params.hpp"

// Parameter optimization: scalarized loss/speed tradeoffs for regular
// auctions (known and uncertain value) and the loss/volume tradeoff for
// gradual auctions. Solvers are a coarse scan plus golden-section refinement
// with explicit endpoint checks; brute-force grids stay in the test suite as
// the oracle.

namespace dalvf {

/// Rectangular search region for (z0, delta). For the uncertain-value solver
/// the z0 bounds are read as bounds on log(A0 / value_mean).
struct SearchBox {
    double delta_min = 1e-7;
    double delta_max = 1e-2;
    double z0_min = -0.05;
    double z0_max = 0.0;

    static SearchBox known_value_default() { return SearchBox{}; }
    static SearchBox unknown_value_default() {
        return SearchBox{1e-7, 1e-2, -0.05, 0.05};
    }
};

struct FrontierPoint {
    double theta;      ///< tradeoff weight
    double z0;         ///< chosen mispricing (log ask ratio for unknown value)
    double delta;      ///< chosen composite drift, per second
    double lvf;        ///< resulting loss fraction (expected, for unknown value)
    double fill_time;  ///< resulting seconds (expected, for unknown value)
    double objective;  ///< lvf + theta * fill_time
};

/// Closed interval; used for the gradual-auction decision boxes.
struct Interval {
    double lo;
    double hi;
};

struct GdaChoice {
    double theta;
    double emission_rate;
    double delta;
    double lvf;       ///< per-dollar loss at the chosen drift
    double vol_rate;  ///< numeraire per second sold
    double objective; ///< lvf - theta * vol_rate
};

/// Minimize lvf(z0) + theta * fill_time(z0) over the box. Starting above fair
/// value is dominated (it adds waiting without reducing loss), so the scan
/// covers z0 <= 0 only.
FrontierPoint solve_known_value(double theta, const MarketParams& market,
                                const ChainParams& chain, const SearchBox& box);

/// One point per theta; thetas must be nonempty, nonnegative, ascending.
/// Along the sweep lvf is nondecreasing and fill_time nonincreasing.
std::vector<FrontierPoint> frontier_sweep(const std::vector<double>& thetas,
                                          const MarketParams& market,
                                          const ChainParams& chain,
                                          const SearchBox& box);

/// Minimize expected_lvf + theta * expected_fill_time over the initial ask
/// and drift when the value carries a lognormal prior with log-sd
/// prior_sigma0 around value_mean. The returned z0 is log(A0 / value_mean).
FrontierPoint solve_unknown_value(double theta, double prior_sigma0,
                                  double value_mean, const MarketParams& market,
                                  const ChainParams& chain,
                                  const SearchBox& box);

/// Minimize lvf_plus(delta) - theta * vol_rate(r, delta) subject to
/// delta >= max(0, mu - sigma^2/2) and a positive decay rate. The objective
/// is linear in r with nonpositive coefficient, so r sits at r_box.hi.
GdaChoice solve_gda(double theta, const MarketParams& market,
                    const ChainParams& chain, double price, Interval r_box,
                    Interval delta_box);

}  // namespace dalvf
