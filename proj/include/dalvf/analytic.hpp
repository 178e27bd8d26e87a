#pragma once

// Closed forms for the mispricing process z_t = log(A_t / P_t) observed at
// Poisson block times: its stationary law, the seller's expected relative
// loss ("loss-versus-fair", LVF), the expected time-to-fill, and the
// volatility-and-block-time lower bound on the loss.
//
// Arguments are scalars in canonical units: delta is the composite drift
// (per second), sigma the volatility (per sqrt-second), dt the mean
// interblock time (seconds).

namespace dalvf {

/// Two-sided exponential stationary law of the mispricing process:
/// density ~ pi_plus * Exp(zeta_plus) on z >= 0 and
/// pi_minus * Exp(zeta_minus) on -z > 0.
struct StationaryDist {
    double zeta_minus;  ///< rate of the negative branch
    double zeta_plus;   ///< rate of the nonnegative branch
    double pi_minus;    ///< mass on (-inf, 0)
    double pi_plus;     ///< mass on [0, inf)
};

/// Expected loss fraction and expected seconds-to-fill for one auction.
struct AuctionOutcome {
    double lvf;        ///< expected relative loss, in [0, 1]
    double fill_time;  ///< expected time until the filling block, seconds
};

/// Stationary distribution parameters (requires delta > 0).
///
/// zeta_minus = (delta/sigma^2) (sqrt(1 + 2 sigma^2/(delta^2 dt)) - 1) is
/// evaluated as (2/dt) / (delta + hypot(delta, sigma sqrt(2/dt))), which is
/// free of cancellation for every delta/sigma ratio and cannot overflow.
StationaryDist stationary_distribution(double delta, double sigma, double dt);

/// Expected relative loss when the auction starts at or above fair value
/// (z0 >= 0): LVF+ = 1 / (1 + zeta_minus). Independent of z0. Requires
/// delta > 0.
double lvf_plus(double delta, double sigma, double dt);

/// Expected relative loss for any starting mispricing. For z0 >= 0 this is
/// lvf_plus; for z0 < 0 the in-the-money branch additionally requires
/// 1 + dt (delta - sigma^2/2) > 0 (domain error otherwise).
double lvf(double z0, double delta, double sigma, double dt);

/// Expected time until the first block with z <= 0, in seconds.
/// Always >= dt; strictly increasing in z0, decreasing in delta.
double fill_time(double z0, double delta, double sigma, double dt);

/// Both outcome statistics in one call.
AuctionOutcome auction_outcome(double z0, double delta, double sigma, double dt);

/// Unavoidable loss floor from volatility and discrete blocks alone:
/// 1 / (1 + 1/(sigma sqrt(dt/2))), the delta -> 0 limit of lvf_plus.
double lvf_lower_bound(double sigma, double dt);

/// Largest mean interblock time whose loss floor stays at target_lvf:
/// the closed-form inverse dt = 2 (t/(1-t))^2 / sigma^2 with t = target_lvf.
double max_block_time_for_loss(double target_lvf, double sigma);

/// zeta_minus extended by continuity to delta == 0, where it equals
/// 1 / (sigma sqrt(dt/2)). Used by the gradual-auction formulas, which admit
/// the delta = 0 boundary.
double zeta_minus_limit(double delta, double sigma, double dt);

/// lvf_plus extended by continuity to delta == 0, where it equals
/// lvf_lower_bound(sigma, dt).
double lvf_plus_limit(double delta, double sigma, double dt);

}  // namespace dalvf
