#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dalvf/params.hpp"
#include "dalvf/philox.hpp"

// Exact Monte Carlo for the block-observed mispricing process. There is no
// discretization anywhere: interblock gaps are exponential draws and the
// diffusion is advanced with exact Gaussian increments, so every estimate is
// unbiased and the only error is statistical.
//
// Determinism contract: a given SimConfig::seed produces bit-identical
// results for any thread count. Work is split into fixed units (paths or
// chains), each draws from its own counter-based stream, and partial results
// are combined in unit order.

namespace dalvf::mc {

struct SimConfig {
    std::size_t paths = 100000;        ///< paths (or total post-burn-in blocks for stationary runs)
    std::uint64_t seed = 0;
    std::size_t burn_in_blocks = 10000;        ///< discarded prefix per stationary chain
    std::size_t max_blocks_per_path = 1000000; ///< fill-time truncation guard
    int threads = 0;                   ///< 0 = hardware concurrency; never changes results
};

/// One path of the joint (mispricing, fundamental price) state.
struct PathState {
    double z = 0.0;          ///< current log mispricing
    double t = 0.0;          ///< elapsed time, seconds
    double log_price = 0.0;  ///< log fundamental price
};

struct SimResult {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
    std::size_t truncated = 0;  ///< paths that hit max_blocks_per_path
};

struct DutchEstimate {
    SimResult lvf;
    SimResult fill_time;
};

struct Histogram {
    double lo = 0.0;
    double bin_width = 0.0;
    std::vector<std::uint64_t> counts;
};

/// Empirical summary of the stationary law sampled at pre-block instants.
struct StationarySummary {
    SimResult pi_minus;            ///< fraction of pre-block states below zero
    SimResult mean_neg_excursion;  ///< E[-z | z < 0], estimates 1/zeta_minus
    SimResult mean_pos_excursion;  ///< E[z | z >= 0], estimates 1/zeta_plus
    Histogram histogram;           ///< thinned pre-block sample, equal-width bins
    std::vector<double> neg_sample;  ///< thinned |z| draws from the negative branch
    std::size_t blocks = 0;        ///< post-burn-in blocks used
    std::size_t chains = 0;
};

struct GdaEstimate {
    SimResult arb_rate;
    SimResult vol_rate;
};

/// Test functions for the stationarity residual: exponential on the negative
/// branch (linear above) or exponential on the nonnegative branch (linear
/// below), each with scale parameter alpha.
enum class GeneratorTestFn { NegBranchExp, PosBranchExp };

/// Advance one path to the next Poisson block: draws the gap
/// tau ~ Exp(dt) and one standard Gaussian that drives both the mispricing
/// (drift -delta) and the log price (drift mu - sigma^2/2). The transition is
/// exact; nothing happens between blocks that could require finer stepping.
void step_to_next_block(PathState& state, double delta, double mu, double sigma,
                        double dt, StreamRng& rng);

/// Per-path simulation of one Dutch auction: blocks are generated until the
/// first one with z <= 0, recording 1 - e^z and the elapsed time. Paths that
/// exceed max_blocks_per_path are counted as truncated and excluded from the
/// means. Requires delta > 0.
DutchEstimate simulate_dutch(double z0, double delta, double sigma, double dt,
                             const SimConfig& cfg);

/// Long-run chains of the reset process z <- max(0, z) observed just before
/// each block. cfg.paths is the total number of post-burn-in blocks pooled
/// across chains; standard errors come from across-chain spread, so they are
/// honest under the serial correlation within a chain.
StationarySummary sample_stationary(double delta, double sigma, double dt,
                                    const SimConfig& cfg);

/// Steady-state arbitrage-profit and volume rates of a GDA, estimated by
/// averaging the myopic block response over the stationary chain (price held
/// at spec.price) and dividing by the mean interblock time.
GdaEstimate simulate_gda(const GdaSpec& spec, const MarketParams& market,
                         const ChainParams& chain, const SimConfig& cfg);

/// Stationarity residual: the generator of the reset process applied to the
/// chosen test function, averaged over stationary pre-block samples. Should
/// be zero within noise. alpha must be positive, and below 2 delta / sigma^2
/// for the nonnegative-branch function.
SimResult generator_residual(double delta, double sigma, double dt,
                             GeneratorTestFn fn, double alpha,
                             const SimConfig& cfg);

}  // namespace dalvf::mc
