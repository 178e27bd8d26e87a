#include "dalvf/mcsim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "dalvf/gda.hpp"

namespace dalvf::mc {

namespace {

constexpr std::size_t kDutchChunks = 64;
constexpr std::size_t kChains = 32;
constexpr std::size_t kKeptTargetSamples = 16384;

// Disjoint stream spaces per estimator so runs sharing a seed stay independent.
constexpr std::uint64_t kTagDutch = 0;
constexpr std::uint64_t kTagStationary = 1;
constexpr std::uint64_t kTagGda = 2;
constexpr std::uint64_t kTagGenerator = 3;

std::uint64_t stream_id(std::uint64_t tag, std::uint64_t index) {
    return (tag << 56) | index;
}

void check_config(const SimConfig& cfg) {
    if (cfg.paths < 1) {
        throw std::invalid_argument("SimConfig: paths must be >= 1");
    }
    if (cfg.max_blocks_per_path < 1) {
        throw std::invalid_argument("SimConfig: max_blocks_per_path must be >= 1");
    }
}

void check_dynamics(double delta, double sigma, double dt) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw std::domain_error("delta must be positive (Assumption 1)");
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::domain_error("sigma must be positive");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::domain_error("dt must be positive");
    }
}

// Run `work(unit)` for every unit index. Units are fixed ahead of time and
// own their results, so the thread count cannot influence any output.
void parallel_units(std::size_t units, int threads,
                    const std::function<void(std::size_t)>& work) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    std::size_t n_threads = threads > 0 ? static_cast<std::size_t>(threads) : hw;
    n_threads = std::min(n_threads, units);
    if (n_threads <= 1) {
        for (std::size_t u = 0; u < units; ++u) work(u);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t u = next.fetch_add(1);
                if (u >= units) break;
                work(u);
            }
        });
    }
    for (auto& th : pool) th.join();
}

SimResult from_sums(double sum, double sum_sq, std::size_t n,
                    std::size_t truncated) {
    SimResult r{};
    r.samples = n;
    r.truncated = truncated;
    if (n == 0) {
        r.mean = std::numeric_limits<double>::quiet_NaN();
        r.std_error = std::numeric_limits<double>::quiet_NaN();
        return r;
    }
    r.mean = sum / static_cast<double>(n);
    if (n > 1) {
        const double var =
            std::max(0.0, (sum_sq - static_cast<double>(n) * r.mean * r.mean) /
                              static_cast<double>(n - 1));
        r.std_error = std::sqrt(var / static_cast<double>(n));
    }
    return r;
}

// Pool per-chain means: the estimate is their average and the standard error
// comes from their spread, which stays valid under within-chain correlation.
SimResult from_chain_means(const std::vector<double>& chain_means,
                           std::size_t samples) {
    double sum = 0.0;
    std::size_t c = 0;
    for (double m : chain_means) {
        if (std::isfinite(m)) {
            sum += m;
            ++c;
        }
    }
    SimResult r{};
    r.samples = samples;
    if (c == 0) {
        r.mean = std::numeric_limits<double>::quiet_NaN();
        r.std_error = std::numeric_limits<double>::quiet_NaN();
        return r;
    }
    r.mean = sum / static_cast<double>(c);
    if (c > 1) {
        double ss = 0.0;
        for (double m : chain_means) {
            if (std::isfinite(m)) ss += (m - r.mean) * (m - r.mean);
        }
        r.std_error = std::sqrt(ss / static_cast<double>(c - 1) /
                                static_cast<double>(c));
    }
    return r;
}

// Drive kChains independent reset chains; per_block(chain, z_pre) sees every
// post-burn-in pre-block state in order within its chain.
void run_chains(double delta, double sigma, double dt, const SimConfig& cfg,
                std::uint64_t tag, std::size_t blocks_per_chain,
                const std::function<void(std::size_t, double)>& per_block) {
    parallel_units(kChains, cfg.threads, [&](std::size_t c) {
        StreamRng rng(cfg.seed, stream_id(tag, c));
        PathState st{};  // z = 0 is a natural renewal point of the chain
        const std::size_t total = cfg.burn_in_blocks + blocks_per_chain;
        for (std::size_t b = 0; b < total; ++b) {
            step_to_next_block(st, delta, 0.0, sigma, dt, rng);
            const double z_pre = st.z;
            if (b >= cfg.burn_in_blocks) per_block(c, z_pre);
            st.z = std::max(0.0, z_pre);
        }
    });
}

std::size_t blocks_per_chain_for(const SimConfig& cfg) {
    return (cfg.paths + kChains - 1) / kChains;
}

}  // namespace

void step_to_next_block(PathState& state, double delta, double mu, double sigma,
                        double dt, StreamRng& rng) {
    const double tau = rng.exponential(dt);
    const double shock = sigma * std::sqrt(tau) * rng.normal();
    state.z += -delta * tau + shock;
    state.log_price += (mu - 0.5 * sigma * sigma) * tau + shock;
    state.t += tau;
}

DutchEstimate simulate_dutch(double z0, double delta, double sigma, double dt,
                             const SimConfig& cfg) {
    check_dynamics(delta, sigma, dt);
    check_config(cfg);
    if (!std::isfinite(z0)) throw std::invalid_argument("z0 must be finite");

    struct Chunk {
        double sum_l = 0.0, sum_l2 = 0.0, sum_t = 0.0, sum_t2 = 0.0;
        std::size_t n = 0, truncated = 0;
    };
    const std::size_t chunks = std::min(kDutchChunks, cfg.paths);
    std::vector<Chunk> slot(chunks);

    parallel_units(chunks, cfg.threads, [&](std::size_t c) {
        const std::size_t lo = cfg.paths * c / chunks;
        const std::size_t hi = cfg.paths * (c + 1) / chunks;
        Chunk acc;
        for (std::size_t p = lo; p < hi; ++p) {
            StreamRng rng(cfg.seed, stream_id(kTagDutch, p));
            PathState st{z0, 0.0, 0.0};
            bool filled = false;
            for (std::size_t b = 0; b < cfg.max_blocks_per_path; ++b) {
                step_to_next_block(st, delta, 0.0, sigma, dt, rng);
                if (st.z <= 0.0) {
                    filled = true;
                    break;
                }
            }
            if (!filled) {
                ++acc.truncated;
                continue;
            }
            const double loss = -std::expm1(st.z);
            acc.sum_l += loss;
            acc.sum_l2 += loss * loss;
            acc.sum_t += st.t;
            acc.sum_t2 += st.t * st.t;
            ++acc.n;
        }
        slot[c] = acc;
    });

    Chunk total;
    for (const Chunk& c : slot) {
        total.sum_l += c.sum_l;
        total.sum_l2 += c.sum_l2;
        total.sum_t += c.sum_t;
        total.sum_t2 += c.sum_t2;
        total.n += c.n;
        total.truncated += c.truncated;
    }
    DutchEstimate est{};
    est.lvf = from_sums(total.sum_l, total.sum_l2, total.n, total.truncated);
    est.fill_time = from_sums(total.sum_t, total.sum_t2, total.n, total.truncated);
    return est;
}

StationarySummary sample_stationary(double delta, double sigma, double dt,
                                    const SimConfig& cfg) {
    check_dynamics(delta, sigma, dt);
    check_config(cfg);

    const std::size_t per_chain = blocks_per_chain_for(cfg);
    const std::size_t total_blocks = per_chain * kChains;
    const std::size_t thin =
        std::max<std::size_t>(1, total_blocks / kKeptTargetSamples);

    struct ChainStat {
        std::size_t n = 0, n_neg = 0, n_pos = 0;
        double sum_neg = 0.0, sum_pos = 0.0;
        std::vector<double> kept;
    };
    std::vector<ChainStat> stat(kChains);

    run_chains(delta, sigma, dt, cfg, kTagStationary, per_chain,
               [&](std::size_t c, double z) {
                   ChainStat& s = stat[c];
                   if (z < 0.0) {
                       ++s.n_neg;
                       s.sum_neg += -z;
                   } else {
                       ++s.n_pos;
                       s.sum_pos += z;
                   }
                   if (s.n % thin == 0) s.kept.push_back(z);
                   ++s.n;
               });

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> pi_means, neg_means, pos_means;
    std::size_t tot_neg = 0, tot_pos = 0;
    std::vector<double> kept_all;
    for (const ChainStat& s : stat) {
        pi_means.push_back(s.n > 0 ? static_cast<double>(s.n_neg) / s.n : nan);
        neg_means.push_back(s.n_neg > 0 ? s.sum_neg / s.n_neg : nan);
        pos_means.push_back(s.n_pos > 0 ? s.sum_pos / s.n_pos : nan);
        tot_neg += s.n_neg;
        tot_pos += s.n_pos;
        kept_all.insert(kept_all.end(), s.kept.begin(), s.kept.end());
    }

    StationarySummary out{};
    out.pi_minus = from_chain_means(pi_means, total_blocks);
    out.mean_neg_excursion = from_chain_means(neg_means, tot_neg);
    out.mean_pos_excursion = from_chain_means(pos_means, tot_pos);
    out.blocks = total_blocks;
    out.chains = kChains;

    for (double z : kept_all) {
        if (z < 0.0) out.neg_sample.push_back(-z);
    }
    if (!kept_all.empty()) {
        const auto [mn, mx] = std::minmax_element(kept_all.begin(), kept_all.end());
        const std::size_t bins = 64;
        double width = (*mx - *mn) / static_cast<double>(bins);
        if (!(width > 0.0)) width = 1.0;
        out.histogram.lo = *mn;
        out.histogram.bin_width = width;
        out.histogram.counts.assign(bins, 0);
        for (double z : kept_all) {
            auto b = static_cast<std::size_t>((z - *mn) / width);
            if (b >= bins) b = bins - 1;
            ++out.histogram.counts[b];
        }
    }
    return out;
}

GdaEstimate simulate_gda(const GdaSpec& spec, const MarketParams& market,
                         const ChainParams& chain, const SimConfig& cfg) {
    const double delta = composite_drift(market, spec.lambda);
    // The reset chain is only positive recurrent for delta > 0; the delta = 0
    // boundary has no stationary law to sample.
    check_dynamics(delta, market.sigma, chain.mean_interblock_time);
    check_config(cfg);

    const double dt = chain.mean_interblock_time;
    const std::size_t per_chain = blocks_per_chain_for(cfg);

    struct ChainStat {
        double sum_arb = 0.0, sum_vol = 0.0;
        std::size_t n = 0;
    };
    std::vector<ChainStat> stat(kChains);

    run_chains(delta, market.sigma, dt, cfg, kTagGda, per_chain,
               [&](std::size_t c, double z) {
                   const ArbAction act = myopic_arb(z, spec);
                   stat[c].sum_arb += act.profit;
                   stat[c].sum_vol += spec.price * act.quantity;
                   ++stat[c].n;
               });

    std::vector<double> arb_means, vol_means;
    std::size_t total = 0;
    for (const ChainStat& s : stat) {
        arb_means.push_back(s.n > 0 ? s.sum_arb / (s.n * dt)
                                    : std::numeric_limits<double>::quiet_NaN());
        vol_means.push_back(s.n > 0 ? s.sum_vol / (s.n * dt)
                                    : std::numeric_limits<double>::quiet_NaN());
        total += s.n;
    }
    GdaEstimate est{};
    est.arb_rate = from_chain_means(arb_means, total);
    est.vol_rate = from_chain_means(vol_means, total);
    return est;
}

SimResult generator_residual(double delta, double sigma, double dt,
                             GeneratorTestFn fn, double alpha,
                             const SimConfig& cfg) {
    check_dynamics(delta, sigma, dt);
    check_config(cfg);
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("alpha must be positive and finite");
    }
    if (fn == GeneratorTestFn::PosBranchExp &&
        !(alpha < 2.0 * delta / (sigma * sigma))) {
        throw std::invalid_argument(
            "alpha must be below 2 delta / sigma^2 for the nonnegative-branch "
            "test function");
    }

    const double half_sig2_a2 = 0.5 * sigma * sigma * alpha * alpha;
    const double da = delta * alpha;
    const double inv_dt = 1.0 / dt;

    // Generator applied to the two test functions:
    //   f-(z) = e^{alpha z} below 0, 1 + alpha z above;
    //   f+(z) = e^{-alpha z} above 0, 1 - alpha z below.
    auto apply = [&](double z) -> double {
        if (fn == GeneratorTestFn::NegBranchExp) {
            if (z < 0.0) {
                const double e = std::exp(alpha * z);
                return (half_sig2_a2 - da) * e + inv_dt * (1.0 - e);
            }
            return -da;
        }
        if (z >= 0.0) {
            return (half_sig2_a2 + da) * std::exp(-alpha * z);
        }
        return da + inv_dt * alpha * z;
    };

    const std::size_t per_chain = blocks_per_chain_for(cfg);
    struct ChainStat {
        double sum = 0.0;
        std::size_t n = 0;
    };
    std::vector<ChainStat> stat(kChains);
    run_chains(delta, sigma, dt, cfg, kTagGenerator, per_chain,
               [&](std::size_t c, double z) {
                   stat[c].sum += apply(z);
                   ++stat[c].n;
               });

    std::vector<double> means;
    std::size_t total = 0;
    for (const ChainStat& s : stat) {
        means.push_back(s.n > 0 ? s.sum / s.n
                                : std::numeric_limits<double>::quiet_NaN());
        total += s.n;
    }
    return from_chain_means(means, total);
}

}  // namespace dalvf::mc
