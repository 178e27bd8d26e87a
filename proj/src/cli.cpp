#include "dalvf/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dalvf/analytic.hpp"
#include "dalvf/bayes.hpp"
#include "dalvf/frontier.hpp"
#include "dalvf/gda.hpp"
#include "dalvf/mcsim.hpp"
#include "dalvf/params.hpp"

namespace dalvf::cli {

namespace {

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string num4(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

// Shared flag bundle. Which pieces a subcommand wires up varies, so the
// resolution helpers tolerate absent fields.
struct Opts {
    double mu = 0.0;
    double vol_daily = -1.0;
    double vol_sec = -1.0;
    double block_time = 12.0;
    double decay = -1.0;
    double delta_in = -1.0;
    double z0 = 0.0;
    bool bp = false;

    bool has_vol_daily = false, has_vol_sec = false;
    bool has_decay = false, has_delta = false;

    double sigma() const {
        if (has_vol_daily == has_vol_sec) {
            throw CLI::ValidationError(
                "exactly one of --vol-daily / --vol-sec is required");
        }
        return has_vol_daily ? convert_daily_vol(vol_daily) : vol_sec;
    }

    MarketParams market() const { return MarketParams(mu, sigma()); }

    ChainParams chain() const { return ChainParams(block_time); }

    // Composite drift from either --decay-per-sec (through Assumption 1
    // validation) or a direct --delta.
    double resolve_delta(const MarketParams& m) const {
        if (has_decay == has_delta) {
            throw CLI::ValidationError(
                "exactly one of --decay-per-sec / --delta is required");
        }
        if (has_decay) {
            const AuctionSpec spec(0.0, decay, m);  // validates Assumption 1
            return composite_drift(m, spec.lambda);
        }
        return delta_in;
    }

    double mispricing() const { return bp ? z0 * 1e-4 : z0; }
};

void add_market_flags(CLI::App* cmd, Opts& o) {
    cmd->add_option("--mu", o.mu, "price drift, per second (default 0)");
    cmd->add_option("--vol-daily", o.vol_daily,
                    "volatility per sqrt-day (converted via 86400 s/day)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--vol-sec", o.vol_sec, "volatility per sqrt-second");
    cmd->add_option("--block-time", o.block_time,
                    "mean interblock time, seconds (default 12)");
}

void add_drift_flags(CLI::App* cmd, Opts& o) {
    cmd->add_option("--decay-per-sec", o.decay, "ask decay rate lambda, per second");
    cmd->add_option("--delta", o.delta_in,
                    "composite drift delta = lambda + mu - sigma^2/2, per second");
}

void finish_presence(CLI::App* cmd, Opts& o) {
    const auto present = [&](const char* name) {
        const CLI::Option* opt = cmd->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    o.has_vol_daily = present("--vol-daily");
    o.has_vol_sec = present("--vol-sec");
    o.has_decay = present("--decay-per-sec");
    o.has_delta = present("--delta");
}

struct CsvSink {
    std::string path;

    void write(std::ostream& out, const std::string& header,
               const std::vector<std::vector<double>>& rows) const {
        std::string body = header + "\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) body += ',';
                body += num17(r[i]);
            }
            body += '\n';
        }
        if (path.empty()) {
            out << body;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f << body;
        out << "wrote " << rows.size() << " rows to " << path << "\n";
    }
};

void print_kv(std::ostream& out, const char* key, const std::string& value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "  %-12s %s", key, value.c_str());
    out << buf << "\n";
}

// ------------------------- simulation reporting ----------------------------

struct Row {
    std::string name;
    double closed;
    double mc;
    double se;
};

double zscore(const Row& r) {
    if (r.se > 0.0) return (r.mc - r.closed) / r.se;
    return r.mc == r.closed ? 0.0 : std::numeric_limits<double>::infinity();
}

void print_rows(std::ostream& out, const std::vector<Row>& rows) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-28s %16s %16s %12s %8s", "quantity",
                  "closed form", "mc mean", "se", "z");
    out << buf << "\n";
    for (const Row& r : rows) {
        std::snprintf(buf, sizeof buf, "  %-28s %16.8e %16.8e %12.4e %8.3f",
                      r.name.c_str(), r.closed, r.mc, r.se, zscore(r));
        out << buf << "\n";
    }
}

bool all_within(const std::vector<Row>& rows, double bound) {
    for (const Row& r : rows) {
        if (!(std::fabs(zscore(r)) <= bound)) return false;
    }
    return true;
}

std::vector<Row> dutch_rows(double z0, double delta, double sigma, double dt,
                            const mc::SimConfig& cfg, const std::string& tag) {
    const mc::DutchEstimate est = mc::simulate_dutch(z0, delta, sigma, dt, cfg);
    return {Row{"lvf " + tag, lvf(z0, delta, sigma, dt), est.lvf.mean,
                est.lvf.std_error},
            Row{"fill_time " + tag, fill_time(z0, delta, sigma, dt),
                est.fill_time.mean, est.fill_time.std_error}};
}

std::vector<Row> stationary_rows(double delta, double sigma, double dt,
                                 const mc::SimConfig& cfg) {
    const StationaryDist sd = stationary_distribution(delta, sigma, dt);
    const mc::StationarySummary s = mc::sample_stationary(delta, sigma, dt, cfg);
    return {Row{"pi_minus", sd.pi_minus, s.pi_minus.mean, s.pi_minus.std_error},
            Row{"neg_excursion_mean", 1.0 / sd.zeta_minus,
                s.mean_neg_excursion.mean, s.mean_neg_excursion.std_error},
            Row{"pos_excursion_mean", 1.0 / sd.zeta_plus,
                s.mean_pos_excursion.mean, s.mean_pos_excursion.std_error}};
}

std::vector<Row> gda_rows(const GdaSpec& spec, const MarketParams& m,
                          const ChainParams& c, const mc::SimConfig& cfg) {
    const GdaRates rates = gda_rates(spec, m, c);
    const mc::GdaEstimate est = mc::simulate_gda(spec, m, c, cfg);
    return {Row{"arb_rate", rates.arb_rate, est.arb_rate.mean,
                est.arb_rate.std_error},
            Row{"vol_rate", rates.vol_rate, est.vol_rate.mean,
                est.vol_rate.std_error}};
}

std::vector<Row> generator_rows(double delta, double sigma, double dt,
                                const mc::SimConfig& cfg) {
    const mc::SimResult neg = mc::generator_residual(
        delta, sigma, dt, mc::GeneratorTestFn::NegBranchExp, 100.0, cfg);
    const mc::SimResult pos = mc::generator_residual(
        delta, sigma, dt, mc::GeneratorTestFn::PosBranchExp, 1000.0, cfg);
    return {Row{"generator f_minus(a=100)", 0.0, neg.mean, neg.std_error},
            Row{"generator f_plus(a=1000)", 0.0, pos.mean, pos.std_error}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "dalvf: execution quality of onchain Dutch auctions under geometric "
        "Brownian prices and Poisson blocks"};
    app.require_subcommand(1);

    int exit_code = 0;

    // ------------------------------ lvf / ft -------------------------------
    auto make_outcome_cmd = [&](const char* name, const char* desc, bool ft_first) {
        auto o = std::make_shared<Opts>();
        CLI::App* cmd = app.add_subcommand(name, desc);
        add_market_flags(cmd, *o);
        add_drift_flags(cmd, *o);
        cmd->add_option("--z0", o->z0, "initial log mispricing log(A0/P0)");
        cmd->add_flag("--bp", o->bp, "read mispricing flags in basis points");
        cmd->callback([&out, cmd, o, ft_first] {
            finish_presence(cmd, *o);
            const MarketParams m = o->market();
            const ChainParams c = o->chain();
            const double delta = o->resolve_delta(m);
            const double z0 = o->mispricing();
            const AuctionOutcome res =
                auction_outcome(z0, delta, m.sigma, c.mean_interblock_time);
            const double floor = lvf_lower_bound(m.sigma, c.mean_interblock_time);
            print_kv(out, "z0", num4(z0));
            print_kv(out, "delta", num4(delta) + " /s");
            if (ft_first) {
                print_kv(out, "FT", num4(res.fill_time) + " s");
                print_kv(out, "LVF", num4(res.lvf) + "  (" + num4(res.lvf * 100.0) + "%)");
            } else {
                print_kv(out, "LVF", num4(res.lvf) + "  (" + num4(res.lvf * 100.0) + "%)");
                print_kv(out, "FT", num4(res.fill_time) + " s");
            }
            print_kv(out, "LVF floor", num4(floor) + "  (" + num4(floor * 100.0) + "%)");
        });
    };
    make_outcome_cmd("lvf", "expected loss-versus-fair and time-to-fill", false);
    make_outcome_cmd("ft", "expected time-to-fill and loss-versus-fair", true);

    // ------------------------------ stationary ------------------------------
    {
        auto o = std::make_shared<Opts>();
        CLI::App* cmd = app.add_subcommand(
            "stationary", "stationary mispricing distribution parameters");
        add_market_flags(cmd, *o);
        add_drift_flags(cmd, *o);
        cmd->callback([&out, cmd, o] {
            finish_presence(cmd, *o);
            const MarketParams m = o->market();
            const ChainParams c = o->chain();
            const double delta = o->resolve_delta(m);
            const StationaryDist sd =
                stationary_distribution(delta, m.sigma, c.mean_interblock_time);
            print_kv(out, "zeta_minus", num4(sd.zeta_minus));
            print_kv(out, "zeta_plus", num4(sd.zeta_plus));
            print_kv(out, "pi_minus", num4(sd.pi_minus));
            print_kv(out, "pi_plus", num4(sd.pi_plus));
        });
    }

    // --------------------------------- gda ---------------------------------
    {
        auto o = std::make_shared<Opts>();
        auto emission = std::make_shared<double>(1.0);
        auto price = std::make_shared<double>(1.0);
        CLI::App* cmd = app.add_subcommand(
            "gda", "steady-state arbitrage and volume rates of a gradual auction");
        add_market_flags(cmd, *o);
        cmd->add_option("--decay-per-sec", o->decay, "per-auction decay rate lambda")
            ->required();
        cmd->add_option("--emission-rate", *emission, "units emitted per second");
        cmd->add_option("--price", *price, "current fundamental price");
        cmd->callback([&out, cmd, o, emission, price] {
            finish_presence(cmd, *o);
            const MarketParams m = o->market();
            const ChainParams c = o->chain();
            const GdaSpec spec(*emission, o->decay, *price, m);
            const GdaRates rates = gda_rates(spec, m, c);
            const double delta = composite_drift(m, spec.lambda);
            print_kv(out, "delta", num4(delta) + " /s");
            print_kv(out, "vol_rate", num4(rates.vol_rate) + " /s");
            print_kv(out, "arb_rate", num4(rates.arb_rate) + " /s");
            print_kv(out, "lvf_plus",
                     num4(lvf_plus_limit(delta, m.sigma, c.mean_interblock_time)));
        });
    }

    // -------------------------------- bayes --------------------------------
    {
        auto o = std::make_shared<Opts>();
        struct Prior {
            double mu0 = 0.0, sigma0 = 0.0, ask0 = -1.0, value_mean = -1.0;
        };
        auto p = std::make_shared<Prior>();
        CLI::App* cmd = app.add_subcommand(
            "bayes", "expected loss and fill time under a normal mispricing prior");
        add_market_flags(cmd, *o);
        add_drift_flags(cmd, *o);
        cmd->add_flag("--bp", o->bp, "read mispricing flags in basis points");
        cmd->add_option("--mu0", p->mu0, "prior mean of z0");
        cmd->add_option("--sigma0", p->sigma0, "prior sd of z0 (> 0)")->required();
        cmd->add_option("--ask0", p->ask0, "initial ask (with --value-mean)");
        cmd->add_option("--value-mean", p->value_mean, "mean of the value prior");
        cmd->callback([&out, cmd, o, p] {
            finish_presence(cmd, *o);
            const MarketParams m = o->market();
            const ChainParams c = o->chain();
            const double delta = o->resolve_delta(m);
            const bool by_value = cmd->count("--ask0") > 0;
            if (by_value != (cmd->count("--value-mean") > 0)) {
                throw CLI::ValidationError("--ask0 and --value-mean go together");
            }
            const MispricingPrior prior =
                by_value ? prior_from_value_belief(p->ask0, p->value_mean, p->sigma0)
                         : MispricingPrior(o->bp ? p->mu0 * 1e-4 : p->mu0, p->sigma0);
            const double elvf =
                expected_lvf(prior, delta, m.sigma, c.mean_interblock_time);
            const double eft =
                expected_fill_time(prior, delta, m.sigma, c.mean_interblock_time);
            print_kv(out, "mu0", num4(prior.mu0));
            print_kv(out, "sigma0", num4(prior.sigma0));
            print_kv(out, "E[LVF]", num4(elvf) + "  (" + num4(elvf * 100.0) + "%)");
            print_kv(out, "E[FT]", num4(eft) + " s");
        });
    }

    // ------------------------------- frontier ------------------------------
    {
        auto o = std::make_shared<Opts>();
        struct F {
            std::vector<double> thetas;
            double theta_min = 1e-7, theta_max = 1e-2;
            std::size_t theta_points = 25;
            std::string kind = "known";
            double sigma0 = 0.0, value_mean = 1.0, price = 1.0;
            double r_min = 0.0, r_max = 1.0;
            SearchBox box;
            std::string csv;
        };
        auto f = std::make_shared<F>();
        f->box = SearchBox::known_value_default();
        CLI::App* cmd = app.add_subcommand(
            "frontier", "loss / speed efficient frontier over a theta sweep");
        add_market_flags(cmd, *o);
        cmd->add_option("--theta", f->thetas, "explicit tradeoff weights (ascending)");
        cmd->add_option("--theta-min", f->theta_min, "sweep start (log-spaced)");
        cmd->add_option("--theta-max", f->theta_max, "sweep end");
        cmd->add_option("--theta-points", f->theta_points, "sweep size");
        cmd->add_option("--kind", f->kind, "known | unknown | gda")
            ->check(CLI::IsMember({"known", "unknown", "gda"}));
        cmd->add_option("--sigma0", f->sigma0, "prior sd (kind=unknown)");
        cmd->add_option("--value-mean", f->value_mean, "value prior mean (kind=unknown)");
        cmd->add_option("--price", f->price, "fundamental price (kind=gda)");
        cmd->add_option("--r-min", f->r_min, "emission-rate box low (kind=gda)");
        cmd->add_option("--r-max", f->r_max, "emission-rate box high (kind=gda)");
        cmd->add_option("--delta-min", f->box.delta_min, "drift box low");
        cmd->add_option("--delta-max", f->box.delta_max, "drift box high");
        cmd->add_option("--z0-min", f->box.z0_min, "mispricing box low");
        cmd->add_option("--z0-max", f->box.z0_max, "mispricing box high");
        cmd->add_option("--csv", f->csv, "write CSV here instead of a table");
        cmd->callback([&out, cmd, o, f] {
            finish_presence(cmd, *o);
            const MarketParams m = o->market();
            const ChainParams c = o->chain();
            std::vector<double> thetas = f->thetas;
            if (thetas.empty()) {
                const double a = std::log(f->theta_min), b = std::log(f->theta_max);
                for (std::size_t i = 0; i < f->theta_points; ++i) {
                    const double t =
                        f->theta_points == 1
                            ? 0.0
                            : static_cast<double>(i) / (f->theta_points - 1);
                    thetas.push_back(std::exp(a + t * (b - a)));
                }
            }
            CsvSink sink{f->csv};
            if (f->kind == "gda") {
                std::vector<std::vector<double>> rows;
                for (double theta : thetas) {
                    const GdaChoice g = solve_gda(theta, m, c, f->price,
                                                  Interval{f->r_min, f->r_max},
                                                  Interval{f->box.delta_min,
                                                           f->box.delta_max});
                    rows.push_back({theta, g.emission_rate, g.delta, g.lvf,
                                    g.vol_rate});
                }
                sink.write(out, "theta,r,delta,lvf,vol", rows);
                return;
            }
            if (f->kind == "unknown" && cmd->count("--z0-min") == 0 &&
                cmd->count("--z0-max") == 0) {
                const SearchBox d = SearchBox::unknown_value_default();
                f->box.z0_min = d.z0_min;
                f->box.z0_max = d.z0_max;
            }
            std::vector<std::vector<double>> rows;
            for (double theta : thetas) {
                const FrontierPoint p =
                    f->kind == "known"
                        ? solve_known_value(theta, m, c, f->box)
                        : solve_unknown_value(theta, f->sigma0, f->value_mean, m,
                                              c, f->box);
                rows.push_back({p.theta, p.z0, p.delta, p.lvf, p.fill_time});
            }
            sink.write(out, "theta,z0,delta,lvf,ft", rows);
        });
    }

    // -------------------------------- sweep --------------------------------
    {
        auto o = std::make_shared<Opts>();
        struct S {
            std::string vary = "delta";
            double from = 0.0, to = 0.0;
            std::size_t points = 100;
            bool log_flag = false, linear_flag = false;
            std::string csv;
        };
        auto s = std::make_shared<S>();
        CLI::App* cmd = app.add_subcommand(
            "sweep", "tabulate lvf and fill time along a parameter grid");
        add_market_flags(cmd, *o);
        add_drift_flags(cmd, *o);
        cmd->add_option("--z0", o->z0, "initial log mispricing (fixed when varying delta)");
        cmd->add_flag("--bp", o->bp, "read mispricing flags in basis points");
        cmd->add_option("--vary", s->vary, "delta | z0")
            ->check(CLI::IsMember({"delta", "z0"}));
        cmd->add_option("--from", s->from, "grid start")->required();
        cmd->add_option("--to", s->to, "grid end")->required();
        cmd->add_option("--points", s->points, "grid size")->required();
        cmd->add_flag("--log", s->log_flag, "log-spaced grid (default when varying delta)");
        cmd->add_flag("--linear", s->linear_flag, "linearly spaced grid");
        cmd->add_option("--csv", s->csv, "write CSV here instead of a table");
        cmd->callback([&out, cmd, o, s] {
            finish_presence(cmd, *o);
            const MarketParams m = o->market();
            const ChainParams c = o->chain();
            if (s->points < 1) throw CLI::ValidationError("--points must be >= 1");
            const bool vary_delta = s->vary == "delta";
            bool log_spaced = vary_delta;
            if (s->log_flag) log_spaced = true;
            if (s->linear_flag) log_spaced = false;
            if (log_spaced && !(s->from > 0.0 && s->to > 0.0)) {
                throw CLI::ValidationError("log-spaced grids need positive bounds");
            }
            const double dt = c.mean_interblock_time;
            std::vector<std::vector<double>> rows;
            const double a = log_spaced ? std::log(s->from) : s->from;
            const double b = log_spaced ? std::log(s->to) : s->to;
            double fixed_delta = 0.0;
            if (!vary_delta) fixed_delta = o->resolve_delta(m);
            for (std::size_t i = 0; i < s->points; ++i) {
                const double t =
                    s->points == 1 ? 0.0
                                   : static_cast<double>(i) / (s->points - 1);
                double x = log_spaced ? std::exp(a + t * (b - a))
                                      : a + t * (b - a);
                if (i == 0) x = s->from;
                if (i + 1 == s->points) x = s->to;
                const double z0 = vary_delta ? o->mispricing()
                                             : (o->bp ? x * 1e-4 : x);
                const double delta = vary_delta ? x : fixed_delta;
                rows.push_back({vary_delta ? delta : z0,
                                lvf(z0, delta, m.sigma, dt),
                                fill_time(z0, delta, m.sigma, dt)});
            }
            CsvSink sink{s->csv};
            sink.write(out, vary_delta ? "delta,lvf,ft" : "z0,lvf,ft", rows);
        });
    }

    // ------------------------------- simulate ------------------------------
    {
        auto o = std::make_shared<Opts>();
        struct Sim {
            std::string kind = "dutch";
            mc::SimConfig cfg;
            double emission = 1.0, price = 1.0;
            double alpha = 100.0;
            std::string test_fn = "neg";
        };
        auto sm = std::make_shared<Sim>();
        CLI::App* cmd = app.add_subcommand(
            "simulate", "Monte Carlo estimate against the matching closed form");
        add_market_flags(cmd, *o);
        add_drift_flags(cmd, *o);
        cmd->add_option("--z0", o->z0, "initial log mispricing (kind=dutch)");
        cmd->add_flag("--bp", o->bp, "read mispricing flags in basis points");
        cmd->add_option("--kind", sm->kind, "dutch | stationary | gda | generator")
            ->check(CLI::IsMember({"dutch", "stationary", "gda", "generator"}));
        cmd->add_option("--paths", sm->cfg.paths,
                        "paths (or post-burn-in blocks for chain estimators)");
        cmd->add_option("--seed", sm->cfg.seed, "rng seed");
        cmd->add_option("--burn-in", sm->cfg.burn_in_blocks, "burn-in blocks per chain");
        cmd->add_option("--max-blocks", sm->cfg.max_blocks_per_path,
                        "fill-time truncation guard");
        cmd->add_option("--threads", sm->cfg.threads,
                        "worker threads (0 = hardware); results do not depend on it");
        cmd->add_option("--emission-rate", sm->emission, "kind=gda");
        cmd->add_option("--price", sm->price, "kind=gda");
        cmd->add_option("--alpha", sm->alpha, "kind=generator");
        cmd->add_option("--test-fn", sm->test_fn, "neg | pos (kind=generator)")
            ->check(CLI::IsMember({"neg", "pos"}));
        cmd->callback([&out, &exit_code, cmd, o, sm] {
            finish_presence(cmd, *o);
            const MarketParams m = o->market();
            const ChainParams c = o->chain();
            const double dt = c.mean_interblock_time;
            std::vector<Row> rows;
            if (sm->kind == "dutch") {
                const double delta = o->resolve_delta(m);
                rows = dutch_rows(o->mispricing(), delta, m.sigma, dt, sm->cfg, "");
            } else if (sm->kind == "stationary") {
                const double delta = o->resolve_delta(m);
                rows = stationary_rows(delta, m.sigma, dt, sm->cfg);
            } else if (sm->kind == "gda") {
                if (!o->has_decay) {
                    throw CLI::ValidationError("kind=gda needs --decay-per-sec");
                }
                const GdaSpec spec(sm->emission, o->decay, sm->price, m);
                rows = gda_rows(spec, m, c, sm->cfg);
            } else {
                const double delta = o->resolve_delta(m);
                const auto fn = sm->test_fn == "neg"
                                    ? mc::GeneratorTestFn::NegBranchExp
                                    : mc::GeneratorTestFn::PosBranchExp;
                const mc::SimResult res = mc::generator_residual(
                    delta, m.sigma, dt, fn, sm->alpha, sm->cfg);
                rows = {Row{"generator residual", 0.0, res.mean, res.std_error}};
            }
            print_rows(out, rows);
            if (!all_within(rows, 4.0)) exit_code = 1;
        });
    }

    // ------------------------------- validate ------------------------------
    {
        auto v = std::make_shared<mc::SimConfig>();
        auto suite = std::make_shared<std::string>("all");
        CLI::App* cmd = app.add_subcommand(
            "validate",
            "closed forms vs Monte Carlo at reference parameters (5% daily vol, "
            "12 s blocks)");
        cmd->add_option("--suite", *suite, "dutch | stationary | gda | generator | all")
            ->check(CLI::IsMember({"dutch", "stationary", "gda", "generator", "all"}));
        cmd->add_option("--paths", v->paths,
                        "paths (or post-burn-in blocks for chain estimators)");
        cmd->add_option("--seed", v->seed, "rng seed");
        cmd->add_option("--burn-in", v->burn_in_blocks, "burn-in blocks per chain");
        cmd->add_option("--threads", v->threads,
                        "worker threads (0 = hardware); results do not depend on it");
        cmd->callback([&out, &exit_code, v, suite] {
            const double sigma = convert_daily_vol(0.05);
            const double dt = 12.0;
            const double delta = 1e-4;
            const MarketParams m(0.0, sigma);
            const ChainParams c(dt);
            std::vector<Row> rows;
            auto want = [&](const char* s) {
                return *suite == "all" || *suite == s;
            };
            if (want("dutch")) {
                for (const Row& r : dutch_rows(0.0, delta, sigma, dt, *v, "(z0=0)"))
                    rows.push_back(r);
                for (const Row& r :
                     dutch_rows(1e-3, delta, sigma, dt, *v, "(z0=+10bp)"))
                    rows.push_back(r);
                for (const Row& r :
                     dutch_rows(-5e-4, delta, sigma, dt, *v, "(z0=-5bp)"))
                    rows.push_back(r);
            }
            if (want("stationary")) {
                for (const Row& r : stationary_rows(delta, sigma, dt, *v))
                    rows.push_back(r);
            }
            if (want("gda")) {
                const GdaSpec spec(1.0, 1e-4, 1.0, m);
                for (const Row& r : gda_rows(spec, m, c, *v)) rows.push_back(r);
            }
            if (want("generator")) {
                for (const Row& r : generator_rows(delta, sigma, dt, *v))
                    rows.push_back(r);
            }
            print_rows(out, rows);
            const bool ok = all_within(rows, 4.0);
            out << (ok ? "all comparisons within 4 standard errors\n"
                       : "SOME COMPARISONS OUTSIDE 4 STANDARD ERRORS\n");
            if (!ok) exit_code = 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::overflow_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace dalvf::cli
