#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dalvf/analytic.hpp"
#include "dalvf/bayes.hpp"
#include "dalvf/normal.hpp"
#include "dalvf/params.hpp"
#include "dalvf/philox.hpp"
#include "support/oracles.hpp"

using namespace dalvf;

namespace {

constexpr double kSigmaRef = 1.7010255e-4;
constexpr double kDeltaRef = 1e-4;
constexpr double kDtRef = 12.0;

double layer_rate(double delta, double sigma, double dt) {
    const StationaryDist sd = stationary_distribution(delta, sigma, dt);
    return sd.zeta_minus + sd.zeta_plus;
}

}  // namespace

TEST_CASE("scaled normal-tail helper across its branch point") {
    struct Case {
        double c, mu0, s0, want;
    };
    // exp(c mu0 + c^2 s0^2/2) Phi(-(mu0/s0 + c s0)) from 40-digit arithmetic;
    // the branch switches at Phi argument 26
    const Case cases[] = {
        {7664.0, 0.0, 5e-4, 0.0981236947251798927},
        {25000.0, 0.0, 1e-3, 0.0159322804955651413},
        {26000.0, 0.0, 1e-3, 0.0153213357284720217},
        {26000.0, 1e-3, 1e-3, 0.00894963554586992687},
        {5e6, -2e-3, 1e-4, 1.15019258333798719e-90},
        {1.0, -5e-4, 5e-4, 0.840803328830566639},
        {100000.0, 5e-4, 5e-4, 0.00474270199474074636},
        {2.0, 3e-3, 1e-3, 0.00134913412966092101},
    };
    for (const Case& k : cases) {
        CAPTURE(k.c);
        CHECK(gauss_exp_below_zero(k.c, k.mu0, k.s0) ==
              doctest::Approx(k.want).epsilon(1e-13));
    }
    // hard underflow stays at zero instead of NaN
    CHECK(gauss_exp_below_zero(1e4, 1.0, 1e-4) == 0.0);
}

TEST_CASE("prior from a lognormal value belief") {
    const MispricingPrior p1 = prior_from_value_belief(1.0, 1.0, 0.01);
    CHECK(p1.mu0 == doctest::Approx(5e-5).epsilon(1e-14));
    CHECK(p1.sigma0 == 0.01);

    const MispricingPrior p2 =
        prior_from_value_belief(std::exp(1e-3) * 2.0, 2.0, 0.02);
    CHECK(p2.mu0 == doctest::Approx(1e-3 + 2e-4).epsilon(1e-12));

    CHECK_THROWS_AS(prior_from_value_belief(0.0, 1.0, 0.01), std::domain_error);
    CHECK_THROWS_AS(prior_from_value_belief(1.0, -1.0, 0.01), std::domain_error);
    CHECK_THROWS_AS(MispricingPrior(0.0, 0.0), std::invalid_argument);
}

TEST_CASE("prior mean matches sampling from the value belief") {
    // z0 = log(ask0/P0) with P0 lognormal around value_mean
    const double ask0 = 1.02, value_mean = 1.0, sigma0 = 0.015;
    const MispricingPrior prior = prior_from_value_belief(ask0, value_mean, sigma0);
    mc::StreamRng rng(2024, 0);
    const std::size_t n = 1000000;
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p0 =
            value_mean * std::exp(-0.5 * sigma0 * sigma0 + sigma0 * rng.normal());
        const double z0 = std::log(ask0 / p0);
        sum += z0;
        sum2 += z0 * z0;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum2 / n - mean * mean) / n);
    CHECK(std::fabs(mean - prior.mu0) < 4.0 * se);
}

TEST_CASE("degenerate priors collapse to the pointwise formulas") {
    const MispricingPrior above(1e-3, 1e-8);
    CHECK(std::fabs(expected_lvf(above, kDeltaRef, kSigmaRef, kDtRef) -
                    lvf_plus(kDeltaRef, kSigmaRef, kDtRef)) < 1e-9);
    CHECK(std::fabs(expected_fill_time(above, kDeltaRef, kSigmaRef, kDtRef) -
                    fill_time(1e-3, kDeltaRef, kSigmaRef, kDtRef)) < 1e-9);

    const MispricingPrior below(-1e-3, 1e-8);
    CHECK(std::fabs(expected_lvf(below, kDeltaRef, kSigmaRef, kDtRef) -
                    lvf(-1e-3, kDeltaRef, kSigmaRef, kDtRef)) < 1e-9);
    CHECK(std::fabs(expected_fill_time(below, kDeltaRef, kSigmaRef, kDtRef) -
                    fill_time(-1e-3, kDeltaRef, kSigmaRef, kDtRef)) < 1e-9);
}

TEST_CASE("reference values") {
    const MispricingPrior prior(0.0, 5e-4);
    CHECK(expected_lvf(prior, kDeltaRef, kSigmaRef, kDtRef) ==
          doctest::Approx(1.4755117213038376e-3).epsilon(1e-10));
    CHECK(expected_fill_time(prior, kDeltaRef, kSigmaRef, kDtRef) ==
          doctest::Approx(14.775181718533061).epsilon(1e-10));
}

TEST_CASE("closed forms match quadrature against the prior") {
    std::uint64_t s = 777;
    auto next = [&]() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(s >> 11) * 0x1p-53;
    };
    int done = 0;
    while (done < 8) {
        const double delta = std::exp(std::log(1e-5) + next() * std::log(100.0));
        const double sigma = std::exp(std::log(2e-5) + next() * std::log(50.0));
        const double dt = 1.0 + 29.0 * next();
        const double mu0 = -2e-3 + 4e-3 * next();
        const double sigma0 = std::exp(std::log(1e-4) + next() * std::log(20.0));
        if (!(1.0 + dt * (delta - 0.5 * sigma * sigma) > 0.0)) continue;
        ++done;
        CAPTURE(delta);
        CAPTURE(sigma);
        CAPTURE(dt);
        CAPTURE(mu0);
        CAPTURE(sigma0);
        const MispricingPrior prior(mu0, sigma0);
        const double rate = layer_rate(delta, sigma, dt);

        const double elvf = expected_lvf(prior, delta, sigma, dt);
        const double q_lvf = oracle::prior_expectation(
            [&](double z) { return lvf(z, delta, sigma, dt); }, mu0, sigma0, rate,
            1e-11);
        CHECK(oracle::rel_diff(elvf, q_lvf) < 1e-6);
        CHECK(elvf >= 0.0);
        CHECK(elvf <= 1.0);

        const double eft = expected_fill_time(prior, delta, sigma, dt);
        const double q_ft = oracle::prior_expectation(
            [&](double z) { return fill_time(z, delta, sigma, dt); }, mu0, sigma0,
            rate, 1e-9 * dt);
        CHECK(oracle::rel_diff(eft, q_ft) < 1e-6);
        CHECK(eft >= dt);
    }
}

TEST_CASE("expected fill time is monotone in the prior mean") {
    double prev = 0.0;
    for (double mu0 : {-3e-3, -1e-3, 0.0, 1e-3, 3e-3}) {
        const MispricingPrior prior(mu0, 5e-4);
        const double cur = expected_fill_time(prior, kDeltaRef, kSigmaRef, kDtRef);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("deep in-the-money prior pins the fill at the next block") {
    const MispricingPrior prior(-1.0, 1e-3);
    CHECK(expected_fill_time(prior, kDeltaRef, kSigmaRef, kDtRef) ==
          doctest::Approx(kDtRef).epsilon(1e-12));
}

TEST_CASE("invalid prior-averaged inputs are rejected") {
    const MispricingPrior prior(0.0, 5e-4);
    CHECK_THROWS_AS(expected_lvf(prior, 0.0, kSigmaRef, kDtRef), std::domain_error);
    // denominator 1 + dt (delta - sigma^2/2) <= 0
    CHECK_THROWS_AS(expected_lvf(prior, 1e-6, 0.5, 12.0), std::domain_error);
}
