#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "skoro/chi2.hpp"
#include "skoro/experiments.hpp"
#include "skoro/ks.hpp"
#include "skoro/mc_kernel.hpp"
#include "skoro/oracles.hpp"
#include "skoro/rng.hpp"

using skoro::adaptive_simpson;
using skoro::bes3_unit_cdf;
using skoro::bes3_unit_oracle;
using skoro::chi_square_cdf;
using skoro::chi_square_quantile;
using skoro::half_normal_unit_cdf;
using skoro::half_normal_unit_oracle;
using skoro::kolmogorov_critical;
using skoro::ks_test;
using skoro::oracle_quantile;
using skoro::Seed;
using skoro::validate_oracle;

TEST_CASE("bes3 cdf endpoints and monotonicity") {
    CHECK(bes3_unit_cdf(0.0) == 0.0);
    CHECK(bes3_unit_cdf(8.0) > 1.0 - 1e-9);
    CHECK(bes3_unit_cdf(12.0) <= 1.0 + 1e-12);
    double prev = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double r = 0.05 * i;
        const double c = bes3_unit_cdf(r);
        CHECK(c >= prev);
        prev = c;
    }
    CHECK_THROWS_AS((void)bes3_unit_cdf(-0.1), std::invalid_argument);
    CHECK_THROWS_AS((void)half_normal_unit_cdf(-1.0), std::invalid_argument);
}

TEST_CASE("closed forms agree with quadrature of the densities") {
    validate_oracle(bes3_unit_oracle(), 1000, 8.0, 1e-10);
    validate_oracle(half_normal_unit_oracle(), 1000, 8.0, 1e-10);
}

TEST_CASE("bes3 median cross-checked against direct integration") {
    const auto oracle = bes3_unit_oracle();
    const double median = oracle_quantile(oracle, 0.5);
    CHECK(std::fabs(bes3_unit_cdf(median) - 0.5) < 1e-12);
    const double integral = adaptive_simpson(oracle.density, 0.0, median, 1e-12);
    CHECK(std::fabs(integral - 0.5) < 1e-8);
    // Maxwell mean: integral of r * density equals 2 sqrt(2/pi)
    const double mean = adaptive_simpson(
        [&](double r) { return r * oracle.density(r); }, 0.0, 16.0, 1e-12);
    CHECK(std::fabs(mean - 2.0 * std::sqrt(2.0 / std::numbers::pi)) < 1e-9);
}

TEST_CASE("half-normal cdf equals 2 Phi - 1") {
    for (int i = 0; i <= 100; ++i) {
        const double r = 0.06 * i;
        const double phi = 0.5 * std::erfc(-r / std::numbers::sqrt2);
        CHECK(std::fabs(half_normal_unit_cdf(r) - (2.0 * phi - 1.0)) < 1e-14);
    }
}

TEST_CASE("quantile inverts the cdf") {
    const auto oracle = half_normal_unit_oracle();
    for (const double q : {0.01, 0.1, 0.5, 0.9, 0.999}) {
        CHECK(std::fabs(oracle.cdf(oracle_quantile(oracle, q)) - q) < 1e-12);
    }
    CHECK_THROWS_AS((void)oracle_quantile(oracle, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)oracle_quantile(oracle, 1.0), std::invalid_argument);
}

TEST_CASE("ks preconditions and critical value") {
    CHECK_THROWS_AS((void)ks_test(std::vector<double>{}, bes3_unit_oracle(), 0.01),
                    std::invalid_argument);
    std::vector<double> tiny(99, 0.5);
    CHECK_THROWS_AS((void)ks_test(tiny, bes3_unit_oracle(), 0.01), std::invalid_argument);
    CHECK_THROWS_AS((void)kolmogorov_critical(0.0, 100), std::invalid_argument);
    CHECK_THROWS_AS((void)kolmogorov_critical(1.0, 100), std::invalid_argument);
    // c(0.01) = 1.6276, c(0.05) = 1.3581
    CHECK(std::fabs(kolmogorov_critical(0.01, 1) - 1.6276) < 1e-3);
    CHECK(std::fabs(kolmogorov_critical(0.05, 1) - 1.3581) < 1e-3);
}

TEST_CASE("ks calibration under the null") {
    // inverse-CDF samples from the oracle itself: at alpha = 0.01 at most a
    // couple of the 100 repetitions may fail
    const auto oracle = bes3_unit_oracle();
    skoro::Xoshiro128pp rng = skoro::trial_stream(Seed{4242}, 0);
    int passes = 0;
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<double> samples(2000);
        for (auto& s : samples) {
            const double u =
                (static_cast<double>(rng.next()) + 0.5) / 4294967296.0;
            s = oracle_quantile(oracle, u);
        }
        if (ks_test(samples, oracle, 0.01).pass) ++passes;
    }
    CHECK(passes >= 98);
}

TEST_CASE("ks rejects a shifted law") {
    const auto oracle = half_normal_unit_oracle();
    skoro::Xoshiro128pp rng = skoro::trial_stream(Seed{777}, 0);
    std::vector<double> samples(10000);
    for (auto& s : samples) {
        const double u = (static_cast<double>(rng.next()) + 0.5) / 4294967296.0;
        s = oracle_quantile(oracle, u) + 0.2;
    }
    const auto report = ks_test(samples, oracle, 0.01);
    CHECK_FALSE(report.pass);
    CHECK(report.statistic > report.critical_value);
}

TEST_CASE("ks is deterministic and well-formed") {
    std::vector<double> samples(500);
    skoro::Xoshiro128pp rng = skoro::trial_stream(Seed{1}, 0);
    for (auto& s : samples) {
        s = oracle_quantile(half_normal_unit_oracle(),
                            (static_cast<double>(rng.next()) + 0.5) / 4294967296.0);
    }
    const auto a = ks_test(samples, half_normal_unit_oracle(), 0.05);
    const auto b = ks_test(samples, half_normal_unit_oracle(), 0.05);
    CHECK(a.statistic == b.statistic);
    CHECK(a.sample_count == 500);
    CHECK(a.statistic >= 0.0);
    CHECK(a.pass == (a.statistic < a.critical_value));
    CHECK(a.oracle == "half_normal_unit");
}

TEST_CASE("chi-square quantiles against reference values") {
    CHECK(std::fabs(chi_square_quantile(1, 0.99) - 6.634897) < 1e-4);
    CHECK(std::fabs(chi_square_quantile(10, 0.99) - 23.209251) < 1e-4);
    CHECK(std::fabs(chi_square_quantile(100, 0.99) - 135.806723) < 1e-3);
    for (const double dof : {1.0, 7.0, 40.0}) {
        for (const double prob : {0.1, 0.5, 0.975}) {
            CHECK(std::fabs(chi_square_cdf(chi_square_quantile(dof, prob), dof) - prob) <
                  1e-10);
        }
    }
}

TEST_CASE("experiment preconditions") {
    skoro::ExperimentParams params;
    params.n_steps = 999;
    CHECK_THROWS_AS((void)skoro::mc_gap_samples(params, skoro::GapStat::bessel),
                    std::invalid_argument);
    params.n_steps = 1000;
    params.trials = 999;
    CHECK_THROWS_AS((void)skoro::mc_gap_samples(params, skoro::GapStat::bessel),
                    std::invalid_argument);
    params.trials = 1000;
    params.alpha = 1.5;
    CHECK_THROWS_AS((void)skoro::mc_bessel_experiment(params), std::invalid_argument);
}

TEST_CASE("gap samples are positive and deterministic") {
    skoro::ExperimentParams params;
    params.n_steps = 1000;
    params.trials = 1000;
    params.seed = Seed{5};
    const auto a = skoro::mc_gap_samples(params, skoro::GapStat::xhat);
    const auto b = skoro::mc_gap_samples(params, skoro::GapStat::xhat);
    CHECK(a == b);
    for (const double s : a) CHECK(s > 0.0);
}

TEST_CASE("scaled gap mean approaches the Maxwell mean") {
    skoro::ExperimentParams params;
    params.n_steps = 10000;
    params.trials = 20000;
    params.seed = Seed{0};
    const auto samples = skoro::mc_gap_samples(params, skoro::GapStat::bessel);
    double sum = 0.0, sum_sq = 0.0;
    for (const double s : samples) {
        sum += s;
        sum_sq += s * s;
    }
    const double n = static_cast<double>(samples.size());
    const double mean = sum / n;
    const double sd = std::sqrt(sum_sq / n - mean * mean);
    const double target = 2.0 * std::sqrt(2.0 / std::numbers::pi);
    CHECK(std::fabs(mean - target) <= 3.0 * sd / std::sqrt(n));
}

TEST_CASE("simulator agreement at reduced scale") {
    const auto report = skoro::verify_simulator_agreement(Seed{11}, 200000, 0.01);
    CHECK(report.pass);
    CHECK(report.transitions >= 200000);
    CHECK(report.dof > 0);
    CHECK(report.cells > 0);
    CHECK(report.statistic < report.threshold);
}

TEST_CASE("simulated gap law matches the exact chain law at depth 2000") {
    // exact law of the half-gap after n steps, by tridiagonal sweeps
    const std::int64_t n = 2000;
    std::vector<double> law(static_cast<std::size_t>(n) + 3, 0.0);
    std::vector<double> next(law.size(), 0.0);
    law[1] = 1.0;
    std::int64_t hi = 1;
    for (std::int64_t s = 0; s < n; ++s) {
        std::fill(next.begin(), next.begin() + hi + 2, 0.0);
        for (std::int64_t d = 1; d <= hi; ++d) {
            const double p = law[static_cast<std::size_t>(d)];
            if (p == 0.0) continue;
            next[static_cast<std::size_t>(d)] += 0.5 * p;
            next[static_cast<std::size_t>(d + 1)] +=
                p * static_cast<double>(d + 1) / (4.0 * static_cast<double>(d));
            if (d > 1) {
                next[static_cast<std::size_t>(d - 1)] +=
                    p * static_cast<double>(d - 1) / (4.0 * static_cast<double>(d));
            }
        }
        ++hi;
        std::swap(law, next);
    }

    const std::size_t trials = 20000;
    std::vector<skoro::mc::TrialGaps> gaps(trials);
    skoro::mc::run_trials(n, Seed{31337}, 0, gaps);
    std::map<std::int64_t, std::uint64_t> counts;
    for (const auto& g : gaps) {
        counts[(static_cast<std::int64_t>(g.top) + g.bottom) / 2] += 1;
    }

    // chi-square with bins pooled left to right until expected >= 5
    double chi2 = 0.0;
    std::int64_t bins = 0;
    double exp_acc = 0.0, obs_acc = 0.0;
    for (std::int64_t d = 1; d <= hi; ++d) {
        exp_acc += static_cast<double>(trials) * law[static_cast<std::size_t>(d)];
        const auto it = counts.find(d);
        obs_acc += it == counts.end() ? 0.0 : static_cast<double>(it->second);
        if (exp_acc >= 5.0) {
            chi2 += (obs_acc - exp_acc) * (obs_acc - exp_acc) / exp_acc;
            ++bins;
            exp_acc = 0.0;
            obs_acc = 0.0;
        }
    }
    if (exp_acc > 0.0) {
        chi2 += (obs_acc - exp_acc) * (obs_acc - exp_acc) / std::max(exp_acc, 1e-9);
        ++bins;
    }
    REQUIRE(bins >= 30);
    CHECK(chi2 < chi_square_quantile(static_cast<double>(bins - 1), 0.99));
}
