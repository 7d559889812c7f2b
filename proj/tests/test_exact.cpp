#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "skoro/bessel_kernel.hpp"
#include "skoro/history_dp.hpp"
#include "skoro/kdp_law.hpp"
#include "skoro/lattice.hpp"

using skoro::bessel_kernel;
using skoro::chain_marginal;
using skoro::enumerate_histories;
using skoro::history_d_marginal;
using skoro::KdpMove;
using skoro::kdp_step_distribution;
using skoro::kernel_drift;
using skoro::kernel_row;
using skoro::kernel_second_moment;
using skoro::Rat;
using skoro::verify_kernel_equivalence;
using skoro::verify_lemma_identities;

TEST_CASE("kernel entries") {
    CHECK(bessel_kernel(1, 0) == Rat{0});
    CHECK(bessel_kernel(2, 1) == Rat{1, 8});
    CHECK(bessel_kernel(2, 2) == Rat{1, 2});
    CHECK(bessel_kernel(2, 3) == Rat{3, 8});
    CHECK(bessel_kernel(1, 1) == Rat{1, 2});
    CHECK(bessel_kernel(1, 2) == Rat{1, 2});
    CHECK(bessel_kernel(5, 9) == Rat{0});
    CHECK_THROWS_AS((void)bessel_kernel(0, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)bessel_kernel(-2, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)bessel_kernel(1, -1), std::invalid_argument);
}

TEST_CASE("kernel rows sum to one for every x up to 1000") {
    for (std::int64_t x = 1; x <= 1000; ++x) {
        Rat sum;
        for (const auto& [y, p] : kernel_row(x).entries) sum += p;
        REQUIRE(sum == Rat{1});
    }
    CHECK(kernel_row(1).entries.at(0) == Rat{0});
}

TEST_CASE("drift and second moment identities for d up to 1000") {
    for (std::int64_t d = 1; d <= 1000; ++d) {
        REQUIRE(kernel_drift(d) == Rat{1, 2 * d});
        REQUIRE(kernel_second_moment(d) == Rat{1, 2});
    }
}

TEST_CASE("one-step law examples") {
    const auto law20 = kdp_step_distribution(2, 0);
    CHECK(law20.at(KdpMove{1, 1, 0}) == Rat{1, 8});          // shrink keeping p
    CHECK_FALSE(law20.contains(KdpMove{1, 1, -1}));          // shrink lowering p needs p >= 1
    const auto law21 = kdp_step_distribution(2, 1);
    CHECK(law21.at(KdpMove{1, 1, 0}) == Rat{1, 8});          // shrink lowering p
    CHECK_FALSE(law21.contains(KdpMove{1, 1, 1}));

    const auto law10 = kdp_step_distribution(1, 0);
    Rat closing;
    for (const auto& [move, mass] : law10) {
        if (move.d < 1) closing += mass;
    }
    CHECK(closing == Rat{0});  // the gap can never close

    CHECK_THROWS_AS((void)kdp_step_distribution(0, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)kdp_step_distribution(2, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)kdp_step_distribution(2, -1), std::invalid_argument);
}

TEST_CASE("one-step law is stochastic with valid supports") {
    for (std::int64_t d = 1; d <= 25; ++d) {
        for (std::int64_t p = 0; p <= d - 1; ++p) {
            const auto law = kdp_step_distribution(d, p);
            Rat total;
            for (const auto& [move, mass] : law) {
                total += mass;
                REQUIRE(move.d >= d - 1);
                REQUIRE(move.d <= d + 1);
                REQUIRE(move.d >= 1);
                REQUIRE(move.p >= 0);
                REQUIRE(move.p <= move.d - 1);
                REQUIRE((move.dk == 1 || move.dk == -1));
            }
            REQUIRE(total == Rat{1});
        }
    }
}

TEST_CASE("one-step law is independent of the embedding shift") {
    // replay the eight sign triples from explicit walk positions at several
    // shifts and compare the projected (dk, d, p) laws
    for (std::int64_t d : {1, 2, 3, 7}) {
        for (std::int64_t p = 0; p <= d - 1; ++p) {
            const auto reference = kdp_step_distribution(d, p);
            for (const std::int64_t k : {-9LL, -1LL, 5LL, 101LL}) {
                std::map<KdpMove, Rat> shifted;
                const std::int64_t l = k;
                const std::int64_t u = k + 2 * d;
                const std::int64_t m = k + 2 * p + 1;
                for (int signs = 0; signs < 8; ++signs) {
                    const std::int64_t dm = (signs & 1) ? 1 : -1;
                    const std::int64_t du = (signs & 2) ? 1 : -1;
                    const std::int64_t dl = (signs & 4) ? 1 : -1;
                    const std::int64_t m2 = m + dm;
                    const std::int64_t u2 = skoro::online_push_up_step(u, du, m2);
                    const std::int64_t l2 = skoro::online_push_down_step(l, dl, m2);
                    shifted[KdpMove{l2 - l, (u2 - l2) / 2, (m2 - l2 - 1) / 2}] +=
                        Rat{1, 8};
                }
                REQUIRE(shifted == reference);
            }
        }
    }
}

TEST_CASE("chain marginal basics") {
    const auto m0 = chain_marginal(0);
    CHECK(m0.size() == 1);
    CHECK(m0.at(1) == Rat{1});
    const auto m1 = chain_marginal(1);
    CHECK(m1.size() == 2);
    CHECK(m1.at(1) == Rat{1, 2});
    CHECK(m1.at(2) == Rat{1, 2});
    CHECK_THROWS_AS((void)chain_marginal(-1), std::invalid_argument);
    for (std::int64_t n = 0; n <= 12; ++n) {
        Rat total;
        for (const auto& [d, mass] : chain_marginal(n)) total += mass;
        REQUIRE(total == Rat{1});
    }
}

TEST_CASE("histories at horizon one") {
    const auto records = enumerate_histories(1);
    REQUIRE(records.size() == 2);
    for (const auto& rec : records) {
        REQUIRE(rec.d_history.size() == 2);
        CHECK(rec.d_history[0] == 1);
        CHECK(rec.prob == Rat{1, 2});
        Rat total;
        for (const auto& [p, mass] : rec.p_dist) total += mass;
        CHECK(total == rec.prob);
    }
    CHECK(records[0].d_history[1] + records[1].d_history[1] == 3);  // one each of 1, 2
}

TEST_CASE("conditional offset laws are uniform at horizon four") {
    for (const auto& rec : enumerate_histories(4)) {
        const std::int64_t d = rec.d_history.back();
        REQUIRE(rec.p_dist.size() == static_cast<std::size_t>(d));
        for (const auto& [p, mass] : rec.p_dist) {
            REQUIRE(mass == rec.prob * Rat{1, d});
        }
    }
}

TEST_CASE("lemma identities hold to horizon six") {
    const auto report = verify_lemma_identities(6);
    CHECK(report.pass);
    CHECK(report.levels.size() == 7);
    CHECK(report.levels[0].histories == 1);
    CHECK(report.levels[1].histories == 2);
    for (const auto& level : report.levels) {
        CHECK(level.offset_uniform);
        CHECK(level.kernel_match);
        CHECK(level.marginal_match);
    }
    CHECK_FALSE(report.counterexample.has_value());
}

TEST_CASE("history marginal equals the chain marginal to horizon eight") {
    for (std::int64_t n = 0; n <= 8; ++n) {
        REQUIRE(history_d_marginal(n) == chain_marginal(n));
    }
}

TEST_CASE("history cap aborts cleanly") {
    CHECK_THROWS_AS((void)verify_lemma_identities(10, 50), std::runtime_error);
    CHECK_THROWS_AS((void)enumerate_histories(10, 50), std::runtime_error);
    CHECK_THROWS_AS((void)verify_lemma_identities(0), std::invalid_argument);
    CHECK_THROWS_AS((void)verify_lemma_identities(60), std::invalid_argument);
}

TEST_CASE("kernel equivalence across all offsets up to d_max 50") {
    const auto report = verify_kernel_equivalence(50);
    CHECK(report.pass);
    CHECK(report.d_max == 50);
    CHECK(report.pairs_checked == 50 * 51 / 2);
    CHECK(report.first_failure.empty());
}
