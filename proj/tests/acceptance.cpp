// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Exact criteria run in integer/rational arithmetic with no tolerance; the
// statistical criteria run at fixed seeds and pinned levels.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "skoro/bessel_kernel.hpp"
#include "skoro/chi2.hpp"
#include "skoro/experiments.hpp"
#include "skoro/history_dp.hpp"
#include "skoro/kdp_law.hpp"
#include "skoro/lattice.hpp"
#include "skoro/path.hpp"
#include "skoro/rng.hpp"

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point begin = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - begin).count();
    }
};

void report(int index, const std::string& name, bool ok, double seconds,
            double budget_seconds, const std::string& detail = "") {
    const bool in_budget = seconds < budget_seconds;
    const bool pass = ok && in_budget;
    std::printf("[%s] %d. %s (%.2fs, budget %.0fs)%s%s\n", pass ? "PASS" : "FAIL",
                index, name.c_str(), seconds, budget_seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

// 1. one-step law vs kernel row, exact, with the two published shrink classes
void criterion_kernel_equivalence() {
    Timer timer;
    const auto rep = skoro::verify_kernel_equivalence(50);
    report(1, "kernel equivalence over d <= 50, all offsets", rep.pass,
           timer.seconds(), 1.0, rep.first_failure);
}

// 2. conditional offset uniformity and kernel identity over all histories
void criterion_history_identities() {
    Timer timer;
    const auto rep = skoro::verify_lemma_identities(10);
    std::string detail;
    if (rep.counterexample) detail = rep.counterexample->detail;
    report(2, "history identities to horizon 10", rep.pass, timer.seconds(), 30.0,
           detail);
}

// 3. history-summed d-marginal equals the chain marginal
void criterion_marginal_agreement() {
    Timer timer;
    bool ok = true;
    for (std::int64_t n = 0; n <= 12 && ok; ++n) {
        ok = skoro::history_d_marginal(n) == skoro::chain_marginal(n);
    }
    report(3, "chain marginal agreement to horizon 12", ok, timer.seconds(), 60.0);
}

// 4. exact generator moments of the kernel
void criterion_generator_moments() {
    Timer timer;
    bool ok = true;
    for (std::int64_t d = 1; d <= 1000 && ok; ++d) {
        ok = skoro::kernel_drift(d) == skoro::Rat{1, 2 * d} &&
             skoro::kernel_second_moment(d) == skoro::Rat{1, 2};
    }
    report(4, "drift 1/(2d) and second moment 1/2 for d <= 1000", ok,
           timer.seconds(), 1.0);
}

// 5. scaled gap vs BES3 marginal at t = 1, with failing negative control
void criterion_bessel_ks() {
    Timer timer;
    skoro::ExperimentParams params;
    params.n_steps = 10000;
    params.trials = 20000;
    params.alpha = 0.01;
    params.seed = skoro::Seed{0};
    const auto ks = skoro::mc_bessel_experiment(params);
    const auto control = skoro::mc_bessel_negative_control(params);
    const bool ok = ks.pass && !control.pass;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "D=%.5f < %.5f, control D=%.3f",
                  ks.statistic, ks.critical_value, control.statistic);
    report(5, "KS: sqrt(2) D_n / sqrt(n) vs BES3 at alpha 0.01", ok, timer.seconds(),
           60.0, detail);
}

// 6. one-sided gaps vs half-normal marginal, with failing negative controls
void criterion_reflected_bm_ks() {
    Timer timer;
    skoro::ExperimentParams params;
    params.n_steps = 10000;
    params.trials = 20000;
    params.alpha = 0.01;
    params.seed = skoro::Seed{0};
    const auto reports = skoro::mc_reflected_bm_experiment(params);
    const auto controls = skoro::mc_reflected_bm_negative_control(params);
    const bool ok = reports.xhat.pass && reports.yhat.pass && !controls.xhat.pass &&
                    !controls.yhat.pass;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "xhat D=%.5f, yhat D=%.5f < %.5f, controls D=%.3f/%.3f",
                  reports.xhat.statistic, reports.yhat.statistic,
                  reports.xhat.critical_value, controls.xhat.statistic,
                  controls.yhat.statistic);
    report(6, "KS: one-sided gaps vs half-normal at alpha 0.01", ok, timer.seconds(),
           60.0, detail);
}

// --- criterion 7 helpers -----------------------------------------------------

bool continuous_axioms() {
    skoro::Xoshiro128pp rng = skoro::trial_stream(skoro::Seed{71}, 0);
    for (int rep = 0; rep < 10000; ++rep) {
        // dyadic-grid walks keep every float operation exact
        const std::size_t len = 1 + rng.next() % 48;
        skoro::SampledPath x{0.0, 1.0, {}}, b{0.0, 1.0, {}};
        skoro::SampledPath x2{0.0, 1.0, {}}, b2{0.0, 1.0, {}};
        double xv = static_cast<double>(rng.next() % 4);
        double bv = 0.0;
        double xv2 = static_cast<double>(rng.next() % 4);
        double bv2 = 0.0;
        for (std::size_t i = 0; i < len; ++i) {
            x.values.push_back(xv);
            b.values.push_back(bv);
            x2.values.push_back(xv2);
            b2.values.push_back(bv2);
            xv += static_cast<double>(static_cast<int>(rng.next() % 17) - 8) / 8.0;
            bv += static_cast<double>(static_cast<int>(rng.next() % 17) - 8) / 8.0;
            xv2 += static_cast<double>(static_cast<int>(rng.next() % 17) - 8) / 8.0;
            bv2 += static_cast<double>(static_cast<int>(rng.next() % 17) - 8) / 8.0;
        }
        const auto r = skoro::push_up(x, b);
        double prev_push = 0.0;
        for (std::size_t i = 0; i < len; ++i) {
            if (!(r.values[i] >= b.values[i])) return false;  // non-negativity
            const double push = r.values[i] - x.values[i];
            if (!(push >= prev_push)) return false;  // monotone push
            if (push > prev_push && r.values[i] != b.values[i]) return false;  // contact
            prev_push = push;
        }
        // Lipschitz against an independent admissible pair on the same grid
        const auto r2 = skoro::push_up(x2, b2);
        double lhs = 0.0, dx = 0.0, db = 0.0;
        for (std::size_t i = 0; i < len; ++i) {
            lhs = std::max(lhs, std::fabs(r.values[i] - r2.values[i]));
            dx = std::max(dx, std::fabs(x.values[i] - x2.values[i]));
            db = std::max(db, std::fabs(b.values[i] - b2.values[i]));
        }
        if (lhs > 2.0 * dx + db) return false;
    }
    return true;
}

bool discrete_axioms_exhaustive() {
    // all sign pairs of both walks through length 12
    for (std::size_t len = 1; len <= 12; ++len) {
        const std::uint64_t combos = std::uint64_t{1} << (2 * len);
        for (std::uint64_t bits = 0; bits < combos; ++bits) {
            std::int64_t xv = 1, bv = 0, rv = 1, folded = 1;
            std::int64_t push = 0, prev_push = 0;
            for (std::size_t i = 0; i < len; ++i) {
                const std::int64_t dx = (bits >> (2 * i)) & 1 ? 1 : -1;
                const std::int64_t db = (bits >> (2 * i + 1)) & 1 ? 1 : -1;
                xv += dx;
                bv += db;
                push = std::max(push, bv + 1 - xv);
                rv = xv + push;
                folded = skoro::online_push_up_step(folded, dx, bv);
                if (folded != rv) return false;            // fold == closed form
                if (rv - bv < 1) return false;             // stays above the barrier
                if (push < prev_push) return false;        // monotone push
                if (push > prev_push && rv != bv + 1) return false;  // contact
                prev_push = push;
            }
        }
    }
    return true;
}

bool discrete_lipschitz_random() {
    skoro::Xoshiro128pp rng = skoro::trial_stream(skoro::Seed{73}, 0);
    for (int rep = 0; rep < 10000; ++rep) {
        const std::size_t len = 1 + rng.next() % 64;
        skoro::LatticeWalk b1, x1, b2, x2;
        b1.start = 0;
        b2.start = 0;
        x1.start = 1 + 2 * static_cast<std::int64_t>(rng.next() % 3);
        x2.start = 1 + 2 * static_cast<std::int64_t>(rng.next() % 3);
        for (std::size_t i = 0; i < len; ++i) {
            b1.steps.push_back(static_cast<std::int8_t>(skoro::step_sign(rng.next())));
            x1.steps.push_back(static_cast<std::int8_t>(skoro::step_sign(rng.next())));
            b2.steps.push_back(static_cast<std::int8_t>(skoro::step_sign(rng.next())));
            x2.steps.push_back(static_cast<std::int8_t>(skoro::step_sign(rng.next())));
        }
        const auto r1 = skoro::discrete_push_up(x1, b1).values();
        const auto r2 = skoro::discrete_push_up(x2, b2).values();
        const auto x1v = x1.values();
        const auto x2v = x2.values();
        const auto b1v = b1.values();
        const auto b2v = b2.values();
        std::int64_t lhs = 0, dx = 0, db = 0;
        for (std::size_t i = 0; i <= len; ++i) {
            lhs = std::max<std::int64_t>(lhs, std::llabs(r1[i] - r2[i]));
            dx = std::max<std::int64_t>(dx, std::llabs(x1v[i] - x2v[i]));
            db = std::max<std::int64_t>(db, std::llabs(b1v[i] - b2v[i]));
        }
        if (lhs > 2 * dx + db) return false;
    }
    return true;
}

// 7. defining properties of both push maps, Lipschitz bound, fold equivalence
void criterion_reflection_axioms() {
    Timer timer;
    const bool cont = continuous_axioms();
    const bool disc = discrete_axioms_exhaustive();
    const bool lip = discrete_lipschitz_random();
    std::string detail;
    if (!cont) detail += "continuous axioms failed; ";
    if (!disc) detail += "exhaustive discrete axioms failed; ";
    if (!lip) detail += "discrete Lipschitz bound failed; ";
    report(7, "reflection axioms (10^4 continuous pairs, exhaustive <= 12 discrete)",
           cont && disc && lip, timer.seconds(), 600.0, detail);
}

// 8. simulated one-step frequencies vs the exact law
void criterion_simulator_agreement() {
    Timer timer;
    const auto rep = skoro::verify_simulator_agreement(skoro::Seed{0}, 1000000, 0.01);
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "chi2=%.1f < %.1f over %llu cells (dof %llu)", rep.statistic,
                  rep.threshold, static_cast<unsigned long long>(rep.cells),
                  static_cast<unsigned long long>(rep.dof));
    report(8, "simulator vs exact law, chi-square at alpha 0.01, 10^6 visits",
           rep.pass, timer.seconds(), 600.0, detail);
}

}  // namespace

int main() {
    criterion_kernel_equivalence();
    criterion_history_identities();
    criterion_marginal_agreement();
    criterion_generator_moments();
    criterion_bessel_ks();
    criterion_reflected_bm_ks();
    criterion_reflection_axioms();
    criterion_simulator_agreement();
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
