#include "skoro/kdp_law.hpp"

#include <stdexcept>

#include "skoro/bessel_kernel.hpp"
#include "skoro/lattice.hpp"

namespace skoro {

std::map<KdpMove, Rat> kdp_step_distribution(std::int64_t d, std::int64_t p) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (p < 0 || p > d - 1) throw std::invalid_argument("p must lie in [0, d-1]");
    // Embedding with the middle walk at 0; the law is independent of k, so
    // any shift gives the same projected outcome.
    const std::int64_t u = 2 * (d - p) - 1;
    const std::int64_t l = -(2 * p + 1);
    const Rat eighth{1, 8};
    std::map<KdpMove, Rat> law;
    for (int signs = 0; signs < 8; ++signs) {
        const std::int64_t dm = (signs & 1) ? 1 : -1;
        const std::int64_t du = (signs & 2) ? 1 : -1;
        const std::int64_t dl = (signs & 4) ? 1 : -1;
        const std::int64_t m2 = dm;
        const std::int64_t u2 = online_push_up_step(u, du, m2);
        const std::int64_t l2 = online_push_down_step(l, dl, m2);
        const KdpMove move{l2 - l, (u2 - l2) / 2, (m2 - l2 - 1) / 2};
        law[move] += eighth;
    }
    return law;
}

KernelEquivalenceReport verify_kernel_equivalence(std::int64_t d_max) {
    if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
    KernelEquivalenceReport report;
    report.d_max = d_max;
    report.pass = true;
    const Rat eighth{1, 8};
    for (std::int64_t d = 1; d <= d_max && report.pass; ++d) {
        const KernelRow row = kernel_row(d);
        std::map<std::int64_t, Rat> averaged;  // d-marginal under uniform p
        const Rat uniform{1, d};
        for (std::int64_t p = 0; p <= d - 1; ++p) {
            ++report.pairs_checked;
            const auto law = kdp_step_distribution(d, p);
            Rat total;
            Rat shrink_total;
            for (const auto& [move, mass] : law) {
                total += mass;
                averaged[move.d] += mass * uniform;
                if (move.d == d - 1) shrink_total += mass;
            }
            if (total != Rat{1}) {
                report.pass = false;
                report.first_failure = "law from (d=" + std::to_string(d) +
                                       ", p=" + std::to_string(p) + ") sums to " +
                                       total.to_string();
                break;
            }
            // the two published gap-shrinking classes, and nothing else
            const auto type_a = law.find(KdpMove{1, d - 1, p});
            const Rat a_mass = type_a == law.end() ? Rat{} : type_a->second;
            const auto type_b = law.find(KdpMove{1, d - 1, p - 1});
            const Rat b_mass = type_b == law.end() ? Rat{} : type_b->second;
            const Rat a_expected = p <= d - 2 ? eighth : Rat{};
            const Rat b_expected = p >= 1 ? eighth : Rat{};
            if (a_mass != a_expected || b_mass != b_expected ||
                shrink_total != a_expected + b_expected) {
                report.pass = false;
                report.first_failure = "gap-shrinking masses wrong from (d=" +
                                       std::to_string(d) + ", p=" + std::to_string(p) +
                                       ")";
                break;
            }
        }
        if (!report.pass) break;
        for (std::int64_t y = d - 1; y <= d + 1; ++y) {
            const Rat expected = y >= 0 ? bessel_kernel(d, y) : Rat{};
            const auto it = averaged.find(y);
            const Rat got = it == averaged.end() ? Rat{} : it->second;
            if (got != expected) {
                report.pass = false;
                report.first_failure = "uniform-p average at d=" + std::to_string(d) +
                                       ", y=" + std::to_string(y) + " is " +
                                       got.to_string() + ", kernel says " +
                                       expected.to_string();
                break;
            }
        }
    }
    return report;
}

}  // namespace skoro
