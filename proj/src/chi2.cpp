#include "skoro/chi2.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "skoro/kdp_law.hpp"
#include "skoro/triple.hpp"

namespace skoro {

namespace {

double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 1000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_continued_fraction(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("bad gamma arguments");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_continued_fraction(a, x);
}

double chi_square_cdf(double x, double dof) {
    if (!(dof > 0.0)) throw std::invalid_argument("dof must be positive");
    if (x <= 0.0) return 0.0;
    return regularized_gamma_p(0.5 * dof, 0.5 * x);
}

double chi_square_quantile(double dof, double prob) {
    if (!(prob > 0.0 && prob < 1.0)) throw std::invalid_argument("prob must lie in (0, 1)");
    double lo = 0.0;
    double hi = dof + 1.0;
    while (chi_square_cdf(hi, dof) < prob && hi < 1e12) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (chi_square_cdf(mid, dof) < prob ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

AgreementReport verify_simulator_agreement(Seed seed, std::uint64_t min_transitions,
                                           double alpha, std::uint64_t min_cell_visits) {
    if (min_transitions == 0) throw std::invalid_argument("min_transitions must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
    constexpr std::int64_t kStepsPerTrajectory = 512;

    std::map<std::pair<std::int64_t, std::int64_t>, std::map<KdpMove, std::uint64_t>>
        counts;
    std::uint64_t total = 0;
    std::uint64_t trial = 0;
    while (total < min_transitions) {
        const auto trajectory =
            reflect_triple(simulate_triple(kStepsPerTrajectory, seed, trial));
        const auto states = extract_kdp(trajectory);
        for (std::size_t i = 0; i + 1 < states.size(); ++i) {
            const KDPState& a = states[i];
            const KDPState& b = states[i + 1];
            counts[{a.d, a.p}][KdpMove{b.k - a.k, b.d, b.p}] += 1;
            ++total;
        }
        ++trial;
    }

    AgreementReport report;
    report.transitions = total;
    report.alpha = alpha;
    for (const auto& [cell, moves] : counts) {
        std::uint64_t visits = 0;
        for (const auto& [move, c] : moves) visits += c;
        if (visits < min_cell_visits) continue;
        const auto law = kdp_step_distribution(cell.first, cell.second);
        for (const auto& [move, c] : moves) {
            if (!law.contains(move)) {
                throw std::logic_error("simulated transition outside the exact law");
            }
        }
        for (const auto& [move, mass] : law) {
            const double expected = static_cast<double>(visits) * mass.to_double();
            const auto it = moves.find(move);
            const double observed =
                it == moves.end() ? 0.0 : static_cast<double>(it->second);
            const double diff = observed - expected;
            report.statistic += diff * diff / expected;
        }
        report.dof += law.size() - 1;
        report.used += visits;
        report.cells += 1;
    }
    if (report.dof == 0) throw std::runtime_error("no cell reached the visit floor");
    report.threshold = chi_square_quantile(static_cast<double>(report.dof), 1.0 - alpha);
    report.pass = report.statistic < report.threshold;
    return report;
}

}  // namespace skoro
