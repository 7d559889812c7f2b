#include "skoro/ks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace skoro {

double kolmogorov_critical(double alpha, std::size_t n) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1)");
    }
    if (n == 0) throw std::invalid_argument("empty sample");
    return std::sqrt(-0.5 * std::log(alpha / 2.0)) /
           std::sqrt(static_cast<double>(n));
}

KSReport ks_test(std::span<const double> samples, const MarginalOracle& oracle,
                 double alpha) {
    if (samples.size() < 100) {
        throw std::invalid_argument("too few samples (need >= 100)");
    }
    const double critical = kolmogorov_critical(alpha, samples.size());
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double statistic = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = oracle.cdf(sorted[i]);
        const double below = f - static_cast<double>(i) / n;
        const double above = static_cast<double>(i + 1) / n - f;
        statistic = std::max({statistic, below, above});
    }
    KSReport report;
    report.sample_count = sorted.size();
    report.statistic = statistic;
    report.critical_value = critical;
    report.alpha = alpha;
    report.pass = statistic < critical;
    report.oracle = oracle.name;
    return report;
}

}  // namespace skoro
