#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "skoro/oracles.hpp"

namespace skoro {

struct KSReport {
    std::size_t sample_count = 0;
    double statistic = 0.0;
    double critical_value = 0.0;
    double alpha = 0.0;
    bool pass = false;  // statistic < critical_value
    std::string oracle;
    std::map<std::string, std::string> metadata;  // experiment parameters
};

// Asymptotic Kolmogorov critical value c(alpha)/sqrt(n) with
// c(alpha) = sqrt(-ln(alpha/2) / 2).
double kolmogorov_critical(double alpha, std::size_t n);

// One-sample Kolmogorov-Smirnov sup-distance against the oracle CDF; needs at
// least 100 samples and alpha in (0, 1). Deterministic in its inputs.
KSReport ks_test(std::span<const double> samples, const MarginalOracle& oracle,
                 double alpha);

}  // namespace skoro
