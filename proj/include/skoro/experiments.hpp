#pragma once

#include <cstdint>
#include <vector>

#include "skoro/ks.hpp"
#include "skoro/rng.hpp"

namespace skoro {

struct ExperimentParams {
    std::int64_t n_steps = 10000;  // >= 1000
    std::int64_t trials = 20000;   // >= 1000
    double alpha = 0.01;
    Seed seed;
};

// Scaled final-time statistics of one trial:
//   bessel: sqrt(2) * d_n / sqrt(n)      (half-gap, tested against BES3)
//   xhat:   (u_ref - m)(n) / sqrt(2 n)   (tested against |N(0,1)|)
//   yhat:   (m - l_ref)(n) / sqrt(2 n)
enum class GapStat { bessel, xhat, yhat };

const char* gap_stat_name(GapStat stat);

// One sample per trial, parallel over trial substreams; deterministic in
// (params, seed) and independent of the thread count.
std::vector<double> mc_gap_samples(const ExperimentParams& params, GapStat stat);

// KS test of the bessel statistic against the validated BES3 unit-time
// marginal. Both oracles are re-validated against quadrature first.
KSReport mc_bessel_experiment(const ExperimentParams& params);

// Same samples tested against the half-normal law; must fail.
KSReport mc_bessel_negative_control(const ExperimentParams& params);

struct ReflectedBmReports {
    KSReport xhat;
    KSReport yhat;
};

// KS tests of both one-sided gaps against the half-normal law.
ReflectedBmReports mc_reflected_bm_experiment(const ExperimentParams& params);

// Same samples tested against the BES3 law; must fail.
ReflectedBmReports mc_reflected_bm_negative_control(const ExperimentParams& params);

}  // namespace skoro
