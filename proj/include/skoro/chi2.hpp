#pragma once

#include <cstdint>

#include "skoro/rng.hpp"

namespace skoro {

// Regularized lower incomplete gamma P(a, x) (series / continued fraction).
double regularized_gamma_p(double a, double x);

double chi_square_cdf(double x, double dof);
double chi_square_quantile(double dof, double prob);

struct AgreementReport {
    std::uint64_t transitions = 0;  // simulated one-step visits in total
    std::uint64_t used = 0;         // visits inside cells above the floor
    std::uint64_t cells = 0;
    std::uint64_t dof = 0;
    double statistic = 0.0;
    double threshold = 0.0;
    double alpha = 0.0;
    bool pass = false;
};

// Simulates trajectories until at least min_transitions one-step visits are
// collected, pools per-(d, p) outcome frequencies over cells with at least
// min_cell_visits visits, and chi-square-tests them against the exact
// one-step law.
AgreementReport verify_simulator_agreement(Seed seed, std::uint64_t min_transitions,
                                           double alpha,
                                           std::uint64_t min_cell_visits = 50);

}  // namespace skoro
