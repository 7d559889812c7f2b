#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace skoro {

// A nonnegative limit law given by its CDF, plus the density used to check
// the CDF against direct quadrature before any test relies on it.
struct MarginalOracle {
    std::string name;
    std::function<double(double)> cdf;
    std::function<double(double)> density;
};

// Time-1 marginal CDF of the standard 3d Bessel process (Maxwell law):
//   F(r) = erf(r / sqrt 2) - sqrt(2/pi) r exp(-r^2 / 2),
// the integral of sqrt(2/pi) r^2 exp(-r^2/2).
double bes3_unit_cdf(double r);

// CDF of |N(0, 1)|: F(r) = erf(r / sqrt 2).
double half_normal_unit_cdf(double r);

MarginalOracle bes3_unit_oracle();
MarginalOracle half_normal_unit_oracle();

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol);

// Compares the oracle CDF with cumulative quadrature of its density on a
// uniform grid over (0, r_max]; throws std::runtime_error when any grid point
// deviates by more than tol or the CDF fails to be monotone from 0.
void validate_oracle(const MarginalOracle& oracle, std::size_t grid_points, double r_max,
                     double tol);

// Inverse CDF by bisection; q must lie in (0, 1).
double oracle_quantile(const MarginalOracle& oracle, double q);

}  // namespace skoro
