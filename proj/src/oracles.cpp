#include "skoro/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace skoro {

namespace {

const double kSqrt2OverPi = std::sqrt(2.0 / std::numbers::pi);

double bes3_unit_density(double r) {
    return kSqrt2OverPi * r * r * std::exp(-0.5 * r * r);
}

double half_normal_unit_density(double r) {
    return kSqrt2OverPi * std::exp(-0.5 * r * r);
}

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double b,
                     double fa, double fm, double fb, double whole, double tol,
                     int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    if (!(b >= a)) throw std::invalid_argument("integration bounds out of order");
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson(fa, fm, fb, b - a);
    return adaptive_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

double bes3_unit_cdf(double r) {
    if (r < 0.0) throw std::invalid_argument("r must be >= 0");
    return std::erf(r / std::numbers::sqrt2) - kSqrt2OverPi * r * std::exp(-0.5 * r * r);
}

double half_normal_unit_cdf(double r) {
    if (r < 0.0) throw std::invalid_argument("r must be >= 0");
    return std::erf(r / std::numbers::sqrt2);
}

MarginalOracle bes3_unit_oracle() {
    return MarginalOracle{"bes3_unit", [](double r) { return bes3_unit_cdf(r); },
                          [](double r) { return bes3_unit_density(r); }};
}

MarginalOracle half_normal_unit_oracle() {
    return MarginalOracle{"half_normal_unit",
                          [](double r) { return half_normal_unit_cdf(r); },
                          [](double r) { return half_normal_unit_density(r); }};
}

void validate_oracle(const MarginalOracle& oracle, std::size_t grid_points, double r_max,
                     double tol) {
    if (grid_points == 0 || !(r_max > 0.0) || !(tol > 0.0)) {
        throw std::invalid_argument("bad oracle validation parameters");
    }
    if (std::fabs(oracle.cdf(0.0)) > tol) {
        throw std::runtime_error(oracle.name + ": cdf(0) must be 0");
    }
    const double panel_tol = tol / (4.0 * static_cast<double>(grid_points));
    double acc = 0.0;
    double prev_r = 0.0;
    double prev_cdf = 0.0;
    for (std::size_t i = 1; i <= grid_points; ++i) {
        const double r = r_max * static_cast<double>(i) / static_cast<double>(grid_points);
        acc += adaptive_simpson(oracle.density, prev_r, r, panel_tol);
        const double cdf = oracle.cdf(r);
        if (cdf < prev_cdf) {
            throw std::runtime_error(oracle.name + ": cdf is not monotone at r=" +
                                     std::to_string(r));
        }
        if (std::fabs(cdf - acc) > tol) {
            throw std::runtime_error(oracle.name + ": cdf deviates from quadrature by " +
                                     std::to_string(std::fabs(cdf - acc)) + " at r=" +
                                     std::to_string(r));
        }
        prev_r = r;
        prev_cdf = cdf;
    }
}

double oracle_quantile(const MarginalOracle& oracle, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0, 1)");
    double lo = 0.0;
    double hi = 1.0;
    while (oracle.cdf(hi) < q && hi < 1e6) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (oracle.cdf(mid) < q ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace skoro
