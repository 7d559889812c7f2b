#pragma once

#include <cstddef>
#include <vector>

namespace skoro {

// Real-valued path sampled on a uniform time grid. Linear interpolation
// between grid points defines the path at all intermediate times.
struct SampledPath {
    double t0 = 0.0;
    double dt = 1.0;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double time_at(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
    double horizon() const { return time_at(values.size() - 1); }
    double at(double t) const;  // interpolated value, clamped to the grid range
    bool same_grid(const SampledPath& other) const;
};

// dt > 0 and at least one sample.
void validate_path(const SampledPath& p);

// Upward Skorohod push of x on the barrier b:
//   r[i] = x[i] + max_{j<=i} max(b[j] - x[j], 0),  requires x[0] >= b[0].
// r - b >= 0 holds at every grid point, and whenever the push grows at i the
// output copies b[i] bit for bit.
SampledPath push_up(const SampledPath& x, const SampledPath& b);

// Downward push, r[i] = y[i] - max_{j<=i} max(y[j] - b[j], 0); equals
// -push_up(-y, -b) elementwise. Requires y[0] <= b[0].
SampledPath push_down(const SampledPath& y, const SampledPath& b);

}  // namespace skoro
