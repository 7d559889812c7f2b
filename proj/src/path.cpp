#include "skoro/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace skoro {

void validate_path(const SampledPath& p) {
    if (!(p.dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (p.values.empty()) throw std::invalid_argument("path must be nonempty");
}

double SampledPath::at(double t) const {
    const double u = (t - t0) / dt;
    if (u <= 0.0) return values.front();
    if (u >= static_cast<double>(values.size() - 1)) return values.back();
    const auto i = static_cast<std::size_t>(u);
    const double frac = u - static_cast<double>(i);
    return values[i] + frac * (values[i + 1] - values[i]);
}

bool SampledPath::same_grid(const SampledPath& other) const {
    return t0 == other.t0 && dt == other.dt && values.size() == other.values.size();
}

namespace {

void check_pair(const SampledPath& a, const SampledPath& b) {
    validate_path(a);
    validate_path(b);
    if (!a.same_grid(b)) throw std::invalid_argument("incompatible grids");
}

}  // namespace

SampledPath push_up(const SampledPath& x, const SampledPath& b) {
    check_pair(x, b);
    if (x.values.front() < b.values.front()) {
        throw std::invalid_argument("initial order violated");
    }
    SampledPath r{x.t0, x.dt, std::vector<double>(x.size())};
    double push = 0.0;  // running max of (b - x)_+
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double cand = x.values[i] + push;
        if (cand < b.values[i]) {
            r.values[i] = b.values[i];  // contact: barrier value copied exactly
            push = std::max(push, b.values[i] - x.values[i]);
        } else {
            r.values[i] = cand;
        }
    }
    return r;
}

SampledPath push_down(const SampledPath& y, const SampledPath& b) {
    check_pair(y, b);
    if (y.values.front() > b.values.front()) {
        throw std::invalid_argument("initial order violated");
    }
    SampledPath r{y.t0, y.dt, std::vector<double>(y.size())};
    double push = 0.0;  // running max of (y - b)_+
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double cand = y.values[i] - push;
        if (cand > b.values[i]) {
            r.values[i] = b.values[i];
            push = std::max(push, y.values[i] - b.values[i]);
        } else {
            r.values[i] = cand;
        }
    }
    return r;
}

}  // namespace skoro
