#include "skoro/lattice.hpp"

#include <stdexcept>

namespace skoro {

std::int64_t LatticeWalk::value(std::size_t t) const {
    std::int64_t v = start;
    for (std::size_t i = 0; i < t; ++i) v += steps[i];
    return v;
}

std::vector<std::int64_t> LatticeWalk::values() const {
    std::vector<std::int64_t> v(steps.size() + 1);
    v[0] = start;
    for (std::size_t i = 0; i < steps.size(); ++i) v[i + 1] = v[i] + steps[i];
    return v;
}

LatticeWalk walk_from_values(std::span<const std::int64_t> values) {
    if (values.empty()) throw std::invalid_argument("walk must be nonempty");
    LatticeWalk w;
    w.start = values[0];
    w.steps.reserve(values.size() - 1);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        const std::int64_t d = values[i + 1] - values[i];
        if (d != 1 && d != -1) throw std::invalid_argument("walk steps must be +-1");
        w.steps.push_back(static_cast<std::int8_t>(d));
    }
    return w;
}

namespace {

void check_reflection_pair(const LatticeWalk& a, const LatticeWalk& b) {
    if (a.length() != b.length()) throw std::invalid_argument("length mismatch");
    if (a.even_class() == b.even_class()) throw std::invalid_argument("parity violation");
}

}  // namespace

LatticeWalk discrete_push_up(const LatticeWalk& x, const LatticeWalk& b) {
    check_reflection_pair(x, b);
    if (x.start < b.start) throw std::invalid_argument("initial order violated");
    const auto xv = x.values();
    const auto bv = b.values();
    LatticeWalk r;
    r.start = xv[0];
    r.steps.reserve(x.length());
    std::int64_t push = 0;  // running max of (b + 1 - x)_+
    std::int64_t prev = xv[0];
    for (std::size_t t = 1; t < xv.size(); ++t) {
        const std::int64_t next = std::max(xv[t] + push, bv[t] + 1);
        push = next - xv[t];
        const std::int64_t d = next - prev;
        if (d != 1 && d != -1) throw std::logic_error("reflected walk left the lattice");
        r.steps.push_back(static_cast<std::int8_t>(d));
        prev = next;
    }
    return r;
}

LatticeWalk discrete_push_down(const LatticeWalk& y, const LatticeWalk& b) {
    check_reflection_pair(y, b);
    if (y.start > b.start) throw std::invalid_argument("initial order violated");
    const auto yv = y.values();
    const auto bv = b.values();
    LatticeWalk r;
    r.start = yv[0];
    r.steps.reserve(y.length());
    std::int64_t push = 0;  // running max of (y - b + 1)_+
    std::int64_t prev = yv[0];
    for (std::size_t t = 1; t < yv.size(); ++t) {
        const std::int64_t next = std::min(yv[t] - push, bv[t] - 1);
        push = yv[t] - next;
        const std::int64_t d = next - prev;
        if (d != 1 && d != -1) throw std::logic_error("reflected walk left the lattice");
        r.steps.push_back(static_cast<std::int8_t>(d));
        prev = next;
    }
    return r;
}

}  // namespace skoro
