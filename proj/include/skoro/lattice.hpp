#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace skoro {

// Nearest-neighbour walk on one of the two space-time lattices: the even
// class (t + value even) or the odd class (t + value odd). Storing the start
// plus the +-1 step sequence makes the parity class structural: it is fixed
// by the parity of start alone.
struct LatticeWalk {
    std::int64_t start = 0;
    std::vector<std::int8_t> steps;  // each +1 or -1

    std::size_t length() const { return steps.size(); }  // number of steps
    std::int64_t value(std::size_t t) const;
    std::vector<std::int64_t> values() const;  // length() + 1 entries
    bool even_class() const { return ((start % 2) + 2) % 2 == 0; }
};

// Builds a walk from its value sequence; consecutive values must differ by 1.
LatticeWalk walk_from_values(std::span<const std::int64_t> values);

// One-step push kernels. b_next is the barrier value after its own step; the
// previous reflected value must already satisfy the ordering against the
// previous barrier value.
constexpr std::int64_t online_push_up_step(std::int64_t u, std::int64_t dx,
                                           std::int64_t b_next) {
    return std::max(u + dx, b_next + 1);
}

constexpr std::int64_t online_push_down_step(std::int64_t l, std::int64_t dy,
                                             std::int64_t b_next) {
    return std::min(l + dy, b_next - 1);
}

// Closed-form discrete push maps. x (resp. y) and b must have equal length,
// opposite parity classes, and x.start >= b.start (resp. y.start <= b.start).
//   push_up:   r[t] = x[t] + max(0, max_{s<=t}(b[s] + 1 - x[s]))
//   push_down: r[t] = y[t] - max(0, max_{s<=t}(y[s] - b[s] + 1))
LatticeWalk discrete_push_up(const LatticeWalk& x, const LatticeWalk& b);
LatticeWalk discrete_push_down(const LatticeWalk& y, const LatticeWalk& b);

}  // namespace skoro
