#pragma once

#include <cstdint>
#include <map>

#include "skoro/rational.hpp"

namespace skoro {

// Transition kernel of the half-gap chain on {1, 2, ...}:
//   p(x, y) = (y / x) * (1/2 if y == x, 1/4 if |y - x| == 1, 0 otherwise).
// Rows sum to one; the y = 0 entry vanishes, so the chain never leaves the
// positive integers.
Rat bessel_kernel(std::int64_t x, std::int64_t y);

struct KernelRow {
    std::int64_t x = 1;
    std::map<std::int64_t, Rat> entries;  // y in {x-1, x, x+1}, y >= 0
};

KernelRow kernel_row(std::int64_t x);

// sum_y p(d, y) (y - d); equals 1/(2d) for every d >= 1.
Rat kernel_drift(std::int64_t d);

// sum_y p(d, y) (y - d)^2; equals 1/2 for every d >= 1.
Rat kernel_second_moment(std::int64_t d);

// Exact n-step law of the kernel chain started at 1.
std::map<std::int64_t, Rat> chain_marginal(std::int64_t n);

}  // namespace skoro
