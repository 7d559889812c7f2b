#include "skoro/bessel_kernel.hpp"

#include <stdexcept>

namespace skoro {

Rat bessel_kernel(std::int64_t x, std::int64_t y) {
    if (x < 1) throw std::invalid_argument("x must be >= 1");
    if (y < 0) throw std::invalid_argument("y must be >= 0");
    if (y == x) return Rat{y, 2 * x};
    if (y == x + 1 || y + 1 == x) return Rat{y, 4 * x};
    return Rat{0};
}

KernelRow kernel_row(std::int64_t x) {
    KernelRow row;
    row.x = x;
    for (std::int64_t y = x - 1; y <= x + 1; ++y) {
        if (y < 0) continue;
        row.entries.emplace(y, bessel_kernel(x, y));
    }
    return row;
}

Rat kernel_drift(std::int64_t d) {
    Rat sum;
    for (const auto& [y, p] : kernel_row(d).entries) sum += p * Rat{y - d};
    return sum;
}

Rat kernel_second_moment(std::int64_t d) {
    Rat sum;
    for (const auto& [y, p] : kernel_row(d).entries) {
        sum += p * Rat{(y - d) * (y - d)};
    }
    return sum;
}

std::map<std::int64_t, Rat> chain_marginal(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    std::map<std::int64_t, Rat> law{{1, Rat{1}}};
    for (std::int64_t step = 0; step < n; ++step) {
        std::map<std::int64_t, Rat> next;
        for (const auto& [x, mass] : law) {
            for (std::int64_t y = x - 1; y <= x + 1; ++y) {
                if (y < 1) continue;
                const Rat p = bessel_kernel(x, y);
                if (p.is_zero()) continue;
                next[y] += mass * p;
            }
        }
        law = std::move(next);
    }
    return law;
}

}  // namespace skoro
