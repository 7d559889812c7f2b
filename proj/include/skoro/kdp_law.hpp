#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "skoro/rational.hpp"

namespace skoro {

// One transition of the (k, d, p) chain: k-increment plus the next (d, p).
struct KdpMove {
    std::int64_t dk = 0;
    std::int64_t d = 1;
    std::int64_t p = 0;

    auto operator<=>(const KdpMove&) const = default;
};

// Exact one-step law of the chain from (d, p): the eight equally likely sign
// triples fed through the online push kernels. The law does not depend on k.
std::map<KdpMove, Rat> kdp_step_distribution(std::int64_t d, std::int64_t p);

struct KernelEquivalenceReport {
    std::int64_t d_max = 0;
    std::int64_t pairs_checked = 0;  // (d, p) cells enumerated
    bool pass = false;
    std::string first_failure;
};

// For every d <= d_max and p in [0, d-1]: the d-marginal of the one-step law
// averaged under uniform p must equal the kernel row exactly, the two
// gap-shrinking move classes (dk=+1, d-1, p) and (dk=+1, d-1, p-1) must carry
// mass 1/8 exactly on their indicator ranges, and nothing else may shrink
// the gap.
KernelEquivalenceReport verify_kernel_equivalence(std::int64_t d_max);

}  // namespace skoro
