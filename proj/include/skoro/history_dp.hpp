#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skoro/rational.hpp"

namespace skoro {

inline constexpr std::uint64_t kDefaultHistoryCap = 531441;  // 3^12

// One positive-probability gap history d_0..d_n together with the joint
// masses of the offset: p_dist[p] = P(history and P_n = p).
struct HistoryRecord {
    std::vector<std::int64_t> d_history;  // starts at 1
    Rat prob;
    std::map<std::int64_t, Rat> p_dist;
};

struct LemmaLevel {
    std::int64_t n = 0;
    std::uint64_t histories = 0;
    bool offset_uniform = true;  // conditional offset law uniform on {0..d_n-1}
    bool kernel_match = true;    // conditional one-step gap law equals the kernel row
    bool marginal_match = true;  // summed d-marginal equals chain_marginal(n)
};

struct LemmaCounterexample {
    std::vector<std::int64_t> d_history;
    std::string detail;
};

struct LemmaReport {
    std::int64_t n_max = 0;
    bool pass = false;
    std::vector<LemmaLevel> levels;
    std::optional<LemmaCounterexample> counterexample;
};

// Exact dynamic program over every positive-probability gap history up to
// horizon n_max. After each step it asserts, in integer arithmetic with no
// tolerance, that (a) each history's conditional offset law is uniform on
// {0..d_n-1}, (b) each history's conditional one-step gap law equals the
// kernel row, and (c) the d-marginal summed over histories equals the exact
// chain marginal. Stops at the first counterexample. Throws
// std::runtime_error if a level would exceed cap histories.
LemmaReport verify_lemma_identities(std::int64_t n_max, std::uint64_t cap = kDefaultHistoryCap);

// Materialized history records at horizon n (mainly for tests and reports).
std::vector<HistoryRecord> enumerate_histories(std::int64_t n,
                                               std::uint64_t cap = kDefaultHistoryCap);

// Exact law of d_n obtained by summing histories.
std::map<std::int64_t, Rat> history_d_marginal(std::int64_t n,
                                               std::uint64_t cap = kDefaultHistoryCap);

}  // namespace skoro
