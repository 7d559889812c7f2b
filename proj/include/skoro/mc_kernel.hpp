#pragma once

#include <cstdint>
#include <span>

#include "skoro/rng.hpp"

namespace skoro::mc {

// Final gaps of one trial: top = u_reflected - m >= 1 (odd) and
// bottom = m - l_reflected >= 1 (odd) at the last step.
struct TrialGaps {
    std::int32_t top = 1;
    std::int32_t bottom = 1;

    bool operator==(const TrialGaps&) const = default;
};

enum class Kernel { scalar, avx2 };

bool kernel_available(Kernel k);
Kernel active_kernel();  // best available variant, picked at runtime
const char* kernel_name(Kernel k);

// Runs trials [first_trial, first_trial + out.size()) of the given seed and
// stores their final gaps. Every kernel variant produces identical bytes.
void run_trials(Kernel k, std::int64_t n_steps, Seed seed, std::uint64_t first_trial,
                std::span<TrialGaps> out);
void run_trials(std::int64_t n_steps, Seed seed, std::uint64_t first_trial,
                std::span<TrialGaps> out);

// Splits the trial range across threads (0 = resolve_thread_count()); the
// output does not depend on the thread count.
void run_trials_parallel(std::int64_t n_steps, Seed seed, std::uint64_t first_trial,
                         std::span<TrialGaps> out, unsigned threads = 0);

// SKORO_THREADS environment override, else hardware concurrency.
unsigned resolve_thread_count();

}  // namespace skoro::mc
