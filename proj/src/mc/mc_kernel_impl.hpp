#pragma once

#include "skoro/mc_kernel.hpp"

namespace skoro::mc::detail {

void run_trials_scalar(std::int64_t n_steps, Seed seed, std::uint64_t first_trial,
                       std::span<TrialGaps> out);

#if defined(SKORO_AVX2_KERNEL)
void run_trials_avx2(std::int64_t n_steps, Seed seed, std::uint64_t first_trial,
                     std::span<TrialGaps> out);
#endif

}  // namespace skoro::mc::detail
