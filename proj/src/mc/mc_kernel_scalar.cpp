// Scalar reference kernel for batched trials. One trial keeps only the two
// gaps (u_ref - m, m - l_ref); each is a Lindley-type recursion clamped at 1.
#include <algorithm>

#include "mc_kernel_impl.hpp"

namespace skoro::mc::detail {

void run_trials_scalar(std::int64_t n_steps, Seed seed, std::uint64_t first_trial,
                       std::span<TrialGaps> out) {
    for (std::size_t i = 0; i < out.size(); ++i) {
        Xoshiro128pp rng = trial_stream(seed, first_trial + i);
        std::int32_t top = 1;
        std::int32_t bottom = 1;
        for (std::int64_t s = 0; s < n_steps; ++s) {
            const std::int32_t dm = step_sign(rng.next());
            const std::int32_t du = step_sign(rng.next());
            const std::int32_t dl = step_sign(rng.next());
            top = std::max(top + du - dm, 1);
            bottom = std::max(bottom + dm - dl, 1);
        }
        out[i] = TrialGaps{top, bottom};
    }
}

}  // namespace skoro::mc::detail
