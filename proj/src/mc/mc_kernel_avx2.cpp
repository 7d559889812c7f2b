// AVX2 variant of the trial kernel: eight trials per vector, one 32-bit lane
// each. The per-lane algorithm and draw order are identical to the scalar
// kernel, so both produce the same bytes for the same (seed, trial) range.
#include "mc_kernel_impl.hpp"

#if defined(SKORO_AVX2_KERNEL)

#include <immintrin.h>

#include <cstdint>

namespace skoro::mc::detail {

namespace {

struct LaneState {
    __m256i s0, s1, s2, s3;  // xoshiro128++ state, one lane per trial
};

inline __m256i rotl32(__m256i x, int k) {
    return _mm256_or_si256(_mm256_slli_epi32(x, k), _mm256_srli_epi32(x, 32 - k));
}

inline __m256i next_draw(LaneState& g) {
    const __m256i out = _mm256_add_epi32(rotl32(_mm256_add_epi32(g.s0, g.s3), 7), g.s0);
    const __m256i t = _mm256_slli_epi32(g.s1, 9);
    g.s2 = _mm256_xor_si256(g.s2, g.s0);
    g.s3 = _mm256_xor_si256(g.s3, g.s1);
    g.s1 = _mm256_xor_si256(g.s1, g.s2);
    g.s0 = _mm256_xor_si256(g.s0, g.s3);
    g.s2 = _mm256_xor_si256(g.s2, t);
    g.s3 = rotl32(g.s3, 11);
    return out;
}

// -1 when bit 31 of the draw is set, +1 otherwise (matches step_sign).
inline __m256i sign_of(__m256i draw, __m256i one) {
    return _mm256_or_si256(_mm256_srai_epi32(draw, 31), one);
}

}  // namespace

void run_trials_avx2(std::int64_t n_steps, Seed seed, std::uint64_t first_trial,
                     std::span<TrialGaps> out) {
    const __m256i one = _mm256_set1_epi32(1);
    std::size_t i = 0;
    for (; i + 8 <= out.size(); i += 8) {
        alignas(32) std::uint32_t w[4][8];
        for (int lane = 0; lane < 8; ++lane) {
            const auto st = trial_stream(seed, first_trial + i + lane).state();
            w[0][lane] = st[0];
            w[1][lane] = st[1];
            w[2][lane] = st[2];
            w[3][lane] = st[3];
        }
        LaneState g{
            _mm256_load_si256(reinterpret_cast<const __m256i*>(w[0])),
            _mm256_load_si256(reinterpret_cast<const __m256i*>(w[1])),
            _mm256_load_si256(reinterpret_cast<const __m256i*>(w[2])),
            _mm256_load_si256(reinterpret_cast<const __m256i*>(w[3])),
        };
        __m256i top = one;
        __m256i bottom = one;
        for (std::int64_t s = 0; s < n_steps; ++s) {
            const __m256i dm = sign_of(next_draw(g), one);
            const __m256i du = sign_of(next_draw(g), one);
            const __m256i dl = sign_of(next_draw(g), one);
            top = _mm256_max_epi32(
                _mm256_sub_epi32(_mm256_add_epi32(top, du), dm), one);
            bottom = _mm256_max_epi32(
                _mm256_sub_epi32(_mm256_add_epi32(bottom, dm), dl), one);
        }
        alignas(32) std::int32_t t_out[8];
        alignas(32) std::int32_t b_out[8];
        _mm256_store_si256(reinterpret_cast<__m256i*>(t_out), top);
        _mm256_store_si256(reinterpret_cast<__m256i*>(b_out), bottom);
        for (int lane = 0; lane < 8; ++lane) {
            out[i + lane] = TrialGaps{t_out[lane], b_out[lane]};
        }
    }
    if (i < out.size()) {
        run_trials_scalar(n_steps, seed, first_trial + i, out.subspan(i));
    }
}

}  // namespace skoro::mc::detail

#endif  // SKORO_AVX2_KERNEL
