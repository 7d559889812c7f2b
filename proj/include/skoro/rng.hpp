#pragma once

#include <array>
#include <cstdint>

namespace skoro {

// 64-bit seed of a whole experiment. Per-trial substreams are derived from it
// by trial_stream below; identical seeds reproduce identical sample sets on
// every platform, independent of threading.
struct Seed {
    std::uint64_t value = 0;
};

// Finalizer of splitmix64 (Steele, Lea, Flood); bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// splitmix64: state += 0x9E3779B97F4A7C15, output = mix64(state).
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

    constexpr std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

private:
    std::uint64_t state_;
};

// xoshiro128++ 1.0 (Blackman, Vigna). Update equations:
//   out = rotl(s0 + s3, 7) + s0
//   t = s1 << 9; s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3; s2 ^= t;
//   s3 = rotl(s3, 11)
class Xoshiro128pp {
public:
    constexpr Xoshiro128pp(std::uint32_t s0, std::uint32_t s1, std::uint32_t s2,
                           std::uint32_t s3)
        : s_{s0, s1, s2, s3} {}

    constexpr std::uint32_t next() {
        const std::uint32_t out = rotl(s_[0] + s_[3], 7) + s_[0];
        const std::uint32_t t = s_[1] << 9;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 11);
        return out;
    }

    constexpr std::array<std::uint32_t, 4> state() const {
        return {s_[0], s_[1], s_[2], s_[3]};
    }

private:
    static constexpr std::uint32_t rotl(std::uint32_t x, int k) {
        return (x << k) | (x >> (32 - k));
    }

    std::uint32_t s_[4];
};

// Substream derivation, a pure function of (seed, trial):
//   base     = seed XOR mix64(0x9E3779B97F4A7C15 * (trial + 1))
//   z1, z2   = first two outputs of splitmix64 started at base
//   state    = (lo32(z1), hi32(z1), lo32(z2), hi32(z2)); s0 forced to 1 if
//              all four words are zero.
// A trajectory consumes exactly three draws per time step, in the order
// (middle, upper, lower).
Xoshiro128pp trial_stream(Seed seed, std::uint64_t trial);

// Step sign of one draw: -1 when bit 31 is set, +1 otherwise.
constexpr std::int32_t step_sign(std::uint32_t draw) {
    return (static_cast<std::int32_t>(draw) >> 31) | 1;
}

}  // namespace skoro
