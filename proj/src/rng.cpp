#include "skoro/rng.hpp"

namespace skoro {

Xoshiro128pp trial_stream(Seed seed, std::uint64_t trial) {
    const std::uint64_t base = seed.value ^ mix64(0x9E3779B97F4A7C15ULL * (trial + 1));
    SplitMix64 sm(base);
    const std::uint64_t z1 = sm.next();
    const std::uint64_t z2 = sm.next();
    std::uint32_t s0 = static_cast<std::uint32_t>(z1);
    const std::uint32_t s1 = static_cast<std::uint32_t>(z1 >> 32);
    const std::uint32_t s2 = static_cast<std::uint32_t>(z2);
    const std::uint32_t s3 = static_cast<std::uint32_t>(z2 >> 32);
    if ((s0 | s1 | s2 | s3) == 0) s0 = 1;
    return Xoshiro128pp(s0, s1, s2, s3);
}

}  // namespace skoro
