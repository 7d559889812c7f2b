#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skoro/lattice.hpp"
#include "skoro/path.hpp"
#include "skoro/rng.hpp"

namespace skoro {

// Middle walk m (even class, start 0) and upper/lower walks u, l (odd class,
// starts +1 and -1), all fair and independent; u_reflected/l_reflected hold
// the pushes of u and l off m once reflect_triple has run.
struct TripleTrajectory {
    LatticeWalk m, u, l;
    std::optional<LatticeWalk> u_reflected, l_reflected;

    std::int64_t n_steps() const { return static_cast<std::int64_t>(m.length()); }
};

// State of the reduced chain: k = lower reflected position, d = half the gap
// between the reflected walks (>= 1), p = half-offset of the middle walk
// above the lower reflected walk (0 <= p <= d - 1).
struct KDPState {
    std::int64_t k = 0;
    std::int64_t d = 1;
    std::int64_t p = 0;

    bool operator==(const KDPState&) const = default;
};

// Draws the three independent +-1 walks for n_steps >= 1 steps; deterministic
// in (seed, trial), consuming three draws per step in the order (m, u, l).
TripleTrajectory simulate_triple(std::int64_t n_steps, Seed seed, std::uint64_t trial = 0);

// Returns a copy with u_reflected = push_up(u, m) and l_reflected =
// push_down(l, m) filled in.
TripleTrajectory reflect_triple(const TripleTrajectory& t);

// (k, d, p) state at every time 0..n_steps; validates the structural
// invariants of the chain at each step.
std::vector<KDPState> extract_kdp(const TripleTrajectory& t);

// Diffusive embedding: dt = 1/n, values scaled by 1/sqrt(n). Requires the
// walk to have at least n steps so that t = 1 lies on the grid.
SampledPath scale_to_path(const LatticeWalk& w, std::int64_t n);

}  // namespace skoro
