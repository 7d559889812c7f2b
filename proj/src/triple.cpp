#include "skoro/triple.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace skoro {

TripleTrajectory simulate_triple(std::int64_t n_steps, Seed seed, std::uint64_t trial) {
    if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
    TripleTrajectory t;
    t.m.start = 0;
    t.u.start = 1;
    t.l.start = -1;
    t.m.steps.resize(static_cast<std::size_t>(n_steps));
    t.u.steps.resize(static_cast<std::size_t>(n_steps));
    t.l.steps.resize(static_cast<std::size_t>(n_steps));
    Xoshiro128pp rng = trial_stream(seed, trial);
    for (std::int64_t i = 0; i < n_steps; ++i) {
        t.m.steps[i] = static_cast<std::int8_t>(step_sign(rng.next()));
        t.u.steps[i] = static_cast<std::int8_t>(step_sign(rng.next()));
        t.l.steps[i] = static_cast<std::int8_t>(step_sign(rng.next()));
    }
    return t;
}

TripleTrajectory reflect_triple(const TripleTrajectory& t) {
    if (t.m.start != 0 || t.u.start != 1 || t.l.start != -1) {
        throw std::invalid_argument("triple must start at (0, 1, -1)");
    }
    TripleTrajectory r = t;
    r.u_reflected = discrete_push_up(t.u, t.m);
    r.l_reflected = discrete_push_down(t.l, t.m);
    return r;
}

std::vector<KDPState> extract_kdp(const TripleTrajectory& t) {
    if (!t.u_reflected || !t.l_reflected) {
        throw std::invalid_argument("reflected walks missing");
    }
    const auto mv = t.m.values();
    const auto uv = t.u_reflected->values();
    const auto lv = t.l_reflected->values();
    std::vector<KDPState> out(mv.size());
    std::int64_t prev_d = 1;
    for (std::size_t i = 0; i < mv.size(); ++i) {
        const std::int64_t gap = uv[i] - lv[i];
        const std::int64_t offset = mv[i] - lv[i] - 1;
        if (gap <= 0 || gap % 2 != 0 || offset < 0 || offset % 2 != 0) {
            throw std::logic_error("gap structure violated");
        }
        const KDPState s{lv[i], gap / 2, offset / 2};
        if (s.p > s.d - 1) throw std::logic_error("offset outside [0, d-1]");
        if (i == 0 && !(s == KDPState{-1, 1, 0})) {
            throw std::logic_error("initial state must be (-1, 1, 0)");
        }
        if (i > 0 && std::llabs(s.d - prev_d) > 1) {
            throw std::logic_error("gap increment outside {-1, 0, +1}");
        }
        prev_d = s.d;
        out[i] = s;
    }
    return out;
}

SampledPath scale_to_path(const LatticeWalk& w, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (static_cast<std::int64_t>(w.length()) < n) {
        throw std::invalid_argument("walk shorter than the scaling horizon");
    }
    const double root_n = std::sqrt(static_cast<double>(n));
    SampledPath p;
    p.t0 = 0.0;
    p.dt = 1.0 / static_cast<double>(n);
    const auto vals = w.values();
    p.values.resize(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        p.values[i] = static_cast<double>(vals[i]) / root_n;
    }
    return p;
}

}  // namespace skoro
