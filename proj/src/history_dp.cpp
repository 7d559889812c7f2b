// Exact dynamic program over gap histories. Probabilities are carried as
// integer numerators over the implicit denominator 8^n; every numerator is
// bounded by 8^n, so with the horizon guard below all products in the checks
// stay inside uint64 and the arithmetic is exact. Public surfaces translate
// to Rat.
#include "skoro/history_dp.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "skoro/bessel_kernel.hpp"
#include "skoro/lattice.hpp"

namespace skoro {

namespace {

// uint64 stays exact through the cross-multiplied checks up to this horizon
constexpr std::int64_t kMaxExactHorizon = 17;

struct Node {
    std::int32_t d = 1;
    std::uint64_t code = 0;  // 2-bit packed gap increments since level 0
    std::uint64_t prob = 1;  // numerator over 8^level
    std::vector<std::uint64_t> pmass;  // offset masses, numerators over 8^level
};

struct Outcome {
    std::int32_t d2 = 1;
    std::int32_t p2 = 0;
};

std::array<Outcome, 8> outcomes_from(std::int64_t d, std::int64_t p) {
    const std::int64_t u = 2 * (d - p) - 1;
    const std::int64_t l = -(2 * p + 1);
    std::array<Outcome, 8> out;
    for (int signs = 0; signs < 8; ++signs) {
        const std::int64_t dm = (signs & 1) ? 1 : -1;
        const std::int64_t du = (signs & 2) ? 1 : -1;
        const std::int64_t dl = (signs & 4) ? 1 : -1;
        const std::int64_t m2 = dm;
        const std::int64_t u2 = online_push_up_step(u, du, m2);
        const std::int64_t l2 = online_push_down_step(l, dl, m2);
        out[signs] = Outcome{static_cast<std::int32_t>((u2 - l2) / 2),
                             static_cast<std::int32_t>((m2 - l2 - 1) / 2)};
    }
    return out;
}

std::vector<std::int64_t> decode_history(std::uint64_t code, std::int64_t n) {
    std::vector<std::int64_t> h(static_cast<std::size_t>(n) + 1);
    h[0] = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        h[i + 1] = h[i] + static_cast<std::int64_t>((code >> (2 * i)) & 3u) - 1;
    }
    return h;
}

struct Failure {
    std::uint64_t code = 0;
    std::int64_t level = 0;
    std::string detail;
};

struct LevelResult {
    std::vector<Node> next;
    bool kernel_match = true;
    bool offset_uniform = true;
    std::optional<Failure> failure;
};

// Extends one level; when check is set, verifies the one-step gap law of
// every parent against the kernel row and the offset uniformity of every
// child, recording the first failure.
LevelResult extend_level(const std::vector<Node>& level, std::int64_t n,
                         std::uint64_t cap, bool check) {
    LevelResult result;
    for (const Node& parent : level) {
        const std::int64_t d = parent.d;
        std::array<std::vector<std::uint64_t>, 3> child_mass;  // d-1, d, d+1
        for (int j = 0; j < 3; ++j) {
            const std::int64_t d2 = d - 1 + j;
            if (d2 >= 1) child_mass[j].assign(static_cast<std::size_t>(d2), 0);
        }
        std::array<std::uint64_t, 3> branch{0, 0, 0};
        for (std::int64_t p = 0; p <= d - 1; ++p) {
            const std::uint64_t mass = parent.pmass[static_cast<std::size_t>(p)];
            if (mass == 0) continue;
            for (const Outcome& o : outcomes_from(d, p)) {
                const int j = o.d2 - d + 1;
                branch[static_cast<std::size_t>(j)] += mass;
                child_mass[static_cast<std::size_t>(j)][static_cast<std::size_t>(o.p2)] +=
                    mass;
            }
        }
        if (check && result.kernel_match) {
            // conditional one-step gap law == kernel row, cross-multiplied:
            // (branch / 8^{n+1}) / (prob / 8^n) == num/den
            for (int j = 0; j < 3; ++j) {
                const std::int64_t y = d - 1 + j;
                const Rat expected = y >= 0 ? bessel_kernel(d, y) : Rat{};
                const std::uint64_t num =
                    static_cast<std::uint64_t>(expected.num().to_int64());
                const std::uint64_t den =
                    static_cast<std::uint64_t>(expected.den().to_int64());
                if (branch[static_cast<std::size_t>(j)] * den != 8 * parent.prob * num) {
                    result.kernel_match = false;
                    result.failure = Failure{
                        parent.code, n,
                        "one-step gap law to d'=" + std::to_string(y) +
                            " deviates from the kernel row"};
                    break;
                }
            }
        }
        for (int j = 0; j < 3; ++j) {
            const std::int64_t d2 = d - 1 + j;
            if (d2 < 1) continue;
            std::uint64_t prob = 0;
            for (const std::uint64_t m : child_mass[static_cast<std::size_t>(j)]) {
                prob += m;
            }
            if (prob == 0) continue;
            Node child;
            child.d = static_cast<std::int32_t>(d2);
            child.code = parent.code | (static_cast<std::uint64_t>(j) << (2 * n));
            child.prob = prob;
            child.pmass = std::move(child_mass[static_cast<std::size_t>(j)]);
            if (check && result.offset_uniform) {
                for (const std::uint64_t m : child.pmass) {
                    if (m * static_cast<std::uint64_t>(d2) != prob) {
                        result.offset_uniform = false;
                        if (!result.failure) {
                            result.failure = Failure{
                                child.code, n + 1,
                                "conditional offset law is not uniform on {0.." +
                                    std::to_string(d2 - 1) + "}"};
                        }
                        break;
                    }
                }
            }
            result.next.push_back(std::move(child));
            if (result.next.size() > cap) {
                throw std::runtime_error("history cap exceeded (" +
                                         std::to_string(result.next.size()) + " > " +
                                         std::to_string(cap) + ")");
            }
        }
    }
    return result;
}

void check_horizon(std::int64_t n) {
    if (n > kMaxExactHorizon) {
        throw std::invalid_argument("horizon above the exact-arithmetic guard (" +
                                    std::to_string(kMaxExactHorizon) + ")");
    }
}

bool marginal_matches(const std::vector<Node>& level, std::int64_t n) {
    std::map<std::int64_t, std::uint64_t> sums;
    for (const Node& node : level) sums[node.d] += node.prob;
    const BigInt denom = pow(BigInt{8}, static_cast<std::uint64_t>(n));
    std::map<std::int64_t, Rat> got;
    for (const auto& [d, num] : sums) {
        got.emplace(d, Rat{BigInt{static_cast<std::int64_t>(num)}, denom});
    }
    return got == chain_marginal(n);
}

}  // namespace

LemmaReport verify_lemma_identities(std::int64_t n_max, std::uint64_t cap) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    check_horizon(n_max);
    LemmaReport report;
    report.n_max = n_max;
    report.pass = true;
    std::vector<Node> level{Node{1, 0, 1, {1}}};
    report.levels.push_back(LemmaLevel{0, 1, true, true, marginal_matches(level, 0)});
    for (std::int64_t n = 0; n < n_max; ++n) {
        LevelResult step = extend_level(level, n, cap, true);
        level = std::move(step.next);
        LemmaLevel row{n + 1, level.size(), step.offset_uniform, step.kernel_match,
                       marginal_matches(level, n + 1)};
        report.levels.push_back(row);
        if (!row.offset_uniform || !row.kernel_match || !row.marginal_match) {
            report.pass = false;
            if (step.failure) {
                report.counterexample = LemmaCounterexample{
                    decode_history(step.failure->code, step.failure->level),
                    step.failure->detail};
            } else {
                report.counterexample = LemmaCounterexample{
                    {}, "level marginal deviates from the chain marginal"};
            }
            break;
        }
    }
    return report;
}

std::vector<HistoryRecord> enumerate_histories(std::int64_t n, std::uint64_t cap) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    check_horizon(n);
    std::vector<Node> level{Node{1, 0, 1, {1}}};
    for (std::int64_t k = 0; k < n; ++k) {
        level = extend_level(level, k, cap, false).next;
    }
    const BigInt denom = pow(BigInt{8}, static_cast<std::uint64_t>(n));
    std::vector<HistoryRecord> out;
    out.reserve(level.size());
    for (const Node& node : level) {
        HistoryRecord rec;
        rec.d_history = decode_history(node.code, n);
        rec.prob = Rat{BigInt{static_cast<std::int64_t>(node.prob)}, denom};
        for (std::int64_t p = 0; p < node.d; ++p) {
            const std::uint64_t m = node.pmass[static_cast<std::size_t>(p)];
            if (m == 0) continue;
            rec.p_dist.emplace(p, Rat{BigInt{static_cast<std::int64_t>(m)}, denom});
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::map<std::int64_t, Rat> history_d_marginal(std::int64_t n, std::uint64_t cap) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    check_horizon(n);
    std::vector<Node> level{Node{1, 0, 1, {1}}};
    for (std::int64_t k = 0; k < n; ++k) {
        level = extend_level(level, k, cap, false).next;
    }
    std::map<std::int64_t, std::uint64_t> sums;
    for (const Node& node : level) sums[node.d] += node.prob;
    const BigInt denom = pow(BigInt{8}, static_cast<std::uint64_t>(n));
    std::map<std::int64_t, Rat> out;
    for (const auto& [d, num] : sums) {
        out.emplace(d, Rat{BigInt{static_cast<std::int64_t>(num)}, denom});
    }
    return out;
}

}  // namespace skoro
