// Kernel registry, dispatch, and the threaded driver. Trials own disjoint
// substreams, so splitting a range across kernels or threads cannot change
// any output byte.
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mc_kernel_impl.hpp"

namespace skoro::mc {

namespace {

bool avx2_cpu_supported() {
#if defined(SKORO_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

void check_steps(std::int64_t n_steps) {
    if (n_steps < 0 || n_steps > (std::int64_t{1} << 30)) {
        throw std::invalid_argument("n_steps out of range for the trial kernel");
    }
}

}  // namespace

bool kernel_available(Kernel k) {
    switch (k) {
        case Kernel::scalar:
            return true;
        case Kernel::avx2:
            return avx2_cpu_supported();
    }
    return false;
}

Kernel active_kernel() {
    return kernel_available(Kernel::avx2) ? Kernel::avx2 : Kernel::scalar;
}

const char* kernel_name(Kernel k) {
    switch (k) {
        case Kernel::scalar:
            return "scalar";
        case Kernel::avx2:
            return "avx2";
    }
    return "unknown";
}

void run_trials(Kernel k, std::int64_t n_steps, Seed seed, std::uint64_t first_trial,
                std::span<TrialGaps> out) {
    check_steps(n_steps);
    switch (k) {
        case Kernel::scalar:
            detail::run_trials_scalar(n_steps, seed, first_trial, out);
            return;
        case Kernel::avx2:
#if defined(SKORO_AVX2_KERNEL)
            if (avx2_cpu_supported()) {
                detail::run_trials_avx2(n_steps, seed, first_trial, out);
                return;
            }
#endif
            throw std::invalid_argument("avx2 kernel unavailable on this machine");
    }
}

void run_trials(std::int64_t n_steps, Seed seed, std::uint64_t first_trial,
                std::span<TrialGaps> out) {
    run_trials(active_kernel(), n_steps, seed, first_trial, out);
}

unsigned resolve_thread_count() {
    if (const char* env = std::getenv("SKORO_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v <= 4096) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void run_trials_parallel(std::int64_t n_steps, Seed seed, std::uint64_t first_trial,
                         std::span<TrialGaps> out, unsigned threads) {
    check_steps(n_steps);
    if (threads == 0) threads = resolve_thread_count();
    const Kernel k = active_kernel();
    if (threads <= 1 || out.size() < 64) {
        run_trials(k, n_steps, seed, first_trial, out);
        return;
    }
    const std::size_t total = out.size();
    const std::size_t chunk = (total + threads - 1) / threads;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = static_cast<std::size_t>(t) * chunk;
        if (lo >= total) break;
        const std::size_t len = std::min(chunk, total - lo);
        pool.emplace_back([=, part = out.subspan(lo, len)] {
            run_trials(k, n_steps, seed, first_trial + lo, part);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace skoro::mc
