#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace skoro {

struct RunConfig {
    enum class Command {
        reflect,
        simulate,
        verify_kernel,
        verify_lemma,
        verify_bessel,
        verify_reflected_bm,
        emit_dist,
    };

    Command command = Command::simulate;
    std::uint64_t seed = 0;
    std::int64_t steps = 10000;
    std::int64_t trials = 20000;
    std::int64_t n_max = 10;
    std::int64_t d_max = 50;
    double alpha = 0.01;
    std::string input;         // reflect: single CSV with columns t, x, b
    std::string path_file;     // reflect: separate path CSV (t, value)
    std::string barrier_file;  // reflect: separate barrier CSV (t, value)
    std::string output;        // output file; stdout when empty
    bool discrete = false;     // reflect: integer walk mode
    bool down = false;         // reflect: push downward
    std::string experiment = "bessel";  // emit-dist: bessel | xhat | yhat
};

// Dispatches one subcommand; returns 0 iff every requested check passed.
// Reports embed their configuration; identical configs produce identical
// bytes.
int run(const RunConfig& config);
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace skoro
