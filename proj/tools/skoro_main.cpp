#include <CLI11.hpp>

#include "skoro/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Skorohod reflection of walks and paths: simulation, exact "
                 "verification, and Monte Carlo distribution tests"};
    app.require_subcommand(1);

    skoro::RunConfig cfg;

    auto* reflect = app.add_subcommand("reflect", "Apply the push map to CSV paths");
    reflect->add_option("--input", cfg.input, "CSV with columns t,x,b");
    reflect->add_option("--path", cfg.path_file, "CSV with columns t,value (the path)");
    reflect->add_option("--barrier", cfg.barrier_file,
                        "CSV with columns t,value (the barrier)");
    reflect->add_flag("--discrete", cfg.discrete, "integer walk mode");
    reflect->add_flag("--down", cfg.down, "push downward instead of upward");
    reflect->add_option("--output", cfg.output, "output CSV (stdout if omitted)");

    auto* simulate =
        app.add_subcommand("simulate", "Simulate one reflected walk triple as CSV");
    simulate->add_option("--steps", cfg.steps, "number of steps")->required();
    simulate->add_option("--seed", cfg.seed, "64-bit seed (default 0)");
    simulate->add_option("--output", cfg.output, "output CSV (stdout if omitted)");

    auto* verify_kernel = app.add_subcommand(
        "verify-kernel", "Exact one-step law vs transition kernel equivalence");
    verify_kernel->add_option("--d-max", cfg.d_max, "largest half-gap to check");
    verify_kernel->add_option("--output", cfg.output, "output JSON (stdout if omitted)");

    auto* verify_lemma = app.add_subcommand(
        "verify-lemma", "Exact offset-uniformity and kernel identities over histories");
    verify_lemma->add_option("--n-max", cfg.n_max, "horizon of the history enumeration");
    verify_lemma->add_option("--output", cfg.output, "output JSON (stdout if omitted)");

    const auto add_experiment_options = [&cfg](CLI::App* cmd) {
        cmd->add_option("--steps", cfg.steps, "steps per trial");
        cmd->add_option("--trials", cfg.trials, "number of trials");
        cmd->add_option("--alpha", cfg.alpha, "test level");
        cmd->add_option("--seed", cfg.seed, "64-bit seed (default 0)");
        cmd->add_option("--output", cfg.output, "output file (stdout if omitted)");
    };

    auto* verify_bessel = app.add_subcommand(
        "verify-bessel", "KS test of the scaled gap against the Bessel marginal");
    add_experiment_options(verify_bessel);

    auto* verify_rbm = app.add_subcommand(
        "verify-reflected-bm",
        "KS tests of the one-sided gaps against the half-normal marginal");
    add_experiment_options(verify_rbm);

    auto* emit_dist = app.add_subcommand(
        "emit-dist", "Empirical vs oracle CDF of one scaled statistic as CSV");
    emit_dist
        ->add_option("--experiment", cfg.experiment, "bessel | xhat | yhat")
        ->check(CLI::IsMember({"bessel", "xhat", "yhat"}));
    add_experiment_options(emit_dist);

    CLI11_PARSE(app, argc, argv);

    if (reflect->parsed()) cfg.command = skoro::RunConfig::Command::reflect;
    if (simulate->parsed()) cfg.command = skoro::RunConfig::Command::simulate;
    if (verify_kernel->parsed()) cfg.command = skoro::RunConfig::Command::verify_kernel;
    if (verify_lemma->parsed()) cfg.command = skoro::RunConfig::Command::verify_lemma;
    if (verify_bessel->parsed()) cfg.command = skoro::RunConfig::Command::verify_bessel;
    if (verify_rbm->parsed()) cfg.command = skoro::RunConfig::Command::verify_reflected_bm;
    if (emit_dist->parsed()) cfg.command = skoro::RunConfig::Command::emit_dist;

    return skoro::run(cfg);
}
