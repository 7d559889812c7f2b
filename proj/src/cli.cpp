#include "skoro/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "skoro/bessel_kernel.hpp"
#include "skoro/csv.hpp"
#include "skoro/experiments.hpp"
#include "skoro/history_dp.hpp"
#include "skoro/kdp_law.hpp"
#include "skoro/lattice.hpp"
#include "skoro/path.hpp"
#include "skoro/triple.hpp"

namespace skoro {

namespace {

using ordered_json = nlohmann::ordered_json;

void emit_text(const std::string& output, std::ostream& fallback, const std::string& text) {
    if (output.empty()) {
        fallback << text;
        return;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file) throw std::runtime_error(output + ": cannot open for writing");
    file << text;
    if (!file) throw std::runtime_error(output + ": write failed");
}

// ------------------------------- reflect ----------------------------------

struct NamedColumn {
    std::string file;
    std::vector<double> t;
    std::vector<double> values;
};

NamedColumn load_column(const std::string& file, const csv::Table& table,
                        const std::string& value_column) {
    NamedColumn col;
    col.file = file;
    const std::size_t ti = table.column_index("t");
    const std::size_t vi = table.column_index(value_column);
    col.t.reserve(table.rows.size());
    col.values.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        col.t.push_back(row[ti]);
        col.values.push_back(row[vi]);
    }
    if (col.values.empty()) throw std::runtime_error(file + ": no data rows");
    return col;
}

SampledPath path_from_column(const NamedColumn& col) {
    SampledPath p;
    p.t0 = col.t.front();
    p.dt = col.t.size() > 1 ? col.t[1] - col.t[0] : 1.0;
    if (!(p.dt > 0.0)) throw std::runtime_error(col.file + ": time column must increase");
    for (std::size_t i = 0; i < col.t.size(); ++i) {
        const double expected = p.t0 + p.dt * static_cast<double>(i);
        if (std::fabs(col.t[i] - expected) >
            1e-9 * std::max(1.0, std::fabs(expected))) {
            throw std::runtime_error(col.file + ":" + std::to_string(i + 2) +
                                     ": non-uniform time grid");
        }
    }
    p.values = col.values;
    return p;
}

LatticeWalk walk_from_column(const NamedColumn& col) {
    std::vector<std::int64_t> values(col.values.size());
    for (std::size_t i = 0; i < col.values.size(); ++i) {
        const double v = col.values[i];
        if (v != std::floor(v) || std::fabs(v) > 9.007199254740992e15) {
            throw std::runtime_error(col.file + ":" + std::to_string(i + 2) +
                                     ": discrete mode requires integer values");
        }
        values[i] = static_cast<std::int64_t>(v);
    }
    return walk_from_values(values);
}

int run_reflect(const RunConfig& cfg, std::ostream& out) {
    NamedColumn path_col, barrier_col;
    if (!cfg.input.empty()) {
        const csv::Table table = csv::read_table(cfg.input);
        path_col = load_column(cfg.input, table, "x");
        barrier_col = load_column(cfg.input, table, "b");
    } else if (!cfg.path_file.empty() && !cfg.barrier_file.empty()) {
        path_col = load_column(cfg.path_file, csv::read_table(cfg.path_file), "value");
        barrier_col =
            load_column(cfg.barrier_file, csv::read_table(cfg.barrier_file), "value");
    } else {
        throw std::invalid_argument(
            "reflect needs --input, or both --path and --barrier");
    }

    std::vector<double> reflected;
    if (cfg.discrete) {
        if (path_col.t != barrier_col.t) throw std::invalid_argument("incompatible grids");
        const LatticeWalk x = walk_from_column(path_col);
        const LatticeWalk b = walk_from_column(barrier_col);
        const LatticeWalk r = cfg.down ? discrete_push_down(x, b) : discrete_push_up(x, b);
        for (const std::int64_t v : r.values()) {
            reflected.push_back(static_cast<double>(v));
        }
    } else {
        const SampledPath x = path_from_column(path_col);
        const SampledPath b = path_from_column(barrier_col);
        const SampledPath r = cfg.down ? push_down(x, b) : push_up(x, b);
        reflected = r.values;
    }

    csv::Table result;
    result.columns = {"t", "x", "b", "reflected"};
    for (std::size_t i = 0; i < path_col.t.size(); ++i) {
        result.rows.push_back(
            {path_col.t[i], path_col.values[i], barrier_col.values[i], reflected[i]});
    }
    emit_text(cfg.output, out, csv::table_to_string(result));
    return 0;
}

// ------------------------------- simulate ---------------------------------

int run_simulate(const RunConfig& cfg, std::ostream& out) {
    const TripleTrajectory trajectory =
        reflect_triple(simulate_triple(cfg.steps, Seed{cfg.seed}));
    const auto states = extract_kdp(trajectory);
    const auto mv = trajectory.m.values();
    const auto uv = trajectory.u.values();
    const auto lv = trajectory.l.values();
    const auto urv = trajectory.u_reflected->values();
    const auto lrv = trajectory.l_reflected->values();

    csv::Table table;
    table.columns = {"t", "m", "u", "l", "u_ref", "l_ref", "k", "d", "p"};
    for (std::size_t i = 0; i < mv.size(); ++i) {
        table.rows.push_back({static_cast<double>(i), static_cast<double>(mv[i]),
                              static_cast<double>(uv[i]), static_cast<double>(lv[i]),
                              static_cast<double>(urv[i]), static_cast<double>(lrv[i]),
                              static_cast<double>(states[i].k),
                              static_cast<double>(states[i].d),
                              static_cast<double>(states[i].p)});
    }
    emit_text(cfg.output, out, csv::table_to_string(table));
    return 0;
}

// ----------------------------- verification -------------------------------

ordered_json ks_to_json(const KSReport& report) {
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : report.metadata) params[key] = value;
    ordered_json j = ordered_json::object();
    j["experiment"] = report.metadata.contains("statistic")
                          ? report.metadata.at("statistic")
                          : std::string{};
    j["params"] = params;
    j["oracle"] = report.oracle;
    j["sample_count"] = report.sample_count;
    j["statistic"] = report.statistic;
    j["critical_value"] = report.critical_value;
    j["alpha"] = report.alpha;
    j["pass"] = report.pass;
    return j;
}

int run_verify_kernel(const RunConfig& cfg, std::ostream& out) {
    const KernelEquivalenceReport report = verify_kernel_equivalence(cfg.d_max);
    ordered_json j;
    j["command"] = "verify-kernel";
    j["config"] = {{"d_max", cfg.d_max}};
    j["pairs_checked"] = report.pairs_checked;
    j["pass"] = report.pass;
    if (!report.pass) j["first_failure"] = report.first_failure;
    emit_text(cfg.output, out, j.dump(2) + "\n");
    return report.pass ? 0 : 1;
}

int run_verify_lemma(const RunConfig& cfg, std::ostream& out) {
    const LemmaReport report = verify_lemma_identities(cfg.n_max);
    ordered_json levels = ordered_json::array();
    for (const auto& level : report.levels) {
        levels.push_back({{"n", level.n},
                          {"histories", level.histories},
                          {"offset_uniform", level.offset_uniform},
                          {"kernel_match", level.kernel_match},
                          {"marginal_match", level.marginal_match}});
    }
    ordered_json j;
    j["command"] = "verify-lemma";
    j["config"] = {{"n_max", cfg.n_max}};
    j["levels"] = levels;
    j["pass"] = report.pass;
    if (report.counterexample) {
        j["counterexample"] = {{"d_history", report.counterexample->d_history},
                               {"detail", report.counterexample->detail}};
    }
    emit_text(cfg.output, out, j.dump(2) + "\n");
    return report.pass ? 0 : 1;
}

ordered_json experiment_config(const RunConfig& cfg) {
    return {{"steps", cfg.steps},
            {"trials", cfg.trials},
            {"alpha", cfg.alpha},
            {"seed", cfg.seed}};
}

ExperimentParams experiment_params(const RunConfig& cfg) {
    return ExperimentParams{cfg.steps, cfg.trials, cfg.alpha, Seed{cfg.seed}};
}

int run_verify_bessel(const RunConfig& cfg, std::ostream& out) {
    const ExperimentParams params = experiment_params(cfg);
    const KSReport main_report = mc_bessel_experiment(params);
    const KSReport control = mc_bessel_negative_control(params);
    const bool pass = main_report.pass && !control.pass;
    ordered_json j;
    j["command"] = "verify-bessel";
    j["config"] = experiment_config(cfg);
    j["ks"] = ks_to_json(main_report);
    j["negative_control"] = ks_to_json(control);
    j["negative_control_failed"] = !control.pass;
    j["pass"] = pass;
    emit_text(cfg.output, out, j.dump(2) + "\n");
    return pass ? 0 : 1;
}

int run_verify_reflected_bm(const RunConfig& cfg, std::ostream& out) {
    const ExperimentParams params = experiment_params(cfg);
    const ReflectedBmReports reports = mc_reflected_bm_experiment(params);
    const ReflectedBmReports controls = mc_reflected_bm_negative_control(params);
    const bool pass = reports.xhat.pass && reports.yhat.pass && !controls.xhat.pass &&
                      !controls.yhat.pass;
    ordered_json j;
    j["command"] = "verify-reflected-bm";
    j["config"] = experiment_config(cfg);
    j["xhat"] = ks_to_json(reports.xhat);
    j["yhat"] = ks_to_json(reports.yhat);
    j["negative_controls"] = {{"xhat", ks_to_json(controls.xhat)},
                              {"yhat", ks_to_json(controls.yhat)}};
    j["pass"] = pass;
    emit_text(cfg.output, out, j.dump(2) + "\n");
    return pass ? 0 : 1;
}

int run_emit_dist(const RunConfig& cfg, std::ostream& out) {
    GapStat stat;
    MarginalOracle oracle;
    if (cfg.experiment == "bessel") {
        stat = GapStat::bessel;
        oracle = bes3_unit_oracle();
    } else if (cfg.experiment == "xhat") {
        stat = GapStat::xhat;
        oracle = half_normal_unit_oracle();
    } else if (cfg.experiment == "yhat") {
        stat = GapStat::yhat;
        oracle = half_normal_unit_oracle();
    } else {
        throw std::invalid_argument("unknown experiment '" + cfg.experiment + "'");
    }
    auto samples = mc_gap_samples(experiment_params(cfg), stat);
    std::sort(samples.begin(), samples.end());
    csv::Table table;
    table.columns = {"value", "empirical_cdf", "oracle_cdf"};
    const double n = static_cast<double>(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        table.rows.push_back({samples[i], static_cast<double>(i + 1) / n,
                              oracle.cdf(samples[i])});
    }
    emit_text(cfg.output, out, csv::table_to_string(table));
    return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case RunConfig::Command::reflect:
                return run_reflect(config, out);
            case RunConfig::Command::simulate:
                return run_simulate(config, out);
            case RunConfig::Command::verify_kernel:
                return run_verify_kernel(config, out);
            case RunConfig::Command::verify_lemma:
                return run_verify_lemma(config, out);
            case RunConfig::Command::verify_bessel:
                return run_verify_bessel(config, out);
            case RunConfig::Command::verify_reflected_bm:
                return run_verify_reflected_bm(config, out);
            case RunConfig::Command::emit_dist:
                return run_emit_dist(config, out);
        }
        err << "error: unknown command\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(const RunConfig& config) {
    return run(config, std::cout, std::cerr);
}

}  // namespace skoro
