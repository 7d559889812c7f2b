#include "skoro/experiments.hpp"

#include <cmath>
#include <stdexcept>

#include "skoro/mc_kernel.hpp"

namespace skoro {

namespace {

void validate_params(const ExperimentParams& params) {
    if (params.n_steps < 1000) throw std::invalid_argument("n_steps must be >= 1000");
    if (params.trials < 1000) throw std::invalid_argument("trials must be >= 1000");
    if (!(params.alpha > 0.0 && params.alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1)");
    }
}

void validate_oracles() {
    validate_oracle(bes3_unit_oracle(), 1000, 8.0, 1e-8);
    validate_oracle(half_normal_unit_oracle(), 1000, 8.0, 1e-8);
}

std::map<std::string, std::string> experiment_metadata(const ExperimentParams& params,
                                                       GapStat stat) {
    return {
        {"n_steps", std::to_string(params.n_steps)},
        {"trials", std::to_string(params.trials)},
        {"seed", std::to_string(params.seed.value)},
        {"statistic", gap_stat_name(stat)},
        {"t", "1"},
    };
}

KSReport run_ks(const ExperimentParams& params, GapStat stat,
                const MarginalOracle& oracle) {
    validate_oracles();
    const auto samples = mc_gap_samples(params, stat);
    KSReport report = ks_test(samples, oracle, params.alpha);
    report.metadata = experiment_metadata(params, stat);
    return report;
}

}  // namespace

const char* gap_stat_name(GapStat stat) {
    switch (stat) {
        case GapStat::bessel:
            return "bessel";
        case GapStat::xhat:
            return "xhat";
        case GapStat::yhat:
            return "yhat";
    }
    return "unknown";
}

std::vector<double> mc_gap_samples(const ExperimentParams& params, GapStat stat) {
    validate_params(params);
    std::vector<mc::TrialGaps> gaps(static_cast<std::size_t>(params.trials));
    mc::run_trials_parallel(params.n_steps, params.seed, 0, gaps);
    const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(params.n_steps));
    std::vector<double> samples(gaps.size());
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        std::int64_t v = 0;
        switch (stat) {
            case GapStat::bessel:
                v = static_cast<std::int64_t>(gaps[i].top) + gaps[i].bottom;
                break;
            case GapStat::xhat:
                v = gaps[i].top;
                break;
            case GapStat::yhat:
                v = gaps[i].bottom;
                break;
        }
        if (v < 1) throw std::logic_error("reflection ordering violated");
        samples[i] = static_cast<double>(v) * scale;
    }
    return samples;
}

KSReport mc_bessel_experiment(const ExperimentParams& params) {
    return run_ks(params, GapStat::bessel, bes3_unit_oracle());
}

KSReport mc_bessel_negative_control(const ExperimentParams& params) {
    return run_ks(params, GapStat::bessel, half_normal_unit_oracle());
}

ReflectedBmReports mc_reflected_bm_experiment(const ExperimentParams& params) {
    return ReflectedBmReports{
        run_ks(params, GapStat::xhat, half_normal_unit_oracle()),
        run_ks(params, GapStat::yhat, half_normal_unit_oracle()),
    };
}

ReflectedBmReports mc_reflected_bm_negative_control(const ExperimentParams& params) {
    return ReflectedBmReports{
        run_ks(params, GapStat::xhat, bes3_unit_oracle()),
        run_ks(params, GapStat::yhat, bes3_unit_oracle()),
    };
}

}  // namespace skoro
