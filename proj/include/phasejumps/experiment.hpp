// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "phasejumps/stats.hpp"
#include "phasejumps/window.hpp"

namespace pj {

enum class ExperimentKind { exp1, exp2, exp3, custom };

ExperimentKind experiment_kind_from_name(const std::string& name);
std::string experiment_name(ExperimentKind kind);

/// Parameters of one experiment run. experiment_defaults() fills the
/// desk-scale settings for exp1/exp2/exp3; every field can be overridden
/// before run_experiment.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::custom;
    int realizations = 4;
    WindowSpec window = WindowSpec::hermite1();
    double delta = 1.0 / 32.0;
    double sigma = 1.0;
    double signal_amp = 0.0;  // amplitude of the Gaussian signal e^{-t^2/2}; 0 = no signal
    std::uint64_t seed = 1;
    PhaseFactor factor = PhaseFactor::twisted;
    bool use_pj = true;
    bool use_pjc = false;
    bool use_mgn = false;
    double sim_half_width = 2.0;    // simulated domain half-width (before padding)
    double count_half_width = 1.0;  // zeros outside this square are ignored
    double spiral_step = 0.5;
    int spiral_count = 5;
    std::string out_dir;
    bool assert_thresholds = false;
};

ExperimentConfig experiment_defaults(ExperimentKind kind);

struct ExperimentOutcome {
    bool passed = true;                 // assertion verdict (true when none apply)
    std::vector<std::string> failures;  // human-readable threshold violations
    std::map<std::string, double> metrics;
};

/// Runs the experiment, writes report_*.csv / report_*.json, summary.json and
/// plot_report.py into out_dir (when set), and evaluates the experiment's
/// thresholds when cfg.assert_thresholds is on.
ExperimentOutcome run_experiment(const ExperimentConfig& cfg);

/// ChargeReport serialization shared by experiments and the CLI.
void write_report_csv(const ChargeReport& rep, const std::string& path);
void write_report_json(const ChargeReport& rep, const std::string& label,
                       const std::string& path);

/// Closed form of exp2's deterministic component: for the signal
/// amp*e^{-t^2/2} analyzed with the L^2-normalized Hermite-1 window,
///   F1(x+iy) = -amp (x - 2 pi i y)/(sqrt(2) pi^{1/4}) e^{-x^2/(4 pi) - pi y^2}.
Complex gaussian_signal_hermite1_transform(Complex z, double amp);

}  // namespace pj
