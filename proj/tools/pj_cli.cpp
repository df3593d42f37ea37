// SPDX-License-Identifier: Apache-2.0
//
// pj: command-line front end for the phasejumps shared library.
// Subcommands: simulate, detect, evaluate, experiment, kernel-check.
// Exit codes: 0 success, 1 invalid arguments or malformed files,
// 2 threshold violation under `experiment --assert`.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "phasejumps.h"

namespace {

int report_error(pj_status st) {
    std::fprintf(stderr, "pj: %s\n", pj_last_error());
    return st == PJ_ERR_ASSERTION ? 2 : 1;
}

pj_factor factor_from(const std::string& s) {
    return s == "identity" ? PJ_FACTOR_IDENTITY : PJ_FACTOR_TWISTED;
}

// Simulation settings may also come from a JSON config file; flags given on
// the command line win over file values.
void apply_config_file(const CLI::App& cmd, const std::string& path, pj_sim_params& sim,
                       std::string& window, std::string& signal) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    nlohmann::json j;
    in >> j;
    auto flag_absent = [&](const char* name) { return cmd.count(name) == 0; };
    if (j.contains("domain_half_width") && flag_absent("--domain-half-width")) {
        sim.domain_half_width = j["domain_half_width"];
    }
    if (j.contains("delta") && flag_absent("--delta")) sim.delta = j["delta"];
    if (j.contains("sigma") && flag_absent("--sigma")) sim.sigma = j["sigma"];
    if (j.contains("pad_steps") && flag_absent("--pad-steps")) sim.pad_steps = j["pad_steps"];
    if (j.contains("seed") && flag_absent("--seed")) sim.seed = j["seed"].get<uint64_t>();
    if (j.contains("window") && flag_absent("--window")) window = j["window"].get<std::string>();
    if (j.contains("signal") && flag_absent("--signal")) signal = j["signal"].get<std::string>();
    if (j.contains("signal_amp") && flag_absent("--signal-amp")) sim.signal_amp = j["signal_amp"];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PhaseJumps: zeros and charges of complex functions from grid samples"};
    app.require_subcommand(1);

    // ------------------------------------------------------------ simulate
    auto* sim_cmd = app.add_subcommand("simulate", "simulate an input-model field (PJF1)");
    pj_sim_params sim{4.0, 1.0 / 32.0, 1.0, 2, 1, nullptr, nullptr, 0.0};
    std::string sim_window = "hermite1", sim_signal = "zero", sim_out = "field.pjf";
    std::string sim_config_path;
    sim_cmd->add_option("--domain-half-width", sim.domain_half_width, "domain half-width L");
    sim_cmd->add_option("--delta", sim.delta, "grid spacing");
    sim_cmd->add_option("--sigma", sim.sigma, "noise level");
    sim_cmd->add_option("--pad-steps", sim.pad_steps, "extra sample rings beyond the domain");
    sim_cmd->add_option("--seed", sim.seed, "RNG seed");
    sim_cmd->add_option("--window", sim_window, "hermite0|hermite1|gauss|file:<path>");
    sim_cmd->add_option("--signal", sim_signal, "zero|gauss");
    sim_cmd->add_option("--signal-amp", sim.signal_amp, "signal amplitude");
    sim_cmd->add_option("--config", sim_config_path, "JSON config file (flags override)");
    sim_cmd->add_option("--out", sim_out, "output PJF1 path");

    // -------------------------------------------------------------- detect
    auto* det_cmd = app.add_subcommand("detect", "detect zeros in a PJF1 field (PJZ1)");
    std::string det_algo = "pj", det_factor = "twisted", det_in, det_out = "zeros.pjz";
    double det_chi_max = 0.0;
    bool det_mgn_weighted = false;
    det_cmd->add_option("--algo", det_algo, "pj|pjc|mgn")->check(CLI::IsMember({"pj", "pjc", "mgn"}));
    det_cmd->add_option("--factor", det_factor, "identity|twisted")
        ->check(CLI::IsMember({"identity", "twisted"}));
    det_cmd->add_option("--chi-max", det_chi_max, "phase-step guard (default 0.9)");
    det_cmd->add_flag("--mgn-weighted", det_mgn_weighted, "weight MGN magnitudes by e^{-|z|^2/2}");
    det_cmd->add_option("--in", det_in, "input PJF1 field")->required();
    det_cmd->add_option("--out", det_out, "output PJZ1 path");

    // ------------------------------------------------------------ evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "match two PJZ1 files (JSON report)");
    std::string eval_ref, eval_in, eval_out = "match.json";
    double eval_threshold = 0.1;
    eval_cmd->add_option("--ref", eval_ref, "reference PJZ1")->required();
    eval_cmd->add_option("--in", eval_in, "computed PJZ1")->required();
    eval_cmd->add_option("--threshold", eval_threshold, "l_inf matching threshold");
    eval_cmd->add_option("--out", eval_out, "output JSON path");

    // ---------------------------------------------------------- experiment
    auto* exp_cmd = app.add_subcommand("experiment", "run a replication experiment");
    std::string exp_name = "exp1", exp_window, exp_factor = "twisted", exp_out = "experiment_out";
    int exp_realizations = 0;
    uint64_t exp_seed = 1;
    double exp_delta = 0.0, exp_sigma = -1.0;
    bool exp_assert = false;
    exp_cmd->add_option("--name", exp_name, "exp1|exp2|exp3|custom")
        ->check(CLI::IsMember({"exp1", "exp2", "exp3", "custom"}));
    exp_cmd->add_option("--realizations", exp_realizations, "number of realizations");
    exp_cmd->add_option("--seed", exp_seed, "master seed");
    exp_cmd->add_option("--window", exp_window, "hermite0|hermite1|gauss|file:<path>");
    exp_cmd->add_option("--delta", exp_delta, "grid spacing");
    exp_cmd->add_option("--sigma", exp_sigma, "noise level");
    exp_cmd->add_option("--factor", exp_factor, "identity|twisted")
        ->check(CLI::IsMember({"identity", "twisted"}));
    exp_cmd->add_option("--out", exp_out, "output directory");
    exp_cmd->add_flag("--assert", exp_assert, "exit 2 when thresholds are violated");

    // --------------------------------------------------------- kernel-check
    auto* ker_cmd = app.add_subcommand("kernel-check", "empirical covariance vs twisted kernel");
    std::string ker_window = "gauss", ker_out = "kernel_check.json";
    pj_sim_params ker{3.0, 1.0 / 16.0, 1.0, 0, 1, nullptr, nullptr, 0.0};
    int ker_realizations = 2000;
    ker_cmd->add_option("--domain-half-width", ker.domain_half_width, "domain half-width L");
    ker_cmd->add_option("--delta", ker.delta, "grid spacing");
    ker_cmd->add_option("--seed", ker.seed, "master seed");
    ker_cmd->add_option("--window", ker_window, "hermite0|hermite1|gauss");
    ker_cmd->add_option("--realizations", ker_realizations, "number of realizations");
    ker_cmd->add_option("--out", ker_out, "output JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (sim_cmd->parsed()) {
        try {
            if (!sim_config_path.empty()) {
                apply_config_file(*sim_cmd, sim_config_path, sim, sim_window, sim_signal);
            }
        } catch (const std::exception& e) {
            std::fprintf(stderr, "pj: %s\n", e.what());
            return 1;
        }
        sim.window = sim_window.c_str();
        sim.signal = sim_signal.c_str();
        if (sim_signal == "gauss" && sim.signal_amp == 0.0) sim.signal_amp = 1.0;
        pj_field* field = nullptr;
        if (pj_status st = pj_simulate(&sim, &field); st != PJ_OK) return report_error(st);
        const pj_status st = pj_field_write(field, sim_out.c_str());
        pj_field_free(field);
        if (st != PJ_OK) return report_error(st);
        return 0;
    }

    if (det_cmd->parsed()) {
        pj_field* field = nullptr;
        if (pj_status st = pj_field_read(det_in.c_str(), &field); st != PJ_OK) {
            return report_error(st);
        }
        pj_detect_params params{};
        params.algorithm = det_algo == "pj" ? PJ_ALGO_PJ
                           : det_algo == "pjc" ? PJ_ALGO_PJC
                                               : PJ_ALGO_MGN;
        params.factor = factor_from(det_factor);
        params.chi_max = det_chi_max;
        params.mgn_weighted = det_mgn_weighted ? 1 : 0;
        pj_zeroset* zeros = nullptr;
        pj_status st = pj_detect(field, &params, &zeros);
        pj_field_free(field);
        if (st != PJ_OK) return report_error(st);
        st = pj_zeroset_write(zeros, det_out.c_str());
        std::printf("%zu zeros -> %s\n", pj_zeroset_size(zeros), det_out.c_str());
        pj_zeroset_free(zeros);
        if (st != PJ_OK) return report_error(st);
        return 0;
    }

    if (eval_cmd->parsed()) {
        pj_zeroset *ref = nullptr, *got = nullptr;
        if (pj_status st = pj_zeroset_read(eval_ref.c_str(), &ref); st != PJ_OK) {
            return report_error(st);
        }
        if (pj_status st = pj_zeroset_read(eval_in.c_str(), &got); st != PJ_OK) {
            pj_zeroset_free(ref);
            return report_error(st);
        }
        pj_match_summary summary{};
        const pj_status st = pj_evaluate(ref, got, eval_threshold, eval_out.c_str(), &summary);
        pj_zeroset_free(ref);
        pj_zeroset_free(got);
        if (st != PJ_OK) return report_error(st);
        std::printf("matched %zu/%zu reference zeros (%zu computed), charges agree on %zu\n",
                    summary.n_matched, summary.n_reference, summary.n_computed,
                    summary.charge_agreements);
        return 0;
    }

    if (exp_cmd->parsed()) {
        pj_experiment_params params{};
        params.name = exp_name.c_str();
        params.realizations = exp_realizations;
        params.seed = exp_seed;
        params.window = exp_window.empty() ? nullptr : exp_window.c_str();
        params.delta = exp_delta;
        params.sigma = exp_sigma;
        params.factor = factor_from(exp_factor);
        params.out_dir = exp_out.c_str();
        params.assert_thresholds = exp_assert ? 1 : 0;
        if (pj_status st = pj_experiment_run(&params); st != PJ_OK) return report_error(st);
        std::printf("experiment %s -> %s\n", exp_name.c_str(), exp_out.c_str());
        return 0;
    }

    if (ker_cmd->parsed()) {
        ker.window = ker_window.c_str();
        // default probe pairs: variance at 0 plus a spread of offsets
        const std::vector<double> pairs = {
            0.0,  0.0,  0.0, 0.0,   //
            1.0,  0.0,  0.0, 0.0,   //
            1.0,  1.0,  1.0, 0.0,   //
            0.5,  0.5,  -0.5, 0.0,  //
            0.0,  2.0,  0.0, 1.0,   //
            -1.0, 0.0,  1.0, 0.0,
        };
        double worst = 0.0;
        const pj_status st = pj_kernel_check(&ker, pairs.data(), pairs.size() / 4,
                                             ker_realizations, ker_out.c_str(), &worst);
        if (st != PJ_OK) return report_error(st);
        std::printf("max |empirical - reference| = %.6f -> %s\n", worst, ker_out.c_str());
        return 0;
    }

    return 1;
}
