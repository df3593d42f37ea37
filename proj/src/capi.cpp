// SPDX-License-Identifier: Apache-2.0
#include "phasejumps.h"

#include <json.hpp>

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "phasejumps/detect.hpp"
#include "phasejumps/experiment.hpp"
#include "phasejumps/io.hpp"
#include "phasejumps/simulate.hpp"
#include "phasejumps/stats.hpp"

struct pj_field {
    pj::ComplexField field;
};

struct pj_zeroset {
    pj::ZeroSetFile zeros;
};

namespace {

thread_local std::string t_last_error;

pj_status fail(pj_status code, const char* what) {
    t_last_error = what ? what : "unknown error";
    return code;
}

template <typename Fn>
pj_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const pj::io_error& e) {
        return fail(PJ_ERR_IO, e.what());
    } catch (const std::out_of_range& e) {
        return fail(PJ_ERR_OUT_OF_BOUNDS, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(PJ_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::runtime_error& e) {
        return fail(PJ_ERR_NUMERIC, e.what());
    } catch (const std::exception& e) {
        return fail(PJ_ERR_INTERNAL, e.what());
    }
}

pj::WindowSpec window_from_name(const char* name) {
    const std::string w = name ? name : "hermite1";
    if (w == "hermite0") return pj::WindowSpec::hermite0();
    if (w == "hermite1") return pj::WindowSpec::hermite1();
    if (w == "gauss") return pj::WindowSpec::gauss_pi();
    if (w.rfind("file:", 0) == 0) {
        const std::string path = w.substr(5);
        std::ifstream in(path);
        if (!in) throw pj::io_error(path, 0, 0, "cannot open window file");
        // window sample file: first line "t0 dt", then one "re [im]" per line
        double t0 = 0.0, dt = 0.0;
        if (!(in >> t0 >> dt)) throw pj::io_error(path, 1, 0, "expected 't0 dt'");
        std::vector<std::complex<double>> samples;
        double re = 0.0;
        while (in >> re) {
            double im = 0.0;
            if (in.peek() != '\n') in >> im;
            samples.emplace_back(re, im);
        }
        return pj::WindowSpec::from_samples(std::move(samples), t0, dt);
    }
    throw std::invalid_argument("unknown window '" + w + "'");
}

pj::SimConfig sim_config(const pj_sim_params& p) {
    pj::SimConfig cfg;
    cfg.L = p.domain_half_width;
    cfg.delta = p.delta;
    cfg.sigma = p.sigma;
    cfg.pad_steps = p.pad_steps;
    cfg.seed = p.seed;
    cfg.window = window_from_name(p.window);
    const std::string sig = p.signal ? p.signal : "zero";
    if (sig == "zero" || p.signal_amp == 0.0) {
        // no signal
    } else if (sig == "gauss") {
        const double amp = p.signal_amp;
        cfg.signal = [amp](double t) {
            return std::complex<double>{amp * std::exp(-0.5 * t * t), 0.0};
        };
    } else {
        throw std::invalid_argument("unknown signal '" + sig + "'");
    }
    return cfg;
}

nlohmann::json match_to_json(const pj::MatchResult& m, const pj::ZeroSetFile& ref,
                             const pj::ZeroSetFile& got, double threshold) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : m.pairs) {
        pairs.push_back({{"ref_index", p.ref_index},
                         {"comp_index", p.comp_index},
                         {"ref", {{"x", ref.zeros[p.ref_index].pos.real()},
                                  {"y", ref.zeros[p.ref_index].pos.imag()},
                                  {"theta", ref.zeros[p.ref_index].theta}}},
                         {"comp", {{"x", got.zeros[p.comp_index].pos.real()},
                                   {"y", got.zeros[p.comp_index].pos.imag()},
                                   {"theta", got.zeros[p.comp_index].theta}}},
                         {"linf_dist", p.dist},
                         {"charge_agree", p.charge_agree}});
    }
    return {{"threshold", threshold},
            {"n_reference", ref.zeros.size()},
            {"n_computed", got.zeros.size()},
            {"n_matched", m.pairs.size()},
            {"total_linf_dist", m.total_dist},
            {"charge_agreements", m.charge_agreements},
            {"pairs", pairs},
            {"unmatched_reference", m.unmatched_reference},
            {"unmatched_computed", m.unmatched_computed}};
}

}  // namespace

extern "C" {

const char* pj_last_error(void) { return t_last_error.c_str(); }

pj_status pj_simulate(const pj_sim_params* params, pj_field** out) {
    if (!params || !out) return fail(PJ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new pj_field{pj::simulate_field(sim_config(*params))};
        return PJ_OK;
    });
}

pj_status pj_field_read(const char* path, pj_field** out) {
    if (!path || !out) return fail(PJ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new pj_field{pj::read_field(path)};
        return PJ_OK;
    });
}

pj_status pj_field_write(const pj_field* field, const char* path) {
    if (!field || !path) return fail(PJ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        pj::write_field(field->field, path);
        return PJ_OK;
    });
}

pj_status pj_field_info(const pj_field* field, double* domain_half_width, double* delta,
                        int* pad_steps) {
    if (!field) return fail(PJ_ERR_INVALID_ARGUMENT, "null field");
    if (domain_half_width) *domain_half_width = field->field.spec().L();
    if (delta) *delta = field->field.spec().delta();
    if (pad_steps) *pad_steps = field->field.pad_steps();
    return PJ_OK;
}

pj_status pj_field_sample(const pj_field* field, int k, int j, double* re, double* im) {
    if (!field) return fail(PJ_ERR_INVALID_ARGUMENT, "null field");
    return guarded([&] {
        const pj::Complex v = field->field.at({k, j});
        if (re) *re = v.real();
        if (im) *im = v.imag();
        return PJ_OK;
    });
}

void pj_field_free(pj_field* field) { delete field; }

pj_status pj_detect(const pj_field* field, const pj_detect_params* params, pj_zeroset** out) {
    if (!field || !params || !out) return fail(PJ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        pj::DetectionConfig det;
        det.factor = params->factor == PJ_FACTOR_TWISTED ? pj::PhaseFactor::twisted
                                                         : pj::PhaseFactor::identity;
        if (params->chi_max > 0.0) det.chi_max = params->chi_max;
        pj::ZeroSetFile zs;
        zs.L = field->field.spec().L();
        zs.delta = field->field.spec().delta();
        switch (params->algorithm) {
            case PJ_ALGO_PJ:
                zs.algo = pj::Algorithm::pj;
                zs.zeros = pj::phasejumps(field->field, det);
                break;
            case PJ_ALGO_PJC:
                zs.algo = pj::Algorithm::pjc;
                zs.zeros = pj::phasejumps_coarse(field->field, det);
                break;
            case PJ_ALGO_MGN:
                zs.algo = pj::Algorithm::mgn;
                zs.zeros = pj::mgn(field->field, params->mgn_weighted != 0);
                break;
            default: throw std::invalid_argument("unknown algorithm");
        }
        *out = new pj_zeroset{std::move(zs)};
        return PJ_OK;
    });
}

pj_status pj_zeroset_read(const char* path, pj_zeroset** out) {
    if (!path || !out) return fail(PJ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new pj_zeroset{pj::read_zeros(path)};
        return PJ_OK;
    });
}

pj_status pj_zeroset_write(const pj_zeroset* zeros, const char* path) {
    if (!zeros || !path) return fail(PJ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        pj::write_zeros(zeros->zeros, path);
        return PJ_OK;
    });
}

size_t pj_zeroset_size(const pj_zeroset* zeros) {
    return zeros ? zeros->zeros.zeros.size() : 0;
}

pj_status pj_zeroset_get(const pj_zeroset* zeros, size_t index, double* x, double* y, int* theta,
                         double* chi) {
    if (!zeros) return fail(PJ_ERR_INVALID_ARGUMENT, "null zeroset");
    if (index >= zeros->zeros.zeros.size()) return fail(PJ_ERR_OUT_OF_BOUNDS, "index too large");
    const pj::ChargedZero& z = zeros->zeros.zeros[index];
    if (x) *x = z.pos.real();
    if (y) *y = z.pos.imag();
    if (theta) *theta = z.theta;
    if (chi) *chi = z.chi;
    return PJ_OK;
}

void pj_zeroset_free(pj_zeroset* zeros) { delete zeros; }

pj_status pj_evaluate(const pj_zeroset* reference, const pj_zeroset* computed, double threshold,
                      const char* json_out_path, pj_match_summary* out) {
    if (!reference || !computed) return fail(PJ_ERR_INVALID_ARGUMENT, "null zeroset");
    return guarded([&] {
        const pj::MatchResult m =
            pj::match_zeros(reference->zeros.zeros, computed->zeros.zeros, threshold);
        if (json_out_path) {
            std::ofstream f(json_out_path);
            if (!f) throw pj::io_error(json_out_path, 0, 0, "cannot open for writing");
            f << match_to_json(m, reference->zeros, computed->zeros, threshold).dump(2) << '\n';
        }
        if (out) {
            out->n_reference = reference->zeros.zeros.size();
            out->n_computed = computed->zeros.zeros.size();
            out->n_matched = m.pairs.size();
            out->charge_agreements = m.charge_agreements;
            out->total_linf_dist = m.total_dist;
        }
        return PJ_OK;
    });
}

pj_status pj_kernel_check(const pj_sim_params* params, const double* pair_coords, size_t n_pairs,
                          int n_realizations, const char* json_out_path, double* max_deviation) {
    if (!params || !pair_coords || n_pairs == 0) {
        return fail(PJ_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        pj::SimConfig cfg = sim_config(*params);
        std::vector<std::pair<pj::Complex, pj::Complex>> pairs;
        pairs.reserve(n_pairs);
        for (size_t i = 0; i < n_pairs; ++i) {
            pairs.emplace_back(pj::Complex{pair_coords[4 * i], pair_coords[4 * i + 1]},
                               pj::Complex{pair_coords[4 * i + 2], pair_coords[4 * i + 3]});
        }
        const std::string wname = params->window ? params->window : "hermite1";
        const pj::TwistedKernel kernel = wname == "gauss"
                                             ? pj::TwistedKernel::gaussian_gef()
                                             : pj::TwistedKernel::from_window(cfg.window);
        const auto res = pj::empirical_covariance(cfg, pairs, n_realizations, kernel);
        double worst = 0.0;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : res) {
            worst = std::max(worst, r.deviation);
            rows.push_back({{"z", {r.z.real(), r.z.imag()}},
                            {"w", {r.w.real(), r.w.imag()}},
                            {"estimate", {r.estimate.real(), r.estimate.imag()}},
                            {"reference", {r.reference.real(), r.reference.imag()}},
                            {"abs_deviation", r.deviation}});
        }
        if (json_out_path) {
            std::ofstream f(json_out_path);
            if (!f) throw pj::io_error(json_out_path, 0, 0, "cannot open for writing");
            f << nlohmann::json{{"window", wname},
                                {"delta", cfg.delta},
                                {"domain_half_width", cfg.L},
                                {"realizations", n_realizations},
                                {"seed", cfg.seed},
                                {"pairs", rows},
                                {"max_abs_deviation", worst}}
                     .dump(2)
              << '\n';
        }
        if (max_deviation) *max_deviation = worst;
        return PJ_OK;
    });
}

pj_status pj_experiment_run(const pj_experiment_params* params) {
    if (!params || !params->name) return fail(PJ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        pj::ExperimentConfig cfg =
            pj::experiment_defaults(pj::experiment_kind_from_name(params->name));
        if (params->realizations > 0) cfg.realizations = params->realizations;
        cfg.seed = params->seed;
        if (params->window) cfg.window = window_from_name(params->window);
        if (params->delta > 0.0) cfg.delta = params->delta;
        if (params->sigma >= 0.0) cfg.sigma = params->sigma;
        cfg.factor = params->factor == PJ_FACTOR_IDENTITY ? pj::PhaseFactor::identity
                                                          : pj::PhaseFactor::twisted;
        if (params->out_dir) cfg.out_dir = params->out_dir;
        cfg.assert_thresholds = params->assert_thresholds != 0;
        const pj::ExperimentOutcome outcome = pj::run_experiment(cfg);
        if (!outcome.passed) {
            std::string msg = "experiment thresholds violated:";
            for (const std::string& f : outcome.failures) msg += " " + f + ";";
            return fail(PJ_ERR_ASSERTION, msg.c_str());
        }
        return PJ_OK;
    });
}

}  // extern "C"
