// Exercises the extern-C surface end to end: simulate -> write/read ->
// detect -> write/read -> evaluate, plus error reporting.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "phasejumps.h"

namespace {
std::string tmp(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}
}  // namespace

TEST_CASE("simulate, round-trip and detect through the C API") {
    pj_sim_params sim{};
    sim.domain_half_width = 2.0;
    sim.delta = 1.0 / 32.0;
    sim.sigma = 1.0;
    sim.pad_steps = 2;
    sim.seed = 31;
    sim.window = "hermite1";
    sim.signal = "zero";

    pj_field* field = nullptr;
    REQUIRE(pj_simulate(&sim, &field) == PJ_OK);
    double L = 0, delta = 0;
    int pad = 0;
    REQUIRE(pj_field_info(field, &L, &delta, &pad) == PJ_OK);
    CHECK(L == 2.0);
    CHECK(delta == 1.0 / 32.0);
    CHECK(pad == 2);

    const std::string fpath = tmp("capi_field.pjf");
    REQUIRE(pj_field_write(field, fpath.c_str()) == PJ_OK);
    pj_field* field2 = nullptr;
    REQUIRE(pj_field_read(fpath.c_str(), &field2) == PJ_OK);
    double re1 = 0, im1 = 0, re2 = 0, im2 = 0;
    REQUIRE(pj_field_sample(field, 5, -3, &re1, &im1) == PJ_OK);
    REQUIRE(pj_field_sample(field2, 5, -3, &re2, &im2) == PJ_OK);
    CHECK(re1 == re2);
    CHECK(im1 == im2);
    CHECK(pj_field_sample(field, 1000, 0, &re1, &im1) == PJ_ERR_OUT_OF_BOUNDS);
    CHECK(std::string(pj_last_error()).find("k=1000") != std::string::npos);

    pj_detect_params det{};
    det.algorithm = PJ_ALGO_PJ;
    det.factor = PJ_FACTOR_TWISTED;
    pj_zeroset* zeros = nullptr;
    REQUIRE(pj_detect(field, &det, &zeros) == PJ_OK);
    CHECK(pj_zeroset_size(zeros) > 0);

    const std::string zpath = tmp("capi_zeros.pjz");
    REQUIRE(pj_zeroset_write(zeros, zpath.c_str()) == PJ_OK);
    pj_zeroset* zeros2 = nullptr;
    REQUIRE(pj_zeroset_read(zpath.c_str(), &zeros2) == PJ_OK);
    REQUIRE(pj_zeroset_size(zeros2) == pj_zeroset_size(zeros));

    pj_match_summary summary{};
    const std::string mpath = tmp("capi_match.json");
    REQUIRE(pj_evaluate(zeros, zeros2, 0.01, mpath.c_str(), &summary) == PJ_OK);
    CHECK(summary.n_matched == summary.n_reference);
    CHECK(summary.total_linf_dist == 0.0);
    CHECK(summary.charge_agreements == summary.n_matched);
    std::ifstream match_json(mpath);
    CHECK(match_json.good());

    pj_zeroset_free(zeros2);
    pj_zeroset_free(zeros);
    pj_field_free(field2);
    pj_field_free(field);
    std::filesystem::remove(fpath);
    std::filesystem::remove(zpath);
    std::filesystem::remove(mpath);
}

TEST_CASE("C API validates arguments and reports IO failures") {
    CHECK(pj_simulate(nullptr, nullptr) == PJ_ERR_INVALID_ARGUMENT);
    pj_field* field = nullptr;
    CHECK(pj_field_read("/nonexistent/path.pjf", &field) == PJ_ERR_IO);
    CHECK(std::string(pj_last_error()).find("cannot open") != std::string::npos);

    pj_sim_params sim{};
    sim.domain_half_width = 1.0;
    sim.delta = 0.3;  // L/delta not an integer
    sim.sigma = 1.0;
    sim.window = "hermite1";
    CHECK(pj_simulate(&sim, &field) == PJ_ERR_INVALID_ARGUMENT);

    sim.delta = 0.25;
    sim.window = "nosuchwindow";
    CHECK(pj_simulate(&sim, &field) == PJ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("kernel check through the C API") {
    pj_sim_params sim{};
    sim.domain_half_width = 2.0;
    sim.delta = 1.0 / 8.0;
    sim.sigma = 1.0;
    sim.seed = 3;
    sim.window = "gauss";
    sim.signal = "zero";
    const double pairs[] = {0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0};
    double worst = -1.0;
    const std::string kpath = tmp("capi_kernel.json");
    REQUIRE(pj_kernel_check(&sim, pairs, 2, 200, kpath.c_str(), &worst) == PJ_OK);
    CHECK(worst >= 0.0);
    CHECK(worst < 5.0 / std::sqrt(200.0));
    std::filesystem::remove(kpath);
}

TEST_CASE("experiment through the C API") {
    const std::string dir = tmp("capi_exp");
    std::filesystem::remove_all(dir);
    pj_experiment_params exp{};
    exp.name = "custom";
    exp.realizations = 2;
    exp.seed = 9;
    exp.delta = 1.0 / 16.0;
    exp.sigma = 1.0;
    exp.factor = PJ_FACTOR_TWISTED;
    exp.out_dir = dir.c_str();
    REQUIRE(pj_experiment_run(&exp) == PJ_OK);
    CHECK(std::filesystem::exists(std::filesystem::path(dir) / "summary.json"));
    CHECK(std::filesystem::exists(std::filesystem::path(dir) / "report_pj.csv"));
    CHECK(std::filesystem::exists(std::filesystem::path(dir) / "plot_report.py"));
    std::filesystem::remove_all(dir);

    exp.name = "nosuch";
    CHECK(pj_experiment_run(&exp) == PJ_ERR_INVALID_ARGUMENT);
}
