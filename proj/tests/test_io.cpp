#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "phasejumps/io.hpp"
#include "phasejumps/rng.hpp"

using namespace pj;

namespace {
std::filesystem::path tmp_path(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}
}  // namespace

TEST_CASE("field files round-trip bit-exactly") {
    GridSpec spec(1.0, 1.0 / 8.0);
    const int pad = 2;
    const int m = spec.half_steps() + pad;
    std::vector<Complex> vals;
    for (int j = -m; j <= m; ++j) {
        for (int k = -m; k <= m; ++k) {
            const auto b = philox::block(91, static_cast<std::uint64_t>(j + m),
                                         static_cast<std::uint64_t>(k + m));
            vals.emplace_back(4.0 * bits_to_unit(b[0], b[1]) - 2.0,
                              std::ldexp(bits_to_unit(b[2], b[3]) - 0.5, -300));
        }
    }
    ComplexField f(spec, pad, vals);
    const auto path = tmp_path("pj_test_field.pjf");
    write_field(f, path.string());
    ComplexField g = read_field(path.string());
    CHECK(g.spec().L() == f.spec().L());
    CHECK(g.spec().delta() == f.spec().delta());
    CHECK(g.pad_steps() == f.pad_steps());
    REQUIRE(g.values().size() == f.values().size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        CHECK(g.values()[i].real() == f.values()[i].real());
        CHECK(g.values()[i].imag() == f.values()[i].imag());
    }
    std::filesystem::remove(path);
}

TEST_CASE("malformed field files carry line diagnostics") {
    const auto path = tmp_path("pj_test_bad.pjf");
    {
        std::ofstream out(path);
        out << "PJF1\n1 0.5 0\nnot numbers\n";
    }
    try {
        read_field(path.string());
        FAIL("expected io_error");
    } catch (const io_error& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("expected an integer") != std::string::npos);
    }
    {
        std::ofstream out(path);
        out << "PJXX\n";
    }
    CHECK_THROWS_AS(read_field(path.string()), io_error);
    {
        std::ofstream out(path);
        out << "PJF1\n1 0.5 0\n5 5\n1 2\n";
    }
    try {
        read_field(path.string());
        FAIL("expected io_error");
    } catch (const io_error& e) {
        CHECK(e.line() == 5);
    }
    std::filesystem::remove(path);
}

TEST_CASE("zero-set files round-trip") {
    ZeroSetFile zs;
    zs.algo = Algorithm::pjc;
    zs.L = 1.0;
    zs.delta = 1.0 / 64.0;
    ChargedZero z;
    z.gp = {19, -6};
    z.pos = coord(z.gp, zs.delta);
    z.theta = -1;
    z.chi = 0.25;
    z.algo = Algorithm::pjc;
    zs.zeros.push_back(z);
    const auto path = tmp_path("pj_test_zeros.pjz");
    write_zeros(zs, path.string());
    ZeroSetFile rd = read_zeros(path.string());
    CHECK(rd.algo == Algorithm::pjc);
    CHECK(rd.L == zs.L);
    CHECK(rd.delta == zs.delta);
    REQUIRE(rd.zeros.size() == 1);
    CHECK(rd.zeros[0].pos == z.pos);
    CHECK(rd.zeros[0].gp == z.gp);
    CHECK(rd.zeros[0].theta == -1);
    CHECK(rd.zeros[0].chi == 0.25);
    std::filesystem::remove(path);
}

TEST_CASE("format_double round-trips doubles") {
    for (int i = 0; i < 2000; ++i) {
        const auto b = philox::block(93, 0, i);
        const double v = std::ldexp(bits_to_unit(b[0], b[1]) - 0.5,
                                    static_cast<int>(b[2] % 600) - 300);
        const double back = std::strtod(format_double(v).c_str(), nullptr);
        CHECK(back == v);
    }
}
