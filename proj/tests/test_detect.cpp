#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "phasejumps/detect.hpp"
#include "phasejumps/rng.hpp"

using namespace pj;
using doctest::Approx;

namespace {

ComplexField field_of(double L, double delta, int pad, const FieldFn& fn) {
    return ComplexField::from_function(GridSpec(L, delta), pad, fn);
}

ChargedZero cz(int k, int j, double delta, int theta) {
    GridPoint gp{k, j};
    return {gp, coord(gp, delta), theta, 0.0, Algorithm::pj};
}

}  // namespace

TEST_CASE("winding sums on a 16-point box") {
    auto F = field_of(1.0, 0.25, 2, [](Complex z) { return z; });
    auto w = winding_sum(F, {0, 0}, 2, PhaseFactor::identity);
    CHECK(w.status == WindingStatus::ok);
    CHECK(w.theta == 1);
    CHECK(std::abs(w.theta_raw - 1.0) < 1e-9);
    CHECK(w.chi < 0.9);

    auto Fc = field_of(1.0, 0.25, 2, [](Complex z) { return std::conj(z); });
    CHECK(winding_sum(Fc, {0, 0}, 2, PhaseFactor::identity).theta == -1);

    auto F2 = field_of(1.0, 0.25, 2, [](Complex z) { return z * z; });
    auto w2 = winding_sum(F2, {0, 0}, 2, PhaseFactor::identity);
    CHECK(w2.theta == 2);
    CHECK(std::abs(w2.theta_raw - 2.0) < 1e-9);

    auto F1 = field_of(1.0, 0.25, 2, [](Complex) { return Complex{1.0, 0.0}; });
    auto w1 = winding_sum(F1, {0, 0}, 2, PhaseFactor::identity);
    CHECK(w1.theta == 0);
    CHECK(w1.chi == 0.0);
}

TEST_CASE("winding with a vanishing boundary sample reports zero_sample") {
    // zero placed exactly on the test-box boundary
    auto F = field_of(1.0, 0.25, 2, [](Complex z) { return z - Complex{0.5, 0.0}; });
    auto w = winding_sum(F, {0, 0}, 2, PhaseFactor::identity);
    CHECK(w.status == WindingStatus::zero_sample);
    CHECK(w.theta == 0);
    CHECK(w.chi == 1.0);
}

TEST_CASE("winding integrality for random polynomial fields") {
    for (int trial = 0; trial < 40; ++trial) {
        Complex roots[3];
        for (int r = 0; r < 3; ++r) {
            const auto b = philox::block(31, trial, r);
            roots[r] = {1.6 * bits_to_unit(b[0], b[1]) - 0.8,
                        1.6 * bits_to_unit(b[2], b[3]) - 0.8};
        }
        auto F = field_of(1.0, 1.0 / 64.0, 2, [&](Complex z) {
            return (z - roots[0]) * (z - roots[1]) * (z - roots[2]);
        });
        for (int k = -30; k <= 30; k += 7) {
            for (int j = -30; j <= 30; j += 7) {
                auto w = winding_sum(F, {k, j}, 2, PhaseFactor::twisted);
                if (w.status == WindingStatus::ok) {
                    CHECK(std::abs(w.theta_raw - std::nearbyint(w.theta_raw)) < 1e-6);
                }
            }
        }
    }
}

TEST_CASE("theta is factor-independent for analytic test fields") {
    auto F = field_of(1.0, 1.0 / 64.0, 2, [](Complex z) {
        return (z - Complex{0.31, -0.22}) * (z - Complex{-0.4, 0.1});
    });
    for (int k = -60; k <= 60; k += 5) {
        for (int j = -60; j <= 60; j += 5) {
            auto wi = winding_sum(F, {k, j}, 2, PhaseFactor::identity);
            auto wt = winding_sum(F, {k, j}, 2, PhaseFactor::twisted);
            if (wi.status == WindingStatus::ok && wt.status == WindingStatus::ok &&
                wi.chi < 0.9 && wt.chi < 0.9) {
                CHECK(wi.theta == wt.theta);
            }
        }
    }
}

TEST_CASE("phasejumps finds a simple zero") {
    const double delta = 1.0 / 64.0;
    auto F = field_of(1.0, delta, 2, [](Complex z) { return z - Complex{0.3, 0.1}; });
    auto zs = phasejumps(F);
    REQUIRE(zs.size() == 1);
    CHECK(zs[0].theta == 1);
    CHECK(std::abs(zs[0].pos.real() - 0.3) <= 2 * delta);
    CHECK(std::abs(zs[0].pos.imag() - 0.1) <= 2 * delta);
    CHECK(zs[0].chi < 0.9);
    CHECK(zs[0].algo == Algorithm::pj);
}

TEST_CASE("phasejumps on a constant field is empty") {
    auto F = field_of(1.0, 1.0 / 32.0, 2, [](Complex) { return Complex{5.0, 0.0}; });
    CHECK(phasejumps(F).empty());
}

TEST_CASE("phasejumps resolves charges of a mixed-type field") {
    const double delta = 1.0 / 64.0;
    const Complex a{-0.5, 0.0};
    const Complex b{0.25, -0.5};
    auto F = field_of(1.0, delta, 2,
                      [&](Complex z) { return (z - a) * (std::conj(z) - b); });
    auto zs = phasejumps(F);
    REQUIRE(zs.size() == 2);
    const Complex bbar = std::conj(b);
    int found_a = 0, found_b = 0;
    for (const auto& z : zs) {
        if (std::abs(z.pos.real() - a.real()) <= 2 * delta &&
            std::abs(z.pos.imag() - a.imag()) <= 2 * delta) {
            ++found_a;
            CHECK(z.theta == 1);
        }
        if (std::abs(z.pos.real() - bbar.real()) <= 2 * delta &&
            std::abs(z.pos.imag() - bbar.imag()) <= 2 * delta) {
            ++found_b;
            CHECK(z.theta == -1);
        }
    }
    CHECK(found_a == 1);
    CHECK(found_b == 1);
}

TEST_CASE("pj soundness: every detection is near a true zero") {
    const double delta = 1.0 / 64.0;
    const Complex a{0.11, -0.43};
    const Complex b{-0.52, 0.27};
    auto F = field_of(1.0, delta, 2,
                      [&](Complex z) { return (z - a) * (std::conj(z) - std::conj(b)); });
    auto zs = phasejumps(F);
    for (const auto& z : zs) {
        const double da = std::max(std::abs(z.pos.real() - a.real()),
                                   std::abs(z.pos.imag() - a.imag()));
        const double db = std::max(std::abs(z.pos.real() - b.real()),
                                   std::abs(z.pos.imag() - b.imag()));
        CHECK(std::min(da, db) <= 2 * 2 * delta);
    }
}

TEST_CASE("pjc step-1 oscillation test") {
    const double delta = 1.0 / 64.0;
    // linear field centered at the coarse point: margin dstar >= 2*delta
    auto F = field_of(1.0, delta, 8, [](Complex z) { return z; });
    CHECK(pjc_step1_test(F, {0, 0}, PhaseFactor::identity));

    auto Fc = field_of(1.0, delta, 8, [](Complex) { return Complex{3.0, -4.0}; });
    CHECK(pjc_step1_test(Fc, {0, 0}, PhaseFactor::identity));

    // oscillation at the fine scale: adjacent boundary samples differ by 2|c|
    const double K = std::numbers::pi / delta;
    auto Fo = field_of(1.0, delta, 8, [K](Complex z) {
        return std::exp(Complex{0.0, K * z.real()});
    });
    CHECK(!pjc_step1_test(Fo, {0, 0}, PhaseFactor::identity));

    CHECK_THROWS_AS(pjc_step1_test(F, {1, 0}, PhaseFactor::identity), std::invalid_argument);
}

TEST_CASE("phasejumps-coarse finds simple zeros") {
    const double delta = 1.0 / 64.0;
    const Complex z0{0.3, 0.1};
    auto F = field_of(1.0, delta, 8, [&](Complex z) { return z - z0; });
    auto zs = phasejumps_coarse(F);
    REQUIRE(zs.size() == 1);
    CHECK(zs[0].theta == 1);
    CHECK(zs[0].algo == Algorithm::pjc);
    CHECK(std::abs(zs[0].pos.real() - z0.real()) <= 1.0 / 8.0);
    CHECK(std::abs(zs[0].pos.imag() - z0.imag()) <= 1.0 / 8.0);

    auto F1 = field_of(1.0, delta, 8, [](Complex) { return Complex{1.0, 0.0}; });
    CHECK(phasejumps_coarse(F1).empty());

    auto Fa = field_of(1.0, delta, 8,
                       [](Complex z) { return std::conj(z) - Complex{0.2, 0.0}; });
    auto za = phasejumps_coarse(Fa);
    REQUIRE(za.size() == 1);
    CHECK(za[0].theta == -1);
    CHECK(std::abs(za[0].pos.real() - 0.2) <= 1.0 / 8.0);
    CHECK(std::abs(za[0].pos.imag()) <= 1.0 / 8.0);
}

TEST_CASE("detection config invariants are enforced") {
    auto F = field_of(1.0, 1.0 / 32.0, 2, [](Complex z) { return z; });
    DetectionConfig bad;
    bad.chi_max = 0.0;
    CHECK_THROWS_AS(phasejumps(F, bad), std::invalid_argument);
    bad = {};
    bad.chi_max = 1.5;
    CHECK_THROWS_AS(phasejumps(F, bad), std::invalid_argument);
    bad = {};
    bad.pj_sep_steps = 0;
    CHECK_THROWS_AS(phasejumps(F, bad), std::invalid_argument);
    bad = {};
    bad.theta_round_tol = 0.0;
    CHECK_THROWS_AS(phasejumps(F, bad), std::invalid_argument);
}

TEST_CASE("phasejumps-coarse validates alignment and padding") {
    auto F = field_of(2.0, 0.01, 10, [](Complex z) { return z; });
    CHECK_THROWS_AS(phasejumps_coarse(F), std::invalid_argument);  // 2/0.06 not integer
    auto F2 = field_of(1.0, 1.0 / 64.0, 2, [](Complex z) { return z; });
    CHECK_THROWS_AS(phasejumps_coarse(F2), std::invalid_argument);  // pad < dstar_steps
}

TEST_CASE("sieve examples") {
    const double delta = 0.1;
    SUBCASE("same-theta pair closer than min_sep keeps the first in scan order") {
        std::vector<ChargedZero> cand = {cz(0, 0, delta, 1), cz(3, 0, delta, 1)};
        auto out = sieve(cand, 6 * delta, SieveNorm::l2, true);
        REQUIRE(out.size() == 1);
        CHECK(out[0].gp == GridPoint{0, 0});
    }
    SUBCASE("opposite charges are exempt when per_charge is set") {
        std::vector<ChargedZero> cand = {cz(0, 0, delta, 1), cz(3, 0, delta, -1)};
        CHECK(sieve(cand, 6 * delta, SieveNorm::l2, true).size() == 2);
        CHECK(sieve(cand, 6 * delta, SieveNorm::l2, false).size() == 1);
    }
    SUBCASE("empty input") {
        CHECK(sieve({}, 1.0, SieveNorm::linf, false).empty());
    }
    SUBCASE("separation exactly min_sep survives") {
        std::vector<ChargedZero> cand = {cz(0, 0, delta, 1), cz(6, 0, delta, 1)};
        CHECK(sieve(cand, 6 * delta, SieveNorm::l2, true).size() == 2);
        CHECK(sieve_steps(cand, 6, SieveNorm::l2, true).size() == 2);
    }
}

TEST_CASE("sieve maximality on random candidate sets") {
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<ChargedZero> cand;
        const auto nb = philox::block(41, trial, 0);
        const int n = 1 + int(bits_to_unit(nb[0], nb[1]) * 40);
        for (int i = 0; i < n; ++i) {
            const auto b = philox::block(41, trial, 100 + i);
            const int k = int(bits_to_unit(b[0], b[1]) * 41) - 20;
            const int j = int(bits_to_unit(b[2], b[3]) * 41) - 20;
            const int theta = (b[0] & 1) ? 1 : -1;
            cand.push_back(cz(k, j, 0.1, theta));
        }
        const bool per_charge = trial % 2 == 0;
        const SieveNorm norm = trial % 3 == 0 ? SieveNorm::linf : SieveNorm::l2;
        auto out = sieve_steps(cand, 5, norm, per_charge);
        auto dist_ok = [&](const ChargedZero& a, const ChargedZero& b) {
            const long long dk = a.gp.k - b.gp.k, dj = a.gp.j - b.gp.j;
            const long long d2 = norm == SieveNorm::l2
                                     ? dk * dk + dj * dj
                                     : std::max(std::llabs(dk), std::llabs(dj));
            const long long lim = norm == SieveNorm::l2 ? 25 : 5;
            return d2 >= lim;
        };
        // separation holds inside the output
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                if (per_charge && out[i].theta != out[j].theta) continue;
                if (out[i].gp == out[j].gp) continue;
                CHECK(dist_ok(out[i], out[j]));
            }
        }
        // maximality: every rejected candidate conflicts with some accepted one
        for (const auto& c : cand) {
            const bool accepted =
                std::any_of(out.begin(), out.end(), [&](const ChargedZero& o) {
                    return o.gp == c.gp && o.theta == c.theta;
                });
            if (accepted) continue;
            const bool conflicts =
                std::any_of(out.begin(), out.end(), [&](const ChargedZero& o) {
                    if (per_charge && o.theta != c.theta) return false;
                    return !dist_ok(o, c);
                });
            CHECK(conflicts);
        }
    }
}

TEST_CASE("mgn selects weighted and unweighted minima") {
    auto F = field_of(0.5, 0.1, 1, [](Complex z) { return z; });
    auto zs = mgn(F, true);
    REQUIRE(zs.size() == 1);
    CHECK(zs[0].gp == GridPoint{0, 0});
    CHECK(zs[0].theta == 0);
    CHECK(zs[0].algo == Algorithm::mgn);

    // constant field: radial weight decay leaves no weighted minimum
    auto F1 = field_of(0.5, 0.1, 1, [](Complex) { return Complex{1.0, 0.0}; });
    CHECK(mgn(F1, true).empty());

    auto F2 = field_of(0.5, 0.1, 1, [](Complex z) { return z - Complex{0.04, 0.03}; });
    auto z2 = mgn(F2, false);
    REQUIRE(z2.size() == 1);
    CHECK(z2[0].gp == GridPoint{0, 0});
}

TEST_CASE("detection is independent of the worker count") {
    const double delta = 1.0 / 64.0;
    auto F = field_of(1.0, delta, 8, [](Complex z) {
        return (z - Complex{0.3, 0.1}) * (std::conj(z) + Complex{0.4, 0.2});
    });
    setenv("PJ_WORKERS", "1", 1);
    auto a = phasejumps(F);
    auto ac = phasejumps_coarse(F);
    setenv("PJ_WORKERS", "3", 1);
    auto b = phasejumps(F);
    auto bc = phasejumps_coarse(F);
    unsetenv("PJ_WORKERS");
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].gp == b[i].gp);
        CHECK(a[i].theta == b[i].theta);
        CHECK(a[i].chi == b[i].chi);
    }
    REQUIRE(ac.size() == bc.size());
    for (std::size_t i = 0; i < ac.size(); ++i) CHECK(ac[i].gp == bc[i].gp);
}
