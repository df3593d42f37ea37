#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "phasejumps/experiment.hpp"
#include "phasejumps/kernel.hpp"
#include "phasejumps/rng.hpp"
#include "phasejumps/simulate.hpp"

using namespace pj;
using doctest::Approx;

TEST_CASE("counter-based stream is reproducible and order-insensitive") {
    const Complex a = complex_normal(42, 3, 17);
    const Complex b = complex_normal(42, 3, 18);
    CHECK(a == complex_normal(42, 3, 17));
    CHECK(a != b);
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) == derive_seed(1, 0));
}

TEST_CASE("gaussian window kernel: closed form against quadrature") {
    const auto gef = TwistedKernel::gaussian_gef();
    const auto quad = TwistedKernel::from_window(WindowSpec::gauss_pi());
    for (const Complex z : {Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{0.5, -0.75},
                            Complex{-1.25, 1.0}, Complex{2.0, 2.0}}) {
        CAPTURE(z.real());
        CAPTURE(z.imag());
        CHECK(std::abs(gef(z) - quad(z)) < 1e-7);
    }
    CHECK(gef({0.0, 0.0}) == Complex{1.0, 0.0});
}

TEST_CASE("kernel symmetry H(-z) = conj(H(z))") {
    const auto h1 = TwistedKernel::from_window(WindowSpec::hermite1());
    const auto gef = TwistedKernel::gaussian_gef();
    for (int i = 0; i < 12; ++i) {
        const auto b = philox::block(59, 0, i);
        const Complex z{3.0 * (bits_to_unit(b[0], b[1]) - 0.5),
                        3.0 * (bits_to_unit(b[2], b[3]) - 0.5)};
        CHECK(std::abs(h1(-z) - std::conj(h1(z))) < 1e-8);
        CHECK(std::abs(gef(-z) - std::conj(gef(z))) < 1e-15);
    }
}

TEST_CASE("hermite-1 kernel is real with vanishing c derivatives") {
    const auto h1 = TwistedKernel::from_window(WindowSpec::hermite1());
    CHECK(std::abs(h1({0.0, 0.0}) - Complex{1.0, 0.0}) < 1e-8);
    CHECK(std::abs(h1({0.8, -0.3}).imag()) < 1e-8);
    const auto [c1, c2] = h1.c_derivatives();
    CHECK(std::abs(c1) < 1e-6);
    CHECK(std::abs(c2) < 1e-6);
}

TEST_CASE("twisted derivatives") {
    SUBCASE("constant") {
        const Complex c{2.5, -1.0};
        const auto [d1, d2] = twisted_derivatives([c](Complex) { return c; }, {2.0, 0.0}, 1e-5);
        CHECK(std::abs(d1 + c) < 1e-9);
        CHECK(std::abs(d2 - c) < 1e-9);
    }
    SUBCASE("identity map at the origin") {
        const auto [d1, d2] = twisted_derivatives([](Complex z) { return z; }, {0.0, 0.0}, 1e-5);
        CHECK(std::abs(d1 - Complex{1.0, 0.0}) < 1e-9);
        CHECK(std::abs(d2) < 1e-9);
    }
    SUBCASE("gaussian e^{-|z|^2/2}: D1 = -conj(z) F, D2 = 0") {
        const auto F = [](Complex z) { return Complex{std::exp(-0.5 * std::norm(z)), 0.0}; };
        for (const Complex z : {Complex{0.0, 0.0}, Complex{0.7, -0.4}, Complex{-1.1, 0.2}}) {
            const auto [d1, d2] = twisted_derivatives(F, z, 1e-5);
            CHECK(std::abs(d1 + std::conj(z) * F(z)) < 1e-8);
            CHECK(std::abs(d2) < 1e-8);
        }
    }
}

TEST_CASE("simulator: zero signal and zero noise gives the zero field") {
    SimConfig cfg;
    cfg.L = 1.0;
    cfg.delta = 1.0 / 8.0;
    cfg.sigma = 0.0;
    cfg.pad_steps = 2;
    const ComplexField f = simulate_field(cfg);
    for (const Complex& v : f.values()) CHECK(v == Complex{0.0, 0.0});
}

TEST_CASE("simulator determinism: identical seeds give identical bits") {
    SimConfig cfg;
    cfg.L = 1.0;
    cfg.delta = 1.0 / 16.0;
    cfg.sigma = 1.0;
    cfg.pad_steps = 2;
    cfg.seed = 99;
    setenv("PJ_WORKERS", "1", 1);
    const ComplexField a = simulate_field(cfg);
    setenv("PJ_WORKERS", "3", 1);
    const ComplexField b = simulate_field(cfg);
    unsetenv("PJ_WORKERS");
    REQUIRE(a.values().size() == b.values().size());
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        CHECK(a.values()[i].real() == b.values()[i].real());
        CHECK(a.values()[i].imag() == b.values()[i].imag());
    }
    cfg.seed = 100;
    const ComplexField c = simulate_field(cfg);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        if (a.values()[i] != c.values()[i]) any_diff = true;
    }
    CHECK(any_diff);
}

TEST_CASE("fast transform equals the direct triple-loop sum") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto b = philox::block(61, trial, 0);
        SimConfig cfg;
        cfg.delta = 1.0 / (4 << (b[0] % 3));  // 1/4, 1/8, 1/16
        const int n = 2 + static_cast<int>(b[1] % 3);
        cfg.L = n * cfg.delta * 4.0;  // small domains
        cfg.sigma = (b[2] & 1) ? 1.0 : 0.0;
        cfg.seed = b[3];
        cfg.pad_steps = static_cast<int>(b[2] % 3);
        if (trial % 2 == 0) {
            cfg.signal = [](double t) { return Complex{std::exp(-t * t), 0.1 * t}; };
        }
        if (cfg.sigma == 0.0 && !cfg.signal) cfg.sigma = 1.0;
        const ComplexField fast = simulate_field(cfg);
        const ComplexField direct = simulate_field_direct(cfg);
        double max_rel = 0.0;
        double scale = 0.0;
        for (const Complex& v : direct.values()) scale = std::max(scale, std::abs(v));
        for (std::size_t i = 0; i < fast.values().size(); ++i) {
            max_rel = std::max(max_rel,
                               std::abs(fast.values()[i] - direct.values()[i]) / scale);
        }
        CAPTURE(trial);
        CHECK(max_rel < 1e-10);
    }
}

TEST_CASE("simulator is linear in the signal") {
    SimConfig base;
    base.L = 1.0;
    base.delta = 1.0 / 16.0;
    base.sigma = 0.0;
    base.pad_steps = 1;
    const auto u = [](double t) { return Complex{std::exp(-0.5 * t * t), 0.0}; };
    const auto v = [](double t) { return Complex{t * std::exp(-t * t), 0.2}; };
    const Complex a{1.25, -0.5};
    const Complex bb{-0.75, 2.0};

    SimConfig cu = base, cv = base, cw = base;
    cu.signal = u;
    cv.signal = v;
    cw.signal = [&](double t) { return a * u(t) + bb * v(t); };
    const ComplexField fu = simulate_field(cu);
    const ComplexField fv = simulate_field(cv);
    const ComplexField fw = simulate_field(cw);
    double scale = 0.0;
    for (const Complex& val : fw.values()) scale = std::max(scale, std::abs(val));
    for (std::size_t i = 0; i < fw.values().size(); ++i) {
        const Complex lin = a * fu.values()[i] + bb * fv.values()[i];
        CHECK(std::abs(fw.values()[i] - lin) <= 1e-12 * std::max(1.0, scale));
    }
}

TEST_CASE("sigma-zero gaussian field reproduces the GEF kernel") {
    // signal = window = 2^{1/4} e^{-pi t^2}; the field must approximate
    // e^{-|z|^2/2} on |z|_inf <= 2 (Gaussian-window closed form)
    SimConfig cfg;
    cfg.L = 4.0;
    cfg.delta = 1.0 / 32.0;
    cfg.sigma = 0.0;
    cfg.window = WindowSpec::gauss_pi();
    cfg.signal = [](double t) {
        return Complex{1.1892071150027210667 * std::exp(-std::numbers::pi * t * t), 0.0};
    };
    const ComplexField f = simulate_field(cfg);
    double worst = 0.0;
    const int lim = static_cast<int>(2.0 / cfg.delta);
    for (int j = -lim; j <= lim; ++j) {
        for (int k = -lim; k <= lim; ++k) {
            const Complex z = coord({k, j}, cfg.delta);
            worst = std::max(worst, std::abs(f.at({k, j}) - std::exp(-0.5 * std::norm(z))));
        }
    }
    CHECK(worst <= 1e-3);
}

TEST_CASE("sigma-zero hermite-1 field matches the closed-form signal transform") {
    SimConfig cfg;
    cfg.L = 4.0;
    cfg.delta = 1.0 / 32.0;
    cfg.sigma = 0.0;
    cfg.window = WindowSpec::hermite1();
    cfg.signal = [](double t) { return Complex{std::exp(-0.5 * t * t), 0.0}; };
    const ComplexField f = simulate_field(cfg);
    double worst = 0.0;
    const int lim = static_cast<int>(2.0 / cfg.delta);
    for (int j = -lim; j <= lim; ++j) {
        for (int k = -lim; k <= lim; ++k) {
            const Complex z = coord({k, j}, cfg.delta);
            worst = std::max(worst,
                             std::abs(f.at({k, j}) - gaussian_signal_hermite1_transform(z, 1.0)));
        }
    }
    CHECK(worst <= 1e-3);
}

TEST_CASE("empirical covariance approaches the kernel") {
    SimConfig cfg;
    cfg.L = 2.0;
    cfg.delta = 1.0 / 8.0;
    cfg.sigma = 1.0;
    cfg.window = WindowSpec::gauss_pi();
    cfg.seed = 7;
    const std::vector<std::pair<Complex, Complex>> pairs = {
        {{0.0, 0.0}, {0.0, 0.0}}, {{1.0, 0.0}, {0.0, 0.0}}, {{1.0, 1.0}, {1.0, 0.0}}};
    const auto res = empirical_covariance(cfg, pairs, 300, TwistedKernel::gaussian_gef());
    REQUIRE(res.size() == 3);
    // 5-sigma Monte-Carlo bound at 300 realizations
    for (const auto& r : res) CHECK(r.deviation < 5.0 / std::sqrt(300.0));
    // reference values from the closed form
    CHECK(res[1].reference.real() == Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(std::abs(res[2].reference -
                   std::exp(-0.5) * std::exp(Complex{0.0, 1.0})) < 1e-12);
    SimConfig bad = cfg;
    bad.sigma = 0.5;
    CHECK_THROWS_AS(empirical_covariance(bad, pairs, 2), std::invalid_argument);
}
