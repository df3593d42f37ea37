// SPDX-License-Identifier: Apache-2.0
#include "phasejumps/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "chirp.hpp"
#include "phasejumps/parallel.hpp"
#include "phasejumps/rng.hpp"

namespace pj {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

struct SimPlan {
    GridSpec spec;        // caller's (L, delta)
    int pad = 0;
    int n_tot = 0;        // L/delta + pad
    double L_tot = 0.0;   // n_tot * delta
    double omega = 0.0;   // 2 sqrt(pi) delta^2
    std::vector<Complex> coeff;  // delta f1(t delta) + sqrt(delta) sigma xi_t, t = -n_tot..n_tot-1
    std::vector<Complex> gl;     // normalized periodized window on the t grid, resolved per k
    double win_scale = 1.0;
};

// 2L-periodization of the window argument.
double wrap(double s, double L) {
    const double two_l = 2.0 * L;
    double r = s - two_l * std::floor((s + L) / two_l);
    if (r >= L) r -= two_l;  // guard the floor landing exactly on L
    return r;
}

SimPlan make_plan(const SimConfig& cfg) {
    SimPlan plan{GridSpec(cfg.L, cfg.delta), 0, 0, 0.0, 0.0, {}, {}, 1.0};
    if (cfg.pad_steps < 0) throw std::invalid_argument("simulate_field: pad_steps must be >= 0");
    if (cfg.sigma < 0.0) throw std::invalid_argument("simulate_field: sigma must be >= 0");
    plan.pad = cfg.pad_steps;
    plan.n_tot = plan.spec.half_steps() + plan.pad;
    plan.L_tot = static_cast<double>(plan.n_tot) * cfg.delta;
    plan.omega = 2.0 * kSqrtPi * cfg.delta * cfg.delta;

    const int n = plan.n_tot;
    const double delta = cfg.delta;

    // Discrete L^2 normalization over one period: sum_t delta |g(t delta)|^2 = 1.
    if (cfg.window.normalize_l2) {
        double s = 0.0;
        for (int t = -n; t < n; ++t) {
            s += delta * std::norm(cfg.window.raw(delta * t));
        }
        if (!(s > 0.0)) throw std::invalid_argument("simulate_field: window has zero energy");
        plan.win_scale = 1.0 / std::sqrt(s);
    }

    plan.coeff.resize(static_cast<std::size_t>(2 * n));
    const double noise_amp = std::sqrt(delta) * cfg.sigma;
    for (int t = -n; t < n; ++t) {
        const std::size_t q = static_cast<std::size_t>(t + n);
        Complex c{0.0, 0.0};
        if (cfg.signal) c = delta * cfg.signal(delta * t);
        if (cfg.sigma > 0.0) c += noise_amp * complex_normal(cfg.seed, 0, q);
        plan.coeff[q] = c;
    }
    return plan;
}

Complex window_at(const SimConfig& cfg, const SimPlan& plan, double s) {
    return plan.win_scale * cfg.window.raw(wrap(s, plan.L_tot));
}

Complex prefactor(double delta, long long k, long long j) {
    const double phase = -(delta * delta) * static_cast<double>(k * j);
    return {std::cos(phase), std::sin(phase)};
}

}  // namespace

ComplexField simulate_field(const SimConfig& cfg) {
    const SimPlan plan = make_plan(cfg);
    const int n = plan.n_tot;
    const int side = 2 * n + 1;
    const double delta = cfg.delta;
    std::vector<Complex> values(static_cast<std::size_t>(side) * side);

    parallel_for(static_cast<std::size_t>(side), [&](std::size_t col) {
        const int k = static_cast<int>(col) - n;
        const double uk = delta * static_cast<double>(k) / kSqrtPi;
        std::vector<Complex> w(plan.coeff.size());
        for (int t = -n; t < n; ++t) {
            const std::size_t q = static_cast<std::size_t>(t + n);
            w[q] = plan.coeff[q] * std::conj(window_at(cfg, plan, delta * t - uk));
        }
        const auto s =
            detail::chirp_dft(w, plan.omega, /*j0=*/-n, static_cast<std::size_t>(side),
                              /*t0=*/-n);
        for (int j = -n; j <= n; ++j) {
            values[static_cast<std::size_t>(j + n) * side + col] =
                prefactor(delta, k, j) * s[static_cast<std::size_t>(j + n)];
        }
    });
    return ComplexField(plan.spec, plan.pad, std::move(values));
}

ComplexField simulate_field_direct(const SimConfig& cfg) {
    const SimPlan plan = make_plan(cfg);
    const int n = plan.n_tot;
    const int side = 2 * n + 1;
    const double delta = cfg.delta;
    std::vector<Complex> values(static_cast<std::size_t>(side) * side);

    for (int k = -n; k <= n; ++k) {
        const double uk = delta * static_cast<double>(k) / kSqrtPi;
        std::vector<Complex> w(plan.coeff.size());
        for (int t = -n; t < n; ++t) {
            w[static_cast<std::size_t>(t + n)] =
                plan.coeff[static_cast<std::size_t>(t + n)] *
                std::conj(window_at(cfg, plan, delta * t - uk));
        }
        for (int j = -n; j <= n; ++j) {
            Complex acc{0.0, 0.0};
            for (int t = -n; t < n; ++t) {
                const long double phase = static_cast<long double>(plan.omega) *
                                          static_cast<long double>(j) *
                                          static_cast<long double>(t);
                const long double red =
                    std::remainder(phase, 6.283185307179586476925286766559L);
                acc += w[static_cast<std::size_t>(t + n)] *
                       Complex{static_cast<double>(std::cos(red)),
                               static_cast<double>(std::sin(red))};
            }
            values[static_cast<std::size_t>(j + n) * side + static_cast<std::size_t>(k + n)] =
                prefactor(delta, k, j) * acc;
        }
    }
    return ComplexField(plan.spec, plan.pad, std::move(values));
}

std::vector<CovarSample> empirical_covariance(
    const SimConfig& cfg, const std::vector<std::pair<Complex, Complex>>& pairs,
    int n_realizations, const TwistedKernel& kernel) {
    if (cfg.sigma != 1.0) {
        throw std::invalid_argument("empirical_covariance: requires sigma = 1");
    }
    if (cfg.signal) {
        throw std::invalid_argument("empirical_covariance: requires zero signal");
    }
    if (n_realizations < 1) {
        throw std::invalid_argument("empirical_covariance: need at least one realization");
    }
    GridSpec spec(cfg.L, cfg.delta);
    auto to_gp = [&](Complex z) {
        const GridPoint gp{static_cast<int>(std::llround(z.real() / cfg.delta)),
                           static_cast<int>(std::llround(z.imag() / cfg.delta))};
        const Complex back = coord(gp, cfg.delta);
        if (std::abs(back - z) > 1e-9) {
            throw std::invalid_argument("empirical_covariance: point is not on the grid");
        }
        return gp;
    };
    std::vector<std::pair<GridPoint, GridPoint>> gps;
    gps.reserve(pairs.size());
    for (const auto& [z, w] : pairs) gps.emplace_back(to_gp(z), to_gp(w));

    // One product per (realization, pair); reduced sequentially afterwards so
    // the fold order never depends on scheduling.
    std::vector<std::vector<Complex>> prod(static_cast<std::size_t>(n_realizations));
    parallel_for(static_cast<std::size_t>(n_realizations), [&](std::size_t r) {
        SimConfig c = cfg;
        c.seed = derive_seed(cfg.seed, r);
        const ComplexField f = simulate_field(c);
        std::vector<Complex> row(pairs.size());
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            row[p] = f.at(gps[p].first) * std::conj(f.at(gps[p].second));
        }
        prod[r] = std::move(row);
    });

    std::vector<CovarSample> out(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;  // Kahan, re/im
        for (int r = 0; r < n_realizations; ++r) {
            const Complex v = prod[static_cast<std::size_t>(r)][p];
            double y = v.real() - cr;
            double t = sr + y;
            cr = (t - sr) - y;
            sr = t;
            y = v.imag() - ci;
            t = si + y;
            ci = (t - si) - y;
            si = t;
        }
        const Complex est{sr / n_realizations, si / n_realizations};
        const auto& [z, w] = pairs[p];
        const double im = z.imag() * w.real() - z.real() * w.imag();  // Im(z conj(w))
        const Complex ref = kernel(z - w) * Complex{std::cos(im), std::sin(im)};
        out[p] = {z, w, est, ref, std::abs(est - ref)};
    }
    return out;
}

std::vector<CovarSample> empirical_covariance(
    const SimConfig& cfg, const std::vector<std::pair<Complex, Complex>>& pairs,
    int n_realizations) {
    return empirical_covariance(cfg, pairs, n_realizations,
                                TwistedKernel::from_window(cfg.window));
}

}  // namespace pj
