// SPDX-License-Identifier: Apache-2.0
#include "phasejumps/kernel.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "phasejumps/quadrature.hpp"

namespace pj {

namespace {

using Cx = std::complex<double>;

constexpr double kSqrtPi = 1.7724538509055160273;

double window_l2_norm(const WindowSpec& g) {
    const Cx n2 = integrate_1d([&](double t) { return Cx{std::norm(g.raw(t)), 0.0}; }, -14.0,
                               14.0, 1e-12);
    return std::sqrt(n2.real());
}

}  // namespace

Cx stft_quadrature(const std::function<Cx(double)>& f, const WindowSpec& g, double x, double xi,
                   double tol) {
    const double scale = g.normalize_l2 ? 1.0 / window_l2_norm(g) : 1.0;
    const double a = std::min(0.0, x) - 12.0;
    const double b = std::max(0.0, x) + 12.0;
    const Cx tau{0.0, -2.0 * 3.141592653589793238 * xi};
    return scale * integrate_1d(
                       [&](double t) { return f(t) * std::conj(g.raw(t - x)) * std::exp(tau * t); },
                       a, b, tol);
}

TwistedKernel TwistedKernel::gaussian_gef() {
    TwistedKernel k;
    k.form_ = ClosedForm::gaussian_gef;
    k.eval_ = [](Cx z) { return Cx{std::exp(-0.5 * std::norm(z)), 0.0}; };
    return k;
}

TwistedKernel TwistedKernel::from_window(WindowSpec window, double quad_tol) {
    struct State {
        std::mutex mu;
        std::map<std::pair<double, double>, Cx> cache;
        WindowSpec win;
        double norm2 = 1.0;  // ||g||_2^2
    };
    auto st = std::make_shared<State>();
    st->win = std::move(window);
    st->win.normalize_l2 = false;  // raw in both slots, divide by ||g||^2 once
    const double n = window_l2_norm(st->win);
    st->norm2 = n * n;
    TwistedKernel k;
    k.form_ = ClosedForm::none;
    k.eval_ = [st, quad_tol](Cx z) {
        {
            std::scoped_lock lock(st->mu);
            const auto it = st->cache.find({z.real(), z.imag()});
            if (it != st->cache.end()) return it->second;
        }
        const double x = z.real(), y = z.imag();
        const Cx v = stft_quadrature([&](double t) { return st->win.raw(t); }, st->win,
                                     x / kSqrtPi, -y / kSqrtPi, quad_tol) /
                     st->norm2;
        const Cx h = std::exp(Cx{0.0, -x * y}) * v;
        std::scoped_lock lock(st->mu);
        st->cache.insert({{z.real(), z.imag()}, h});
        return h;
    };
    return k;
}

std::pair<Cx, Cx> TwistedKernel::c_derivatives(double h) const {
    const Cx dx = (eval_(Cx{h, 0.0}) - eval_(Cx{-h, 0.0})) / (2.0 * h);
    const Cx dy = (eval_(Cx{0.0, h}) - eval_(Cx{0.0, -h})) / (2.0 * h);
    const Cx d = 0.5 * (dx - Cx{0.0, 1.0} * dy);
    const Cx dbar = 0.5 * (dx + Cx{0.0, 1.0} * dy);
    return {d, dbar};
}

std::pair<Cx, Cx> twisted_derivatives(const std::function<Cx(Cx)>& F, Cx z, double h) {
    const Cx f0 = F(z);
    const Cx dx = (F(z + Cx{h, 0.0}) - F(z - Cx{h, 0.0})) / (2.0 * h);
    const Cx dy = (F(z + Cx{0.0, h}) - F(z - Cx{0.0, h})) / (2.0 * h);
    const Cx d = 0.5 * (dx - Cx{0.0, 1.0} * dy);
    const Cx dbar = 0.5 * (dx + Cx{0.0, 1.0} * dy);
    return {d - 0.5 * std::conj(z) * f0, dbar + 0.5 * z * f0};
}

}  // namespace pj
