// SPDX-License-Identifier: Apache-2.0
#include "phasejumps/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pj {

namespace {

using Cx = std::complex<double>;
using Fn1 = std::function<Cx(double)>;
using Fn2 = std::function<double(double, double)>;

Cx simpson(double a, double b, Cx fa, Cx fm, Cx fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

Cx adapt_1d(const Fn1& f, double a, double m, double b, Cx fa, Cx fm, Cx fb, Cx whole,
            double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const Cx flm = f(lm);
    const Cx frm = f(rm);
    const Cx left = simpson(a, m, fa, flm, fm);
    const Cx right = simpson(m, b, fm, frm, fb);
    const Cx sum = left + right;
    if (std::abs(sum - whole) <= 15.0 * tol) return sum + (sum - whole) / 15.0;
    if (depth <= 0) {
        throw std::runtime_error("integrate_1d: depth exhausted, residual " +
                                 std::to_string(std::abs(sum - whole) / 15.0));
    }
    return adapt_1d(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt_1d(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// 5-point Gauss-Legendre on [-1, 1].
constexpr double kNode[5] = {-0.90617984593866399280, -0.53846931010568309104, 0.0,
                             0.53846931010568309104, 0.90617984593866399280};
constexpr double kWeight[5] = {0.23692688505618908751, 0.47862867049936646804,
                               0.56888888888888888889, 0.47862867049936646804,
                               0.23692688505618908751};

struct Quad2DState {
    const Fn2& f;
    long evals = 0;
    double unresolved = 0.0;
};

double gl5x5(Quad2DState& st, double x0, double y0, double x1, double y1) {
    const double cx = 0.5 * (x0 + x1), hx = 0.5 * (x1 - x0);
    const double cy = 0.5 * (y0 + y1), hy = 0.5 * (y1 - y0);
    double sum = 0.0;
    for (int iy = 0; iy < 5; ++iy) {
        const double y = cy + hy * kNode[iy];
        double row = 0.0;
        for (int ix = 0; ix < 5; ++ix) {
            row += kWeight[ix] * st.f(cx + hx * kNode[ix], y);
        }
        sum += kWeight[iy] * row;
    }
    st.evals += 25;
    return sum * hx * hy;
}

double refine_2d(Quad2DState& st, double x0, double y0, double x1, double y1, double parent,
                 double tol, int depth) {
    const double mx = 0.5 * (x0 + x1);
    const double my = 0.5 * (y0 + y1);
    const double c0 = gl5x5(st, x0, y0, mx, my);
    const double c1 = gl5x5(st, mx, y0, x1, my);
    const double c2 = gl5x5(st, x0, my, mx, y1);
    const double c3 = gl5x5(st, mx, my, x1, y1);
    const double sum = c0 + c1 + c2 + c3;
    const double err = std::abs(sum - parent);
    if (err <= tol) return sum;
    if (depth <= 0 || st.evals > 8'000'000) {
        st.unresolved += err;
        return sum;
    }
    const double q = 0.25 * tol;
    return refine_2d(st, x0, y0, mx, my, c0, q, depth - 1) +
           refine_2d(st, mx, y0, x1, my, c1, q, depth - 1) +
           refine_2d(st, x0, my, mx, y1, c2, q, depth - 1) +
           refine_2d(st, mx, my, x1, y1, c3, q, depth - 1);
}

}  // namespace

Cx integrate_1d(const Fn1& f, double a, double b, double tol) {
    // Pre-split into uniform panels so a localized integrand cannot slip
    // between the probe points of a single Simpson estimate.
    constexpr int kPanels = 16;
    const double h = (b - a) / kPanels;
    Cx total{0.0, 0.0};
    for (int i = 0; i < kPanels; ++i) {
        const double pa = a + i * h;
        const double pb = i + 1 == kPanels ? b : pa + h;
        const double pm = 0.5 * (pa + pb);
        const Cx fa = f(pa), fm = f(pm), fb = f(pb);
        const Cx whole = simpson(pa, pb, fa, fm, fb);
        total += adapt_1d(f, pa, pm, pb, fa, fm, fb, whole, tol / kPanels, 44);
    }
    return total;
}

double integrate_2d(const Fn2& f, const QuadRect& r, double rel_tol) {
    Quad2DState st{f};
    const double rough = gl5x5(st, r.x0, r.y0, r.x1, r.y1);
    const double area = std::abs((r.x1 - r.x0) * (r.y1 - r.y0));
    const double abs_tol = std::max(rel_tol * std::abs(rough), 1e-12 * std::max(1.0, area));
    double result = refine_2d(st, r.x0, r.y0, r.x1, r.y1, rough, abs_tol, 22);
    if (st.unresolved > abs_tol) {
        const double achieved =
            std::abs(result) > 0.0 ? st.unresolved / std::abs(result) : st.unresolved;
        throw std::runtime_error("integrate_2d: did not converge, achieved relative tolerance " +
                                 std::to_string(achieved));
    }
    return result;
}

}  // namespace pj
