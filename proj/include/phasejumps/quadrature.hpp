// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>

namespace pj {

/// Adaptive Simpson quadrature of a complex integrand on [a, b] to absolute
/// tolerance tol. Throws std::runtime_error when the depth budget runs out.
std::complex<double> integrate_1d(const std::function<std::complex<double>(double)>& f, double a,
                                  double b, double tol);

struct QuadRect {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
};

/// Adaptive 2-D quadrature of a real integrand over a rectangle to relative
/// tolerance rel_tol (with a small absolute floor). Tensor Gauss-Legendre
/// with quadtree subdivision; throws std::runtime_error reporting the
/// achieved tolerance when it fails to converge.
double integrate_2d(const std::function<double(double, double)>& f, const QuadRect& r,
                    double rel_tol);

}  // namespace pj
