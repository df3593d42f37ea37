// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <utility>

#include "phasejumps/window.hpp"

namespace pj {

/// Twisted kernel H of the input model: E[F0(z) conj(F0(w))] = H(z-w) e^{i Im(z conj(w))}.
/// Either the Gaussian-window closed form e^{-|z|^2/2} or a quadrature-backed
/// evaluation of e^{-ixy} V_g g(x/sqrt(pi), -y/sqrt(pi)) for the window.
class TwistedKernel {
public:
    enum class ClosedForm { gaussian_gef, none };

    static TwistedKernel gaussian_gef();
    /// Numerical kernel for an arbitrary window; adaptive quadrature of
    /// V_g g to quad_tol, memoized per evaluation point.
    static TwistedKernel from_window(WindowSpec window, double quad_tol = 1e-9);

    std::complex<double> operator()(std::complex<double> z) const { return eval_(z); }
    ClosedForm closed_form() const { return form_; }

    /// c1 = dH(0), c2 = dbar H(0) by central differences (exactly 0 for
    /// real-valued kernels).
    std::pair<std::complex<double>, std::complex<double>> c_derivatives(double h = 1e-4) const;

private:
    ClosedForm form_ = ClosedForm::none;
    std::function<std::complex<double>(std::complex<double>)> eval_;
};

/// Short-time Fourier transform V_g f(x, xi) by adaptive quadrature.
std::complex<double> stft_quadrature(const std::function<std::complex<double>(double)>& f,
                                     const WindowSpec& g, double x, double xi, double tol = 1e-9);

/// Twisted derivatives D1 F = dF - (conj(z)/2) F and D2 F = dbar F + (z/2) F,
/// with central-difference Wirtinger derivatives of step h.
std::pair<std::complex<double>, std::complex<double>> twisted_derivatives(
    const std::function<std::complex<double>(std::complex<double>)>& F, std::complex<double> z,
    double h);

}  // namespace pj
