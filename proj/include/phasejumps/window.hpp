// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace pj {

/// Analysis window for the STFT simulator. Hermite0/Hermite1 are
/// e^{-t^2/2} and t e^{-t^2/2} before normalization; custom windows carry a
/// callable (the simulator needs g at off-lattice points). Discrete L^2
/// normalization happens inside the simulator for the configured (L, delta).
struct WindowSpec {
    enum class Kind { hermite0, hermite1, custom };

    Kind kind = Kind::hermite1;
    std::function<std::complex<double>(double)> custom_fn;
    std::string label = "hermite1";
    bool normalize_l2 = true;

    /// Unnormalized window value.
    std::complex<double> raw(double t) const;

    static WindowSpec hermite0();
    static WindowSpec hermite1();
    /// The pi-normalized Gaussian 2^{1/4} e^{-pi t^2} (unit L^2 norm); the
    /// window whose twisted kernel is the closed form e^{-|z|^2/2}.
    static WindowSpec gauss_pi();
    static WindowSpec custom(std::function<std::complex<double>(double)> fn,
                             std::string label = "custom");
    /// Uniform samples on [t0, t0 + (n-1)*dt], linearly interpolated and zero
    /// outside; the CLI's `--window file` route.
    static WindowSpec from_samples(std::vector<std::complex<double>> samples, double t0,
                                   double dt);
};

}  // namespace pj
