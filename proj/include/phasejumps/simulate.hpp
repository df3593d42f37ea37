// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "phasejumps/field.hpp"
#include "phasejumps/kernel.hpp"
#include "phasejumps/window.hpp"

namespace pj {

using SignalFn = std::function<Complex(double)>;

/// Monte-Carlo input model F = F1 + sigma*F0 discretized per the STFT
/// change of variables. pad_steps enlarges the simulated box so downstream
/// detectors find their boundary samples (the formula's domain length is
/// L + pad_steps*delta).
struct SimConfig {
    double L = 1.0;
    double delta = 1.0 / 32.0;
    double sigma = 1.0;
    SignalFn signal;  // f1; empty means 0
    WindowSpec window = WindowSpec::hermite1();
    std::uint64_t seed = 0;
    int pad_steps = 0;
};

/// Samples c_{j,k} = e^{-i delta^2 k j} sum_t [delta f1(t delta) +
/// sqrt(delta) sigma xi_t] conj(gL(delta(t - k/sqrt(pi)))) e^{i 2 sqrt(pi)
/// delta^2 j t} over t = -n..n-1, where gL is the 2L'-periodization of the
/// discretely L^2-normalized window and xi_t are i.i.d. standard complex
/// normals drawn from a counter-based stream keyed by (seed, t). The inner
/// sums run through a Bluestein chirp transform. Deterministic per
/// (seed, config), independent of worker count.
ComplexField simulate_field(const SimConfig& cfg);

/// Brute-force triple-loop evaluation of the same coefficients; the oracle
/// for the fast transform (must agree within 1e-10 relative).
ComplexField simulate_field_direct(const SimConfig& cfg);

struct CovarSample {
    Complex z, w;
    Complex estimate;
    Complex reference;
    double deviation = 0.0;
};

/// Averages F(z) conj(F(w)) over n_realizations independent seeds derived
/// from cfg.seed and compares against H(z-w) e^{i Im(z conj(w))}. Requires
/// sigma = 1 and no signal; z, w must lie on the simulated grid.
std::vector<CovarSample> empirical_covariance(const SimConfig& cfg,
                                              const std::vector<std::pair<Complex, Complex>>& pairs,
                                              int n_realizations, const TwistedKernel& kernel);

/// Overload deriving the reference kernel from the window (closed form is
/// available only through the explicit kernel argument).
std::vector<CovarSample> empirical_covariance(const SimConfig& cfg,
                                              const std::vector<std::pair<Complex, Complex>>& pairs,
                                              int n_realizations);

}  // namespace pj
