// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace pj::detail {

/// In-place iterative radix-2 FFT; a.size() must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse);

/// Chirp transform S[p] = sum_{q=0}^{M-1} x[q] * exp(i*omega*(j0+p)*(t0+q))
/// for p = 0..count-1, via Bluestein's reduction to a convolution. Exact
/// frequency step omega is arbitrary (no lattice assumption).
std::vector<std::complex<double>> chirp_dft(const std::vector<std::complex<double>>& x,
                                            double omega, long long j0, std::size_t count,
                                            long long t0);

}  // namespace pj::detail
