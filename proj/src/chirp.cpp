// SPDX-License-Identifier: Apache-2.0
#include "chirp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pj::detail {

namespace {

using Cx = std::complex<double>;

// exp(i*phase) with the phase accumulated in extended precision; the raw
// angles grow like L^2 and a double product would cost ~3 digits there.
Cx unit_phase(long double phase) {
    const long double red = std::remainder(phase, 2.0L * std::numbers::pi_v<long double>);
    return {static_cast<double>(std::cos(red)), static_cast<double>(std::sin(red))};
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace

void fft_pow2(std::vector<Cx>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("fft_pow2: size must be a power of two");
    }
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const long double ang =
            (inverse ? 2.0L : -2.0L) * std::numbers::pi_v<long double> / static_cast<long double>(len);
        const Cx wlen{static_cast<double>(std::cos(ang)), static_cast<double>(std::sin(ang))};
        for (std::size_t i = 0; i < n; i += len) {
            Cx w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Cx u = a[i + k];
                const Cx t = a[i + k + len / 2] * w;
                a[i + k] = u + t;
                a[i + k + len / 2] = u - t;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (Cx& x : a) x *= inv;
    }
}

std::vector<Cx> chirp_dft(const std::vector<Cx>& x, double omega, long long j0,
                          std::size_t count, long long t0) {
    const std::size_t m = x.size();
    if (m == 0 || count == 0) return std::vector<Cx>(count, Cx{0.0, 0.0});
    const long double w = static_cast<long double>(omega);

    // S[p] = e^{i w j0 t0} e^{i w p t0} sum_q (x_q e^{i w j0 q}) e^{i w p q}
    std::vector<Cx> a(m);
    for (std::size_t q = 0; q < m; ++q) {
        const long double lq = static_cast<long double>(q);
        // fold the inner chirp e^{i w q^2/2} of Bluestein in directly
        a[q] = x[q] * unit_phase(w * static_cast<long double>(j0) * lq + 0.5L * w * lq * lq);
    }
    const std::size_t p2 = next_pow2(count + m - 1);
    std::vector<Cx> fa(p2, Cx{0.0, 0.0});
    std::vector<Cx> fb(p2, Cx{0.0, 0.0});
    for (std::size_t q = 0; q < m; ++q) fa[q] = a[q];
    // kernel b[d] = e^{-i w d^2 / 2} for d = p - q in [-(m-1), count-1]
    for (long long d = -(static_cast<long long>(m) - 1); d < static_cast<long long>(count); ++d) {
        const long double ld = static_cast<long double>(d);
        const std::size_t idx = static_cast<std::size_t>((d % static_cast<long long>(p2) + p2) %
                                                         static_cast<long long>(p2));
        fb[idx] = unit_phase(-0.5L * w * ld * ld);
    }
    fft_pow2(fa, false);
    fft_pow2(fb, false);
    for (std::size_t i = 0; i < p2; ++i) fa[i] *= fb[i];
    fft_pow2(fa, true);

    std::vector<Cx> out(count);
    for (std::size_t p = 0; p < count; ++p) {
        const long double lp = static_cast<long double>(p);
        const long double outer = w * static_cast<long double>(j0) * static_cast<long double>(t0) +
                                  w * lp * static_cast<long double>(t0) + 0.5L * w * lp * lp;
        out[p] = fa[p] * unit_phase(outer);
    }
    return out;
}

}  // namespace pj::detail
