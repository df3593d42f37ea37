// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace pj {

/// Philox 4x32-10 counter-based generator (Salmon et al., SC 2011).
/// Stateless: every block is a pure function of (key, counter), so draws
/// keyed by (master seed, stream, index) are reproducible in any order
/// and across any number of workers.
namespace philox {

constexpr std::uint32_t kW32A = 0x9E3779B9u;
constexpr std::uint32_t kW32B = 0xBB67AE85u;
constexpr std::uint32_t kM4x32A = 0xD2511F53u;
constexpr std::uint32_t kM4x32B = 0xCD9E8D57u;

inline void round_once(std::array<std::uint32_t, 4>& ctr, std::array<std::uint32_t, 2>& key) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM4x32A) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM4x32B) * ctr[2];
    const std::array<std::uint32_t, 4> out = {
        static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
        static_cast<std::uint32_t>(p1),
        static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
        static_cast<std::uint32_t>(p0),
    };
    ctr = out;
    key[0] += kW32A;
    key[1] += kW32B;
}

/// One 128-bit block for counter (hi, lo) under a 64-bit key.
inline std::array<std::uint32_t, 4> block(std::uint64_t key, std::uint64_t ctr_hi,
                                          std::uint64_t ctr_lo) {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(ctr_lo), static_cast<std::uint32_t>(ctr_lo >> 32),
        static_cast<std::uint32_t>(ctr_hi), static_cast<std::uint32_t>(ctr_hi >> 32)};
    std::array<std::uint32_t, 2> k = {static_cast<std::uint32_t>(key),
                                      static_cast<std::uint32_t>(key >> 32)};
    for (int i = 0; i < 10; ++i) round_once(ctr, k);
    return ctr;
}

}  // namespace philox

/// Uniform double in (0,1) from 64 random bits (53-bit mantissa, offset by
/// half an ulp so 0 is never produced).
inline double bits_to_unit(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t u = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return (static_cast<double>(u >> 11) + 0.5) * 0x1p-53;
}

/// Standard complex normal (E|xi|^2 = 1), keyed by (seed, stream, index).
/// Modulus^2 is Exp(1) and the phase is uniform.
inline std::complex<double> complex_normal(std::uint64_t seed, std::uint64_t stream,
                                           std::uint64_t index) {
    const auto b = philox::block(seed, stream, index);
    const double u1 = bits_to_unit(b[0], b[1]);
    const double u2 = bits_to_unit(b[2], b[3]);
    const double r = std::sqrt(-std::log(u1));
    return {r * std::cos(6.283185307179586477 * u2), r * std::sin(6.283185307179586477 * u2)};
}

/// A 64-bit sub-seed for realization `index` of a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    const auto b = philox::block(master, 0x5eedull, index);
    return (static_cast<std::uint64_t>(b[0]) << 32) | b[1];
}

}  // namespace pj
