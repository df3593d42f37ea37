// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "phasejumps/detect.hpp"
#include "phasejumps/field.hpp"

namespace pj {

struct Rect {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
    double area() const { return (x1 - x0) * (y1 - y0); }
    bool contains(Complex z) const {  // closed rectangle
        return z.real() >= x0 && z.real() <= x1 && z.imag() >= y0 && z.imag() <= y1;
    }
};

/// Nested counting boxes: R0 = [-step/2, step/2]^2, then one-side extensions
/// by `step` cycling East, North, West, South.
std::vector<Rect> spiral_regions(double step, int count);

/// First intensity of charged zeros,
///   rho(z) = (1/(pi sigma^2)) e^{-|F1|^2/sigma^2}
///            (|D1 F1 - c1 F1|^2 - |D2 F1 - c2 F1|^2 + sigma^2),
/// with the twisted derivatives taken by central differences of step h.
/// Throws std::invalid_argument when sigma = 0.
double first_intensity_charge(const std::function<Complex(Complex)>& F1, double sigma, Complex c1,
                              Complex c2, Complex z, double h);

/// Integral of rho over the rectangle by adaptive 2-D quadrature.
double expected_charge(const Rect& region, const std::function<double(Complex)>& rho,
                       double rel_tol = 1e-6);

struct RegionStat {
    Rect region;
    double area = 0.0;
    double mean_charge = 0.0;
    double se_charge = 0.0;
    double mean_count = 0.0;
    double se_count = 0.0;
    std::optional<double> theory_charge;
};

struct ChargeReport {
    int realizations = 0;
    std::vector<RegionStat> rows;
};

/// Per-region mean & standard error of the net charge and the zero count
/// over the realizations; theory column filled from rho when provided.
ChargeReport empirical_curves(const std::vector<std::vector<ChargedZero>>& zero_sets,
                              const std::vector<Rect>& regions,
                              const std::function<double(Complex)>& rho = {});

struct MatchPair {
    std::size_t ref_index = 0;
    std::size_t comp_index = 0;
    double dist = 0.0;  // l_inf
    bool charge_agree = false;
};

struct MatchResult {
    std::vector<MatchPair> pairs;
    std::vector<std::size_t> unmatched_reference;
    std::vector<std::size_t> unmatched_computed;
    double total_dist = 0.0;
    std::size_t charge_agreements = 0;
};

/// Maximum-cardinality matching on the graph {(r, c) : |r - c|_inf <=
/// threshold}; among maximum matchings, minimal total l_inf distance, ties
/// broken toward earlier reference indices. Injective both ways.
MatchResult match_zeros(const std::vector<ChargedZero>& reference,
                        const std::vector<ChargedZero>& computed, double threshold);

}  // namespace pj
