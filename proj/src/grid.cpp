// SPDX-License-Identifier: Apache-2.0
#include "phasejumps/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pj {

namespace {

// Snap r to the nearest integer when the distance is within a few ulps,
// then take the ceiling. Protects cases like 1/sqrt(0.01) landing a hair
// above 10.
long long guarded_ceil(double r) {
    const double nearest = std::nearbyint(r);
    const double ulp = std::ldexp(std::abs(r), -52);
    if (std::abs(r - nearest) <= 4.0 * ulp) return static_cast<long long>(nearest);
    return static_cast<long long>(std::ceil(r));
}

}  // namespace

long long exact_ratio(double num, double den, const char* what) {
    const double r = num / den;
    const double nearest = std::nearbyint(r);
    const double ulp = std::ldexp(std::abs(r) + 1.0, -50);
    if (nearest < 1.0 || std::abs(r - nearest) > ulp) {
        throw std::invalid_argument(std::string(what) + " = " + std::to_string(num) + "/" +
                                    std::to_string(den) + " is not a positive integer");
    }
    return static_cast<long long>(nearest);
}

CoarseSpacings coarse_spacings(double delta) {
    if (!(delta > 0.0) || delta > 1.0) {
        throw std::invalid_argument("coarse_spacings: delta must satisfy 0 < delta <= 1");
    }
    const double root = 1.0 / std::sqrt(delta);
    CoarseSpacings out;
    out.star_steps = static_cast<int>(2 * guarded_ceil(root / 4.0));
    out.dstar_steps = static_cast<int>(guarded_ceil(root));
    out.star = static_cast<double>(out.star_steps) * delta;
    out.dstar = static_cast<double>(out.dstar_steps) * delta;
    return out;
}

GridSpec::GridSpec(double domain_half_width, double delta)
    : L_(domain_half_width), delta_(delta) {
    if (!(delta > 0.0) || delta > 1.0) {
        throw std::invalid_argument("GridSpec: delta must satisfy 0 < delta <= 1");
    }
    if (!(domain_half_width > 0.0)) {
        throw std::invalid_argument("GridSpec: domain half-width must be positive");
    }
    half_steps_ = static_cast<int>(exact_ratio(domain_half_width, delta, "L/delta"));
    coarse_ = coarse_spacings(delta);
}

std::vector<GridPoint> box_boundary(int half_side_steps) {
    if (half_side_steps < 1) {
        throw std::invalid_argument("box_boundary: half_side_steps must be >= 1");
    }
    const int h = half_side_steps;
    std::vector<GridPoint> pts;
    pts.reserve(static_cast<std::size_t>(8) * h);
    for (int j = -h; j <= h; ++j) {
        for (int k = -h; k <= h; ++k) {
            if (std::max(std::abs(k), std::abs(j)) == h) pts.push_back({k, j});
        }
    }
    std::sort(pts.begin(), pts.end(), [](GridPoint a, GridPoint b) {
        return std::atan2(static_cast<double>(a.j), static_cast<double>(a.k)) <
               std::atan2(static_cast<double>(b.j), static_cast<double>(b.k));
    });
    // Distinct boundary points on one ray cannot share |.|_inf, so argument
    // ties are impossible.
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (std::atan2(static_cast<double>(pts[i].j), static_cast<double>(pts[i].k)) ==
            std::atan2(static_cast<double>(pts[i - 1].j), static_cast<double>(pts[i - 1].k))) {
            throw std::logic_error("box_boundary: argument tie on square boundary");
        }
    }
    return pts;
}

std::vector<GridPoint> enumerate_interior(const GridSpec& spec, bool coarse) {
    int stride = 1;
    int n = spec.half_steps();
    if (coarse) {
        stride = spec.star_steps();
        if (spec.half_steps() % stride != 0) {
            throw std::invalid_argument("enumerate_interior: L/delta_star is not an integer");
        }
        n = spec.half_steps() / stride;
    }
    std::vector<GridPoint> pts;
    pts.reserve(static_cast<std::size_t>(2 * n + 1) * (2 * n + 1));
    for (int j = -n; j <= n; ++j) {
        for (int k = -n; k <= n; ++k) {
            pts.push_back({k * stride, j * stride});
        }
    }
    return pts;
}

}  // namespace pj
