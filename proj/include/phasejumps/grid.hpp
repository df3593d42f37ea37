// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <compare>
#include <vector>

namespace pj {

/// A lattice point, stored as integer indices of the fine grid.
/// The real coordinate is delta*k + i*delta*j and is always derived,
/// never stored, so separation tests stay exact.
struct GridPoint {
    int k = 0;  // x index
    int j = 0;  // y index

    friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;

    constexpr GridPoint operator+(GridPoint o) const { return {k + o.k, j + o.j}; }
    constexpr GridPoint operator-(GridPoint o) const { return {k - o.k, j - o.j}; }
};

inline std::complex<double> coord(GridPoint p, double delta) {
    return {delta * p.k, delta * p.j};
}

/// Coarse spacings derived from the fine spacing:
///   star  = 2*ceil(delta^{-1/2}/4)*delta
///   dstar = ceil(delta^{-1/2})*delta
/// The ceilings are taken on the snapped value of delta^{-1/2} (one-ulp
/// guard) so that decimal spacings like 1/100 give exactly (0.06, 0.10).
struct CoarseSpacings {
    double star = 0.0;
    double dstar = 0.0;
    int star_steps = 0;   // star / delta
    int dstar_steps = 0;  // dstar / delta
};

/// Throws std::invalid_argument unless 0 < delta <= 1.
CoarseSpacings coarse_spacings(double delta);

/// Square computation domain [-L,L]^2 sampled at spacing delta, with the
/// derived coarse spacings. Requires L/delta to be a positive integer.
class GridSpec {
public:
    GridSpec(double domain_half_width, double delta);

    double L() const { return L_; }
    double delta() const { return delta_; }
    double delta_star() const { return coarse_.star; }
    double delta_dstar() const { return coarse_.dstar; }

    /// L/delta.
    int half_steps() const { return half_steps_; }
    /// delta_star/delta (even integer).
    int star_steps() const { return coarse_.star_steps; }
    /// delta_dstar/delta.
    int dstar_steps() const { return coarse_.dstar_steps; }

    /// True when L/delta_star is an integer (required by the coarse algorithm).
    bool coarse_aligned() const { return half_steps_ % coarse_.star_steps == 0; }

private:
    double L_;
    double delta_;
    int half_steps_;
    CoarseSpacings coarse_;
};

/// All grid points mu with |mu|_inf = half_side_steps (in index units),
/// sorted ascending by principal argument in (-pi, pi]. Returns exactly
/// 8*half_side_steps points; (-h, 0) comes last (arg = pi). The ordering
/// does not depend on the grid spacing.
std::vector<GridPoint> box_boundary(int half_side_steps);

/// Lattice points of the fine (or coarse) grid with |coordinate|_inf <= L,
/// row-major (y outer, x inner), in fine index units. The coarse variant
/// requires L/delta_star to be an integer.
std::vector<GridPoint> enumerate_interior(const GridSpec& spec, bool coarse);

/// Rounds x to the nearest integer when within a few ulps of one;
/// throws std::invalid_argument otherwise. Used for L/delta style ratios.
long long exact_ratio(double num, double den, const char* what);

}  // namespace pj
