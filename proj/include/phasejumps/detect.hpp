// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "phasejumps/field.hpp"
#include "phasejumps/grid.hpp"

namespace pj {

enum class Algorithm { pj, pjc, mgn };

/// A detected zero: grid position, winding number theta, and the maximal
/// normalized phase step chi (PhaseJumps only; 0 for PJC/MGN outputs).
struct ChargedZero {
    GridPoint gp;
    Complex pos;  // delta * (k + i j), frozen at detection time
    int theta = 0;
    double chi = 0.0;
    Algorithm algo = Algorithm::pj;
};

struct DetectionConfig {
    PhaseFactor factor = PhaseFactor::twisted;
    double chi_max = 0.9;
    int pj_box_steps = 2;
    int pj_sep_steps = 6;
    int pjc_sep_multiplier = 5;
    double theta_round_tol = 1e-6;
};

enum class WindingStatus { ok, zero_sample, non_closing };

struct WindingResult {
    double theta_raw = 0.0;
    int theta = 0;
    double chi = 0.0;
    WindingStatus status = WindingStatus::ok;
};

/// Discrete winding number around the box of half side half_side_steps*delta
/// centered at lambda: theta_raw = (1/2pi) sum_j arg[F_l(mu_j) conj(F_l(mu_{j-1}))]
/// over the argument-ordered boundary with cyclic wrap; chi is the largest
/// single step normalized by pi. A vanishing boundary sample yields
/// (theta=0, chi=1, zero_sample); a raw sum farther than theta_round_tol
/// from an integer yields non_closing.
WindingResult winding_sum(const ComplexField& field, GridPoint lambda, int half_side_steps,
                          PhaseFactor factor, double theta_round_tol = 1e-6);

struct DetectStats {
    std::size_t candidates = 0;           // points passing all per-point tests
    std::size_t non_closing_dropped = 0;  // winding sums that failed to close
};

/// The PhaseJumps algorithm: winding + chi guard on every fine grid point of
/// Lambda_L, then the per-charge 6*delta Euclidean sieve. Requires
/// pad_steps >= pj_box_steps.
std::vector<ChargedZero> phasejumps(const ComplexField& field, const DetectionConfig& cfg = {},
                                    DetectStats* stats = nullptr);

/// Step-1 oscillation test of PhaseJumps-coarse at a coarse grid point:
/// min(|F_l(mu)|, |F_l(mu')|) >= 2 |F_l(mu) - F_l(mu')| for every pair on the
/// delta_dstar test-box boundary at l_inf distance delta (fine neighbors,
/// corner diagonals included).
bool pjc_step1_test(const ComplexField& field, GridPoint lambda,
                    PhaseFactor factor = PhaseFactor::twisted);

/// The Twisted PhaseJumps-coarse algorithm: step-1 oscillation test on the
/// coarse grid, winding on the delta_dstar box (zero boundary sample forces
/// theta = 0), then the all-points 5*delta_dstar l_inf sieve. Requires
/// L/delta_star integer and pad_steps >= dstar_steps.
std::vector<ChargedZero> phasejumps_coarse(const ComplexField& field,
                                           const DetectionConfig& cfg = {},
                                           DetectStats* stats = nullptr);

enum class SieveNorm { l2, linf };

/// Greedy maximal separated subset in row-major scan order of positions.
/// A candidate is accepted iff it does not come closer than min_sep to any
/// already-accepted point (same-theta points only when per_charge is set).
/// Deterministic; the result is maximal.
std::vector<ChargedZero> sieve(std::vector<ChargedZero> candidates, double min_sep,
                               SieveNorm norm, bool per_charge);

/// Exact-integer variant used by the detectors: min_sep = sep_steps * delta.
std::vector<ChargedZero> sieve_steps(std::vector<ChargedZero> candidates, int sep_steps,
                                     SieveNorm norm, bool per_charge);

/// Minimal Grid Neighbors baseline: lambda is kept iff its (optionally
/// e^{-|lambda|^2/2}-weighted) magnitude is <= that of all 8 neighbors.
/// Outputs carry theta = 0. Requires pad_steps >= 1.
std::vector<ChargedZero> mgn(const ComplexField& field, bool weighted);

}  // namespace pj
