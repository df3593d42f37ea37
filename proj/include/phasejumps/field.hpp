// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "phasejumps/grid.hpp"

namespace pj {

using Complex = std::complex<double>;
using FieldFn = std::function<Complex(Complex)>;

/// Phase-stabilizing factor nu(z, w) for the shifts F_w(z) = nu(z,w) F(z+w).
enum class PhaseFactor { identity, twisted };

/// Identity -> 1; Twisted -> exp(-i Im(z conj(w))).
Complex phase_factor(PhaseFactor kind, Complex z, Complex w);

/// Grid-point overload: Im(z conj(w)) = delta^2 (j_z k_w - k_z j_w) with the
/// cross product in integer arithmetic, so the phase stays accurate at
/// domain edges where it grows like L^2.
Complex phase_factor(PhaseFactor kind, GridPoint z, GridPoint w, double delta);

/// Principal argument of a*conj(b) in (-pi, pi]; arg(0) := 0.
double arg_diff(Complex a, Complex b);

/// Sign of det DF(z) = |dF|^2 - |conj-dF|^2 from central-difference Wirtinger
/// derivatives on the stencil z +- h, z +- ih. Values below 10 h^2 report 0.
int fd_jacobian_sign(const FieldFn& F, Complex z, double h);

class ComplexField;

/// Grid-sample variant with h = delta: the reference-charge oracle for
/// simulated fields, evaluated on a finer simulation of the same
/// realization (e.g. the pre-subsampling grid).
int fd_jacobian_sign(const ComplexField& field, GridPoint p);

/// Complex samples of a function on the padded grid Lambda_{L + pad*delta},
/// row-major from the most negative (x, y). Immutable after construction;
/// the algorithms' only view of F.
class ComplexField {
public:
    ComplexField(GridSpec spec, int pad_steps, std::vector<Complex> values);

    /// Samples fn on the padded grid.
    static ComplexField from_function(GridSpec spec, int pad_steps, const FieldFn& fn);

    const GridSpec& spec() const { return spec_; }
    int pad_steps() const { return pad_; }
    /// Samples per row/column: 2*(L/delta + pad) + 1.
    int side() const { return side_; }
    /// Largest index magnitude with a sample: L/delta + pad.
    int max_index() const { return (side_ - 1) / 2; }

    bool in_range(GridPoint p) const {
        const int m = max_index();
        return p.k >= -m && p.k <= m && p.j >= -m && p.j <= m;
    }

    /// Throws std::out_of_range naming the missing sample.
    Complex at(GridPoint p) const;

    /// nu(mu, lambda) * F(lambda + mu); requires lambda+mu inside the pad.
    Complex shifted_sample(GridPoint lambda, GridPoint mu, PhaseFactor kind) const;

    /// Keeps every stride-th sample; L shrinks to a multiple of the new
    /// spacing and the pad to floor(pad/stride).
    ComplexField subsample(int stride) const;

    std::span<const Complex> values() const { return values_; }

private:
    GridSpec spec_;
    int pad_;
    int side_;
    std::vector<Complex> values_;

    std::size_t index_of(GridPoint p) const {
        const int m = max_index();
        return static_cast<std::size_t>(p.j + m) * side_ + static_cast<std::size_t>(p.k + m);
    }
};

}  // namespace pj
