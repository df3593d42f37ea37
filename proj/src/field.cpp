// SPDX-License-Identifier: Apache-2.0
#include "phasejumps/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pj {

Complex phase_factor(PhaseFactor kind, Complex z, Complex w) {
    if (kind == PhaseFactor::identity) return {1.0, 0.0};
    // phase = -Im(z conj(w)) = x_z y_w - y_z x_w
    const double phase = std::fma(z.real(), w.imag(), -z.imag() * w.real());
    return {std::cos(phase), std::sin(phase)};
}

Complex phase_factor(PhaseFactor kind, GridPoint z, GridPoint w, double delta) {
    if (kind == PhaseFactor::identity) return {1.0, 0.0};
    const long long cross = static_cast<long long>(z.k) * w.j - static_cast<long long>(z.j) * w.k;
    const double phase = (delta * delta) * static_cast<double>(cross);
    return {std::cos(phase), std::sin(phase)};
}

double arg_diff(Complex a, Complex b) {
    const Complex p = a * std::conj(b);
    double im = p.imag();
    if (p.real() == 0.0 && im == 0.0) return 0.0;
    if (im == 0.0) im = 0.0;  // drop the sign of zero: arg of a negative real is +pi
    return std::atan2(im, p.real());
}

int fd_jacobian_sign(const FieldFn& F, Complex z, double h) {
    const Complex dx = (F(z + Complex{h, 0.0}) - F(z - Complex{h, 0.0})) / (2.0 * h);
    const Complex dy = (F(z + Complex{0.0, h}) - F(z - Complex{0.0, h})) / (2.0 * h);
    const Complex d = 0.5 * (dx - Complex{0.0, 1.0} * dy);
    const Complex dbar = 0.5 * (dx + Complex{0.0, 1.0} * dy);
    const double det = std::norm(d) - std::norm(dbar);
    if (std::abs(det) < 10.0 * h * h) return 0;
    return det > 0.0 ? 1 : -1;
}

int fd_jacobian_sign(const ComplexField& field, GridPoint p) {
    const double h = field.spec().delta();
    const Complex dx = (field.at({p.k + 1, p.j}) - field.at({p.k - 1, p.j})) / (2.0 * h);
    const Complex dy = (field.at({p.k, p.j + 1}) - field.at({p.k, p.j - 1})) / (2.0 * h);
    const Complex d = 0.5 * (dx - Complex{0.0, 1.0} * dy);
    const Complex dbar = 0.5 * (dx + Complex{0.0, 1.0} * dy);
    const double det = std::norm(d) - std::norm(dbar);
    if (std::abs(det) < 10.0 * h * h) return 0;
    return det > 0.0 ? 1 : -1;
}

ComplexField::ComplexField(GridSpec spec, int pad_steps, std::vector<Complex> values)
    : spec_(spec), pad_(pad_steps) {
    if (pad_steps < 0) throw std::invalid_argument("ComplexField: pad_steps must be >= 0");
    side_ = 2 * (spec_.half_steps() + pad_steps) + 1;
    const std::size_t expect = static_cast<std::size_t>(side_) * side_;
    if (values.size() != expect) {
        throw std::invalid_argument("ComplexField: expected " + std::to_string(expect) +
                                    " samples, got " + std::to_string(values.size()));
    }
    for (const Complex& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("ComplexField: non-finite sample");
        }
    }
    values_ = std::move(values);
}

ComplexField ComplexField::from_function(GridSpec spec, int pad_steps, const FieldFn& fn) {
    const int m = spec.half_steps() + pad_steps;
    std::vector<Complex> vals;
    vals.reserve(static_cast<std::size_t>(2 * m + 1) * (2 * m + 1));
    for (int j = -m; j <= m; ++j) {
        for (int k = -m; k <= m; ++k) {
            vals.push_back(fn(coord({k, j}, spec.delta())));
        }
    }
    return ComplexField(spec, pad_steps, std::move(vals));
}

Complex ComplexField::at(GridPoint p) const {
    if (!in_range(p)) {
        throw std::out_of_range("ComplexField: sample (k=" + std::to_string(p.k) +
                                ", j=" + std::to_string(p.j) + ") outside padded grid |index| <= " +
                                std::to_string(max_index()));
    }
    return values_[index_of(p)];
}

Complex ComplexField::shifted_sample(GridPoint lambda, GridPoint mu, PhaseFactor kind) const {
    return phase_factor(kind, mu, lambda, spec_.delta()) * at(lambda + mu);
}

ComplexField ComplexField::subsample(int stride) const {
    if (stride < 1) throw std::invalid_argument("subsample: stride must be >= 1");
    const int n = spec_.half_steps();
    const int m = max_index();
    const int n_new = n / stride;
    const int m_new = m / stride;
    const double delta_new = spec_.delta() * stride;
    GridSpec spec_new(n_new * delta_new, delta_new);
    std::vector<Complex> vals;
    vals.reserve(static_cast<std::size_t>(2 * m_new + 1) * (2 * m_new + 1));
    for (int j = -m_new; j <= m_new; ++j) {
        for (int k = -m_new; k <= m_new; ++k) {
            vals.push_back(values_[index_of({k * stride, j * stride})]);
        }
    }
    return ComplexField(spec_new, m_new - n_new, std::move(vals));
}

}  // namespace pj
