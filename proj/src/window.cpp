// SPDX-License-Identifier: Apache-2.0
#include "phasejumps/window.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace pj {

std::complex<double> WindowSpec::raw(double t) const {
    switch (kind) {
        case Kind::hermite0: return {std::exp(-0.5 * t * t), 0.0};
        case Kind::hermite1: return {t * std::exp(-0.5 * t * t), 0.0};
        case Kind::custom: break;
    }
    if (!custom_fn) throw std::invalid_argument("WindowSpec: custom window without callable");
    return custom_fn(t);
}

WindowSpec WindowSpec::hermite0() {
    WindowSpec w;
    w.kind = Kind::hermite0;
    w.label = "hermite0";
    return w;
}

WindowSpec WindowSpec::hermite1() {
    WindowSpec w;
    w.kind = Kind::hermite1;
    w.label = "hermite1";
    return w;
}

WindowSpec WindowSpec::gauss_pi() {
    WindowSpec w;
    w.kind = Kind::custom;
    w.label = "gauss";
    w.custom_fn = [](double t) {
        return std::complex<double>{1.1892071150027210667 * std::exp(-3.141592653589793238 * t * t),
                                    0.0};
    };
    return w;
}

WindowSpec WindowSpec::custom(std::function<std::complex<double>(double)> fn, std::string label) {
    WindowSpec w;
    w.kind = Kind::custom;
    w.custom_fn = std::move(fn);
    w.label = std::move(label);
    return w;
}

WindowSpec WindowSpec::from_samples(std::vector<std::complex<double>> samples, double t0,
                                    double dt) {
    if (samples.size() < 2 || !(dt > 0.0)) {
        throw std::invalid_argument("WindowSpec::from_samples: need >= 2 samples and dt > 0");
    }
    WindowSpec w;
    w.kind = Kind::custom;
    w.label = "file";
    w.custom_fn = [s = std::move(samples), t0, dt](double t) -> std::complex<double> {
        const double u = (t - t0) / dt;
        if (u < 0.0 || u > static_cast<double>(s.size() - 1)) return {0.0, 0.0};
        const std::size_t i = std::min(static_cast<std::size_t>(u), s.size() - 2);
        const double f = u - static_cast<double>(i);
        return s[i] * (1.0 - f) + s[i + 1] * f;
    };
    return w;
}

}  // namespace pj
