// SPDX-License-Identifier: Apache-2.0
#include "phasejumps/detect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "phasejumps/parallel.hpp"

namespace pj {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

WindingResult winding_on_boundary(const ComplexField& field, GridPoint lambda,
                                  const std::vector<GridPoint>& boundary, PhaseFactor factor,
                                  double tol) {
    WindingResult res;
    std::vector<Complex> vals(boundary.size());
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        vals[i] = field.shifted_sample(lambda, boundary[i], factor);
        if (vals[i].real() == 0.0 && vals[i].imag() == 0.0) {
            res.status = WindingStatus::zero_sample;
            res.theta = 0;
            res.chi = 1.0;
            return res;
        }
    }
    double sum = 0.0;
    double comp = 0.0;  // Kahan carry
    double max_step = 0.0;
    Complex prev = vals.back();  // mu_0 := mu_N
    for (const Complex& cur : vals) {
        const double d = arg_diff(cur, prev);
        const double y = d - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        max_step = std::max(max_step, std::abs(d));
        prev = cur;
    }
    res.theta_raw = sum / kTwoPi;
    res.chi = max_step / std::numbers::pi;
    const double rounded = std::nearbyint(res.theta_raw);
    if (std::abs(res.theta_raw - rounded) > tol) {
        res.status = WindingStatus::non_closing;
        res.theta = 0;
        return res;
    }
    res.theta = static_cast<int>(rounded);
    return res;
}

long long sep_steps_from_real(double min_sep, double delta) {
    const double r = min_sep / delta;
    const double nearest = std::nearbyint(r);
    if (nearest >= 1.0 && std::abs(r - nearest) <= 1e-9 * std::max(1.0, std::abs(r))) {
        return static_cast<long long>(nearest);
    }
    return -1;
}

bool violates(const ChargedZero& a, const ChargedZero& b, SieveNorm norm, long long sep_steps,
              double min_sep) {
    if (sep_steps > 0) {
        const long long dk = a.gp.k - b.gp.k;
        const long long dj = a.gp.j - b.gp.j;
        if (norm == SieveNorm::l2) return dk * dk + dj * dj < sep_steps * sep_steps;
        return std::max(std::llabs(dk), std::llabs(dj)) < sep_steps;
    }
    const double dx = a.pos.real() - b.pos.real();
    const double dy = a.pos.imag() - b.pos.imag();
    const double dist = norm == SieveNorm::l2 ? std::hypot(dx, dy)
                                              : std::max(std::abs(dx), std::abs(dy));
    return dist < min_sep * (1.0 - 1e-12);
}

std::vector<ChargedZero> sieve_impl(std::vector<ChargedZero> candidates, SieveNorm norm,
                                    bool per_charge, long long sep_steps, double min_sep) {
    std::sort(candidates.begin(), candidates.end(), [](const ChargedZero& a, const ChargedZero& b) {
        return a.gp.j != b.gp.j ? a.gp.j < b.gp.j : a.gp.k < b.gp.k;
    });
    std::vector<ChargedZero> kept;
    for (const ChargedZero& c : candidates) {
        bool ok = true;
        for (const ChargedZero& k : kept) {
            if (per_charge && k.theta != c.theta) continue;
            if (violates(c, k, norm, sep_steps, min_sep)) {
                ok = false;
                break;
            }
        }
        if (ok) kept.push_back(c);
    }
    return kept;
}

}  // namespace

static void validate_config(const DetectionConfig& cfg) {
    if (!(cfg.chi_max > 0.0) || cfg.chi_max > 1.0) {
        throw std::invalid_argument("DetectionConfig: chi_max must lie in (0, 1]");
    }
    if (cfg.pj_box_steps < 1 || cfg.pj_sep_steps < 1 || cfg.pjc_sep_multiplier < 1) {
        throw std::invalid_argument("DetectionConfig: box and separation steps must be positive");
    }
    if (!(cfg.theta_round_tol > 0.0)) {
        throw std::invalid_argument("DetectionConfig: theta_round_tol must be positive");
    }
}

WindingResult winding_sum(const ComplexField& field, GridPoint lambda, int half_side_steps,
                          PhaseFactor factor, double theta_round_tol) {
    const auto boundary = box_boundary(half_side_steps);
    return winding_on_boundary(field, lambda, boundary, factor, theta_round_tol);
}

std::vector<ChargedZero> phasejumps(const ComplexField& field, const DetectionConfig& cfg,
                                    DetectStats* stats) {
    validate_config(cfg);
    if (field.pad_steps() < cfg.pj_box_steps) {
        throw std::invalid_argument("phasejumps: field needs pad_steps >= pj_box_steps");
    }
    const GridSpec& spec = field.spec();
    const int n = spec.half_steps();
    const auto boundary = box_boundary(cfg.pj_box_steps);

    const std::size_t nrows = static_cast<std::size_t>(2 * n + 1);
    std::vector<std::vector<ChargedZero>> rows(nrows);
    std::vector<std::size_t> dropped(nrows, 0);
    parallel_for(nrows, [&](std::size_t r) {
        const int j = static_cast<int>(r) - n;
        for (int k = -n; k <= n; ++k) {
            const GridPoint gp{k, j};
            const WindingResult w =
                winding_on_boundary(field, gp, boundary, cfg.factor, cfg.theta_round_tol);
            if (w.status == WindingStatus::non_closing) {
                ++dropped[r];
                continue;
            }
            if (w.status != WindingStatus::ok) continue;
            if (w.theta != 0 && w.chi < cfg.chi_max) {
                rows[r].push_back(
                    {gp, coord(gp, spec.delta()), w.theta, w.chi, Algorithm::pj});
            }
        }
    });
    std::vector<ChargedZero> candidates;
    for (std::size_t r = 0; r < nrows; ++r) {
        candidates.insert(candidates.end(), rows[r].begin(), rows[r].end());
    }
    if (stats) {
        stats->candidates = candidates.size();
        for (std::size_t d : dropped) stats->non_closing_dropped += d;
    }
    return sieve_steps(std::move(candidates), cfg.pj_sep_steps, SieveNorm::l2, true);
}

bool pjc_step1_test(const ComplexField& field, GridPoint lambda, PhaseFactor factor) {
    const GridSpec& spec = field.spec();
    const int s = spec.star_steps();
    if (lambda.k % s != 0 || lambda.j % s != 0) {
        throw std::invalid_argument("pjc_step1_test: lambda is not on the coarse grid");
    }
    const int dd = spec.dstar_steps();
    const auto ring = box_boundary(dd);
    std::vector<Complex> vals(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i) {
        vals[i] = field.shifted_sample(lambda, ring[i], factor);
    }
    // Ring membership lookup by index offsets.
    const int w = 2 * dd + 1;
    std::vector<int> at(static_cast<std::size_t>(w) * w, -1);
    for (std::size_t i = 0; i < ring.size(); ++i) {
        at[static_cast<std::size_t>(ring[i].j + dd) * w + (ring[i].k + dd)] =
            static_cast<int>(i);
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const GridPoint p = ring[i];
        for (int dj = -1; dj <= 1; ++dj) {
            for (int dk = -1; dk <= 1; ++dk) {
                if (dk == 0 && dj == 0) continue;
                const int qk = p.k + dk;
                const int qj = p.j + dj;
                if (std::max(std::abs(qk), std::abs(qj)) != dd) continue;
                const int qi = at[static_cast<std::size_t>(qj + dd) * w + (qk + dd)];
                if (qi < 0 || qi <= static_cast<int>(i)) continue;  // each pair once
                const double lo = std::min(std::abs(vals[i]), std::abs(vals[qi]));
                if (lo < 2.0 * std::abs(vals[i] - vals[qi])) return false;
            }
        }
    }
    return true;
}

std::vector<ChargedZero> phasejumps_coarse(const ComplexField& field, const DetectionConfig& cfg,
                                           DetectStats* stats) {
    validate_config(cfg);
    const GridSpec& spec = field.spec();
    if (!spec.coarse_aligned()) {
        throw std::invalid_argument("phasejumps_coarse: L/delta_star is not an integer");
    }
    const int dd = spec.dstar_steps();
    if (field.pad_steps() < dd) {
        throw std::invalid_argument("phasejumps_coarse: field needs pad_steps >= dstar_steps");
    }
    const auto coarse = enumerate_interior(spec, true);
    const auto boundary = box_boundary(dd);

    std::vector<ChargedZero> slots(coarse.size());
    std::vector<unsigned char> keep(coarse.size(), 0);
    std::vector<unsigned char> nonclosing(coarse.size(), 0);
    parallel_for(coarse.size(), [&](std::size_t i) {
        const GridPoint gp = coarse[i];
        if (!pjc_step1_test(field, gp, cfg.factor)) return;
        const WindingResult w =
            winding_on_boundary(field, gp, boundary, cfg.factor, cfg.theta_round_tol);
        if (w.status == WindingStatus::non_closing) {
            nonclosing[i] = 1;
            return;
        }
        if (w.theta == 0) return;  // includes the zero-boundary-sample rule
        slots[i] = {gp, coord(gp, spec.delta()), w.theta, 0.0, Algorithm::pjc};
        keep[i] = 1;
    });
    std::vector<ChargedZero> candidates;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        if (keep[i]) candidates.push_back(slots[i]);
        if (stats && nonclosing[i]) ++stats->non_closing_dropped;
    }
    if (stats) stats->candidates = candidates.size();
    return sieve_steps(std::move(candidates), cfg.pjc_sep_multiplier * dd, SieveNorm::linf,
                       false);
}

std::vector<ChargedZero> sieve(std::vector<ChargedZero> candidates, double min_sep,
                               SieveNorm norm, bool per_charge) {
    long long steps = -1;
    if (!candidates.empty()) {
        // Candidate positions share one spacing whenever pos = delta*gp holds;
        // recover it to run the exact integer comparison.
        for (const ChargedZero& c : candidates) {
            if (c.gp.k != 0) {
                const double delta = c.pos.real() / c.gp.k;
                if (delta > 0.0) steps = sep_steps_from_real(min_sep, delta);
                break;
            }
            if (c.gp.j != 0) {
                const double delta = c.pos.imag() / c.gp.j;
                if (delta > 0.0) steps = sep_steps_from_real(min_sep, delta);
                break;
            }
        }
    }
    return sieve_impl(std::move(candidates), norm, per_charge, steps, min_sep);
}

std::vector<ChargedZero> sieve_steps(std::vector<ChargedZero> candidates, int sep_steps,
                                     SieveNorm norm, bool per_charge) {
    return sieve_impl(std::move(candidates), norm, per_charge, sep_steps, 0.0);
}

std::vector<ChargedZero> mgn(const ComplexField& field, bool weighted) {
    if (field.pad_steps() < 1) {
        throw std::invalid_argument("mgn: field needs pad_steps >= 1");
    }
    const GridSpec& spec = field.spec();
    const int n = spec.half_steps();
    const int m = field.max_index();
    const int side = field.side();
    const double d2 = spec.delta() * spec.delta();

    // Compare in log space: log|F(l)| - |l|^2/2 stays finite-ordered where
    // the direct product would underflow on wide domains.
    std::vector<double> score(static_cast<std::size_t>(side) * side);
    auto idx = [&](int k, int j) {
        return static_cast<std::size_t>(j + m) * side + static_cast<std::size_t>(k + m);
    };
    for (int j = -m; j <= m; ++j) {
        for (int k = -m; k <= m; ++k) {
            const double a = std::abs(field.at({k, j}));
            double sc = a > 0.0 ? std::log(a) : -std::numeric_limits<double>::infinity();
            if (weighted) {
                sc -= 0.5 * d2 *
                      (static_cast<double>(k) * k + static_cast<double>(j) * j);
            }
            score[idx(k, j)] = sc;
        }
    }
    std::vector<ChargedZero> out;
    for (int j = -n; j <= n; ++j) {
        for (int k = -n; k <= n; ++k) {
            const double s0 = score[idx(k, j)];
            bool minimal = true;
            for (int dj = -1; dj <= 1 && minimal; ++dj) {
                for (int dk = -1; dk <= 1; ++dk) {
                    if (dk == 0 && dj == 0) continue;
                    if (!(s0 <= score[idx(k + dk, j + dj)])) {
                        minimal = false;
                        break;
                    }
                }
            }
            if (minimal) {
                const GridPoint gp{k, j};
                out.push_back({gp, coord(gp, spec.delta()), 0, 0.0, Algorithm::mgn});
            }
        }
    }
    return out;
}

}  // namespace pj
