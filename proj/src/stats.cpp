// SPDX-License-Identifier: Apache-2.0
#include "phasejumps/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "phasejumps/kernel.hpp"
#include "phasejumps/quadrature.hpp"

namespace pj {

std::vector<Rect> spiral_regions(double step, int count) {
    if (!(step > 0.0)) throw std::invalid_argument("spiral_regions: step must be positive");
    if (count < 1) throw std::invalid_argument("spiral_regions: count must be >= 1");
    std::vector<Rect> out;
    out.reserve(static_cast<std::size_t>(count));
    Rect r{-0.5 * step, -0.5 * step, 0.5 * step, 0.5 * step};
    out.push_back(r);
    for (int i = 1; i < count; ++i) {
        switch ((i - 1) % 4) {
            case 0: r.x1 += step; break;  // East
            case 1: r.y1 += step; break;  // North
            case 2: r.x0 -= step; break;  // West
            case 3: r.y0 -= step; break;  // South
        }
        out.push_back(r);
    }
    return out;
}

double first_intensity_charge(const std::function<Complex(Complex)>& F1, double sigma, Complex c1,
                              Complex c2, Complex z, double h) {
    if (sigma == 0.0) {
        throw std::invalid_argument("first_intensity_charge: sigma must be positive");
    }
    const Complex f = F1(z);
    const auto [d1, d2] = twisted_derivatives(F1, z, h);
    const double s2 = sigma * sigma;
    return std::exp(-std::norm(f) / s2) / (std::numbers::pi * s2) *
           (std::norm(d1 - c1 * f) - std::norm(d2 - c2 * f) + s2);
}

double expected_charge(const Rect& region, const std::function<double(Complex)>& rho,
                       double rel_tol) {
    return integrate_2d([&](double x, double y) { return rho(Complex{x, y}); },
                        QuadRect{region.x0, region.y0, region.x1, region.y1}, rel_tol);
}

namespace {

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& xs) {
    const std::size_t n = xs.size();
    double sum = 0.0, comp = 0.0;
    for (double x : xs) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    MeanSe out;
    out.mean = sum / static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.se = std::sqrt(ss / (static_cast<double>(n - 1) * static_cast<double>(n)));
    }
    return out;
}

}  // namespace

ChargeReport empirical_curves(const std::vector<std::vector<ChargedZero>>& zero_sets,
                              const std::vector<Rect>& regions,
                              const std::function<double(Complex)>& rho) {
    ChargeReport rep;
    rep.realizations = static_cast<int>(zero_sets.size());
    rep.rows.reserve(regions.size());
    for (const Rect& region : regions) {
        std::vector<double> charges, counts;
        charges.reserve(zero_sets.size());
        counts.reserve(zero_sets.size());
        for (const auto& zs : zero_sets) {
            long theta_sum = 0;
            long count = 0;
            for (const ChargedZero& z : zs) {
                if (region.contains(z.pos)) {
                    theta_sum += z.theta;
                    ++count;
                }
            }
            charges.push_back(static_cast<double>(theta_sum));
            counts.push_back(static_cast<double>(count));
        }
        RegionStat row;
        row.region = region;
        row.area = region.area();
        if (!charges.empty()) {
            const MeanSe mc = mean_se(charges);
            const MeanSe mn = mean_se(counts);
            row.mean_charge = mc.mean;
            row.se_charge = mc.se;
            row.mean_count = mn.mean;
            row.se_count = mn.se;
        }
        if (rho) row.theory_charge = expected_charge(region, rho);
        rep.rows.push_back(row);
    }
    return rep;
}

namespace {

double linf(Complex a, Complex b) {
    return std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag()));
}

// Square Hungarian with potentials (O(n^3)). Rows/columns are padded with
// per-row dummy columns and absorbing dummy rows so that unmatched vertices
// are representable; the dummy premium K dominates every real edge, which
// makes cardinality the primary objective and total distance the secondary
// one. Row dummies carry a tiny descending surcharge so that cost ties
// resolve toward matching earlier references.
std::vector<int> hungarian(const std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = a[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> row_of_col(n, -1);
    for (int j = 1; j <= n; ++j) row_of_col[j - 1] = p[j] - 1;
    return row_of_col;
}

}  // namespace

MatchResult match_zeros(const std::vector<ChargedZero>& reference,
                        const std::vector<ChargedZero>& computed, double threshold) {
    if (!(threshold > 0.0)) throw std::invalid_argument("match_zeros: threshold must be positive");
    const std::size_t nr = reference.size();
    const std::size_t nc = computed.size();
    MatchResult out;
    if (nr == 0 || nc == 0) {
        for (std::size_t r = 0; r < nr; ++r) out.unmatched_reference.push_back(r);
        for (std::size_t c = 0; c < nc; ++c) out.unmatched_computed.push_back(c);
        return out;
    }
    const std::size_t n = nr + nc;
    const double big = 1e18;
    const double K = threshold + 1.0;
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, big));
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) {
            const double d = linf(reference[r].pos, computed[c].pos);
            if (d <= threshold) cost[r][c] = d;
        }
        // own dummy column; later references are cheaper to leave unmatched
        cost[r][nc + r] = K * (1.0 + static_cast<double>(nr - r) * 0x1p-40);
    }
    for (std::size_t dr = 0; dr < nc; ++dr) {
        for (std::size_t c = 0; c < nc; ++c) cost[nr + dr][c] = K;  // absorb spare columns
        for (std::size_t dc = 0; dc < nr; ++dc) cost[nr + dr][nc + dc] = 0.0;
    }
    const std::vector<int> row_of_col = hungarian(cost);

    std::vector<char> ref_matched(nr, 0), comp_matched(nc, 0);
    for (std::size_t c = 0; c < nc; ++c) {
        const int r = row_of_col[c];
        if (r >= 0 && static_cast<std::size_t>(r) < nr && cost[r][c] <= threshold) {
            MatchPair pr;
            pr.ref_index = static_cast<std::size_t>(r);
            pr.comp_index = c;
            pr.dist = cost[r][c];
            pr.charge_agree = reference[r].theta == computed[c].theta;
            out.pairs.push_back(pr);
            ref_matched[r] = 1;
            comp_matched[c] = 1;
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const MatchPair& a, const MatchPair& b) { return a.ref_index < b.ref_index; });
    for (std::size_t r = 0; r < nr; ++r) {
        if (!ref_matched[r]) out.unmatched_reference.push_back(r);
    }
    for (std::size_t c = 0; c < nc; ++c) {
        if (!comp_matched[c]) out.unmatched_computed.push_back(c);
    }
    for (const MatchPair& pr : out.pairs) {
        out.total_dist += pr.dist;
        if (pr.charge_agree) ++out.charge_agreements;
    }
    return out;
}

}  // namespace pj
