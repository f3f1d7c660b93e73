// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file validate.hpp
//! Invariant suite run by `pia validate` and by the property tests.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "pia/iams.hpp"
#include "pia/model.hpp"
#include "pia/montecarlo.hpp"
#include "pia/oracle.hpp"
#include "pia/pia.hpp"

namespace pia {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct ValidationOptions {
    int k_regions = 5;
    int arc_points = kDefaultArcPoints;
    std::size_t mc_samples = 10000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::size_t oracle_directions = 9;
    double tolerance = 1e-9;
};

struct ValidationSummary {
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;
    std::vector<std::string> notes;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass || c.skipped; });
    }
};

namespace detail {

inline std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// Largest deviation of sum_k p_k(u) from one.
inline double column_sum_error(const ProbabilityMap& m) {
    double worst = 0;
    for (std::size_t i = 0; i < m.grid.size(); ++i) {
        double s = 0;
        for (const auto& row : m.p) s += row[i];
        worst = std::max(worst, std::abs(s - 1));
    }
    return worst;
}

// Largest mismatch between the coarse map and pairwise sums of the fine map.
inline double refinement_error(const ProbabilityMap& coarse, const ProbabilityMap& fine) {
    double worst = 0;
    for (std::size_t k = 0; k < coarse.p.size(); ++k)
        for (std::size_t i = 0; i < coarse.grid.size(); ++i)
            worst = std::max(worst, std::abs(coarse.p[k][i] - fine.p[2 * k][i] - fine.p[2 * k + 1][i]));
    const auto mc = mean_probabilities(coarse), mf = mean_probabilities(fine);
    for (std::size_t k = 0; k < mc.size(); ++k) worst = std::max(worst, std::abs(mc[k] - mf[2 * k] - mf[2 * k + 1]));
    return worst;
}

inline bool same_db(double a, double b, double tol) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    return std::abs(a - b) <= tol;
}

}  // namespace detail

/*!
 * Runs every invariant check on one scenario and grid.
 *
 * Checks: column sums, Monte Carlo inclusion, K versus 2K refinement,
 * quadrature spot checks of the ring areas, Gamma tiling, SLL coverage,
 * pattern symmetry (symmetric scenarios only) and zero-tolerance collapse.
 */
inline ValidationSummary validate_scenario(const ArrayScenario& scenario, const AngularGrid& grid,
                                           const ValidationOptions& opt = {}) {
    ValidationSummary out;
    const double tol = opt.tolerance;
    const auto map = probability_map(scenario, grid, opt.k_regions, opt.arc_points, opt.threads);
    const std::size_t nu = grid.size();
    const auto K = static_cast<std::size_t>(opt.k_regions);
    if (map.any_degenerate()) {
        const auto n = static_cast<std::size_t>(std::count(map.degenerate.begin(), map.degenerate.end(), 1));
        out.warnings.push_back("degenerate interval region at " + std::to_string(n) + " of " + std::to_string(nu) +
                               " directions; all probability assigned to region 1");
    }

    {
        const double e = detail::column_sum_error(map);
        out.checks.push_back({"column_sums", e <= tol, false, "max |sum p_k - 1| = " + detail::sci(e)});
    }

    {
        const auto mc = run_mc(scenario, map, opt.mc_samples, opt.seed, {}, opt.threads);
        out.checks.push_back({"inclusion", mc.inclusion_violations == 0, false,
                              std::to_string(mc.inclusion_violations) + " violations in " +
                                  std::to_string(opt.mc_samples * nu) + " pattern values"});
        double tv = 0;
        for (double t : mc.total_variation) tv = std::max(tv, t);
        out.notes.push_back("max total variation MC vs PIA = " + detail::sci(tv));
    }

    {
        const auto fine = probability_map(scenario, grid, 2 * opt.k_regions, opt.arc_points, opt.threads);
        const double e = detail::refinement_error(map, fine);
        out.checks.push_back({"refinement", e <= tol, false,
                              "K=" + std::to_string(K) + " vs K=" + std::to_string(2 * K) +
                                  ", max dev = " + detail::sci(e)});
    }

    {
        double worst = 0;
        const std::size_t n = std::min(opt.oracle_directions, nu);
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t i = n == 1 ? 0 : j * (nu - 1) / (n - 1);
            const auto iaf = interval_af(scenario, grid[i], opt.arc_points);
            if (!iaf.region.is_proper()) continue;
            const auto tris = triangulate(iaf.region);
            std::vector<oracle::Point> poly(iaf.region.vertices().begin(), iaf.region.vertices().end());
            for (double r : map.ring_radii[i].radii) {
                const double a = disc_polygon_area(r, tris);
                const double b = oracle::disc_polygon_area(r, poly);
                const double err = b < 1e-3 ? std::abs(a - b) / 1e-3 : std::abs(a - b) / b;
                worst = std::max(worst, err);
            }
        }
        out.checks.push_back({"oracle_spot_checks", worst < 1e-3, false,
                              std::to_string(n) + " directions, max rel err = " + detail::sci(worst)});
    }

    const auto f = feature_report(map);
    {
        bool ok = f.gamma_intervals.front().lo == f.iams_gamma.lo && f.gamma_intervals.back().hi == f.iams_gamma.hi;
        for (std::size_t k = 0; k + 1 < K; ++k) ok = ok && f.gamma_intervals[k].hi == f.gamma_intervals[k + 1].lo;
        double ps = 0;
        for (double p : f.gamma_probs) ps += p;
        ok = ok && std::abs(ps - 1) <= tol;
        out.checks.push_back({"gamma_tiling", ok, false, "adjacent Gamma_k share endpoints exactly"});
    }

    {
        const bool ok = f.sll_intervals.front().lo == f.iams_sll.lo && f.sll_intervals.back().hi == f.iams_sll.hi;
        out.checks.push_back({"sll_coverage", ok, false, "SLL_1^inf and SLL_K^sup equal the IA-MS endpoints"});
    }

    {
        bool grid_mirrored = true;
        for (std::size_t i = 0; i < nu; ++i) grid_mirrored = grid_mirrored && grid[i] == -grid[nu - 1 - i];
        if (!scenario.is_symmetric() || !grid_mirrored) {
            out.checks.push_back({"symmetry", false, true, "scenario or grid not mirror-symmetric"});
        } else {
            double worst = 0, worst_p = 0;
            const auto rel = [](double a, double b) {
                return a == b ? 0.0 : std::abs(a - b) / std::max(std::abs(a), std::abs(b));
            };
            for (std::size_t i = 0; i < nu; ++i) {
                const std::size_t m = nu - 1 - i;
                const auto &a = map.ring_radii[i].radii, &b = map.ring_radii[m].radii;
                worst = std::max({worst, rel(a.front() * a.front(), b.front() * b.front()),
                                  rel(a.back() * a.back(), b.back() * b.back())});
                for (std::size_t k = 0; k < K; ++k) worst_p = std::max(worst_p, std::abs(map.p[k][i] - map.p[k][m]));
            }
            out.notes.push_back("max mirror dev of p_k = " + detail::sci(worst_p));
            out.checks.push_back({"symmetry", worst <= 1e-9, false, "max relative mirror dev of p_lo, p_hi = " + detail::sci(worst)});
        }
    }

    {
        std::vector<ExcitationInterval> crisp;
        for (const auto& e : scenario.elements())
            crisp.push_back({e.nominal_amplitude, e.nominal_phase, e.nominal_amplitude, e.nominal_amplitude,
                             e.nominal_phase, e.nominal_phase});
        const ArrayScenario zero(std::move(crisp), scenario.spacing());
        const auto pb = power_bounds(zero, grid, opt.arc_points, opt.threads);
        bool ok = true;
        for (std::size_t i = 0; i < nu; ++i) {
            ok = ok && pb.p_lo[i] == pb.p_hi[i];
            ok = ok && std::abs(pb.p_hi[i] - pb.nominal_power[i]) <= 1e-12 * pb.nominal_peak_power;
            ok = ok && (std::abs(pb.nominal_power[i]) < 1e-9 * pb.nominal_peak_power ||
                        detail::same_db(pb.p_hi_db[i], pb.nominal_db[i], 1e-6));
        }
        out.checks.push_back({"zero_tolerance_collapse", ok, false, "p_lo = p_hi = nominal at every direction"});
    }
    return out;
}

}  // namespace pia
