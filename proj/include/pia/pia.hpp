// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file pia.hpp
//! Probabilistic interval analysis: ring partitions of the interval array
//! factor, area-ratio region probabilities, their angular means, and the
//! peak / sidelobe-level feature intervals.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "pia/geometry.hpp"
#include "pia/iams.hpp"
#include "pia/model.hpp"
#include "pia/parallel.hpp"

namespace pia {

struct RingPartition {
    std::vector<double> radii;  // K + 1 ascending radii
    double width_per_ring = 0;

    int k_regions() const { return static_cast<int>(radii.size()) - 1; }
};

/*!
 * K uniform annuli spanning [modulus_lo, modulus_hi].
 *
 * Radii are formed as lo + (hi - lo) * (k / K) so that halving the ring
 * width reproduces every boundary of the coarser partition bit for bit.
 */
inline RingPartition ring_partition(double modulus_lo, double modulus_hi, int k_regions) {
    if (k_regions < 1) throw ValidationError("ring partition: K must be >= 1");
    if (!(modulus_lo >= 0 && modulus_lo <= modulus_hi))
        throw ValidationError("ring partition: need 0 <= modulus_lo <= modulus_hi");
    RingPartition rp;
    const double w = modulus_hi - modulus_lo;
    rp.width_per_ring = w / k_regions;
    rp.radii.resize(static_cast<std::size_t>(k_regions) + 1);
    for (int k = 0; k < k_regions; ++k)
        rp.radii[static_cast<std::size_t>(k)] = modulus_lo + w * (static_cast<double>(k) / k_regions);
    rp.radii.back() = modulus_hi;
    return rp;
}

// Regions below this area are treated as collapsed intervals.
inline constexpr double kDegenerateArea = kGeomEps * kGeomEps;

// Area of the polygon inside the origin-centred disc of radius r.
inline double disc_polygon_area(double r, std::span<const Triangle> triangles) {
    double a = 0;
    for (const auto& t : triangles) a += circle_triangle_intersection_area(r, t);
    return a;
}

/*!
 * Fraction of the region's area falling in each annulus of the partition.
 *
 * A collapsed region (area below kDegenerateArea) puts all mass in the
 * first annulus.
 */
inline std::vector<double> region_probabilities(const ConvexPolygon& region, const RingPartition& partition) {
    const int K = partition.k_regions();
    if (K < 1) throw ValidationError("region probabilities: empty partition");
    const auto d = distance_bounds_to_origin(region);
    const double tol = kGeomEps * std::max(1.0, d.max_dist);
    if (partition.radii.front() > d.min_dist + tol || partition.radii.back() < d.max_dist - tol)
        throw ValidationError("region probabilities: partition does not bracket the region");

    std::vector<double> p(static_cast<std::size_t>(K), 0.0);
    if (!region.is_proper() || region.area() < kDegenerateArea) {
        p[0] = 1;
        return p;
    }
    const auto tris = triangulate(region);
    std::vector<double> cumulative(partition.radii.size());
    for (std::size_t h = 0; h < partition.radii.size(); ++h)
        cumulative[h] = disc_polygon_area(partition.radii[h], tris);
    double total = 0;
    for (int k = 0; k < K; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        p[ku] = std::max(0.0, cumulative[ku + 1] - cumulative[ku]);
        total += p[ku];
    }
    if (!(total > 0)) {
        std::fill(p.begin(), p.end(), 0.0);
        p[0] = 1;
        return p;
    }
    for (auto& x : p) x /= total;
    return p;
}

//---------------------------------------------------------------------------//
/*!
 * Region-occupancy probabilities p[k][i] over a grid, with the ring radii
 * and the dB boundaries of each power sub-interval.
 */
struct ProbabilityMap {
    AngularGrid grid;
    int k_regions = 0;
    std::vector<std::vector<double>> p;               // K x N_u
    std::vector<RingPartition> ring_radii;            // per sample
    std::vector<std::vector<double>> region_power_db; // per sample, K + 1 boundaries
    std::vector<char> degenerate;                     // per sample
    std::vector<double> nominal_db;                   // per sample
    std::vector<std::size_t> n_vertices;              // per sample
    double nominal_peak_power = 0;

    double p_lo_db(std::size_t i) const { return region_power_db[i].front(); }
    double p_hi_db(std::size_t i) const { return region_power_db[i].back(); }
    bool any_degenerate() const {
        return std::any_of(degenerate.begin(), degenerate.end(), [](char c) { return c != 0; });
    }
};

inline ProbabilityMap probability_map(const ArrayScenario& scenario, const AngularGrid& grid, int k_regions,
                                      int arc_points = kDefaultArcPoints, unsigned threads = 1) {
    if (k_regions < 1) throw ValidationError("probability map: K must be >= 1");
    const std::size_t nu = grid.size();
    const auto K = static_cast<std::size_t>(k_regions);
    ProbabilityMap m{grid, k_regions, {}, {}, {}, {}, {}, {}, 0};
    m.p.assign(K, std::vector<double>(nu, 0.0));
    m.ring_radii.resize(nu);
    m.region_power_db.resize(nu);
    m.degenerate.assign(nu, 0);
    m.n_vertices.resize(nu);
    std::vector<double> nominal_power(nu);

    parallel_for(nu, threads, [&](std::size_t i) {
        const auto iaf = interval_af(scenario, grid[i], arc_points);
        m.ring_radii[i] = ring_partition(iaf.modulus_lo, iaf.modulus_hi, k_regions);
        const auto probs = region_probabilities(iaf.region, m.ring_radii[i]);
        for (std::size_t k = 0; k < K; ++k) m.p[k][i] = probs[k];
        m.degenerate[i] = !iaf.region.is_proper() || iaf.region.area() < kDegenerateArea;
        m.n_vertices[i] = iaf.region.size();
        nominal_power[i] = std::norm(nominal_af(scenario, grid[i]));
    });

    m.nominal_peak_power = *std::max_element(nominal_power.begin(), nominal_power.end());
    if (!(m.nominal_peak_power > 0)) throw ValidationError("probability map: nominal pattern is identically zero");
    m.nominal_db.resize(nu);
    for (std::size_t i = 0; i < nu; ++i) {
        m.nominal_db[i] = power_db(nominal_power[i], m.nominal_peak_power);
        auto& db = m.region_power_db[i];
        db.resize(K + 1);
        for (std::size_t k = 0; k <= K; ++k) {
            const double r = m.ring_radii[i].radii[k];
            db[k] = power_db(r * r, m.nominal_peak_power);
        }
    }
    return m;
}

/*!
 * Angular mean of each p_k(u) by the trapezoidal rule on the map's grid.
 *
 * Normalized by the grid span, so a grid over [-1, 1] gives
 * (1/2) * integral of p_k du. A one-sample grid returns that column.
 */
inline std::vector<double> mean_probabilities(const ProbabilityMap& map) {
    const auto K = static_cast<std::size_t>(map.k_regions);
    const auto& g = map.grid;
    std::vector<double> mean(K, 0.0);
    if (g.size() == 1) {
        for (std::size_t k = 0; k < K; ++k) mean[k] = map.p[k][0];
        return mean;
    }
    const double span = g[g.size() - 1] - g[0];
    for (std::size_t k = 0; k < K; ++k) {
        double s = 0;
        for (std::size_t i = 0; i + 1 < g.size(); ++i) s += 0.5 * (g[i + 1] - g[i]) * (map.p[k][i] + map.p[k][i + 1]);
        mean[k] = s / span;
    }
    return mean;
}

//---------------------------------------------------------------------------//
struct DbInterval {
    double lo = 0;
    double hi = 0;
};

/*!
 * Peak (Gamma) and sidelobe-level intervals per probability region.
 *
 * Gamma_k are the region boundaries at the nominal peak direction u_max, and
 * p_k^Gamma is p_k(u_max). Sidelobe levels are taken outside the mainbeam,
 * relative to the IA-MS peak interval:
 *   SLL_k^inf = max P_k^inf(u) - Gamma^sup,
 *   SLL_k^sup = max P_k^sup(u) - Gamma^inf,
 * with each maximum located independently. p_k^SLL is the mean
 * probability, which it approaches as K grows.
 */
struct FeatureReport {
    int k_regions = 0;
    double u_max = 0;
    double mainbeam_lo = 0;  // first nominal minimum left of u_max
    double mainbeam_hi = 0;  // first nominal minimum right of u_max
    std::vector<DbInterval> gamma_intervals;
    std::vector<double> gamma_probs;
    std::vector<DbInterval> sll_intervals;
    std::vector<double> sll_probs;
    std::vector<double> mean_probs;
    DbInterval iams_gamma;
    DbInterval iams_sll;
    DbInterval nominal_sll;  // nominal SLL (both ends equal)
    bool degenerate = false;
};

struct Mainbeam {
    std::size_t peak = 0;
    std::size_t lo = 0;  // left minimum; equals peak when the peak has no left side
    std::size_t hi = 0;  // right minimum; equals peak when the peak has no right side

    // Samples belonging to the sidelobe region.
    bool outside(std::size_t i) const { return (lo < peak && i <= lo) || (hi > peak && i >= hi); }
};

// The mainbeam spans the samples strictly between the first local minima of
// the nominal pattern on either side of its peak.
inline Mainbeam find_mainbeam(std::span<const double> nominal_db) {
    if (nominal_db.size() < 3) throw ValidationError("features: grid too coarse to locate the mainbeam");
    Mainbeam mb;
    mb.peak = static_cast<std::size_t>(std::max_element(nominal_db.begin(), nominal_db.end()) - nominal_db.begin());
    mb.lo = mb.peak;
    while (mb.lo > 0 && nominal_db[mb.lo - 1] < nominal_db[mb.lo]) --mb.lo;
    mb.hi = mb.peak;
    while (mb.hi + 1 < nominal_db.size() && nominal_db[mb.hi + 1] < nominal_db[mb.hi]) ++mb.hi;
    if (mb.lo == mb.peak && mb.hi == mb.peak)
        throw ValidationError("features: grid too coarse to locate the mainbeam");
    return mb;
}

inline FeatureReport feature_report(const ProbabilityMap& map) {
    const auto K = static_cast<std::size_t>(map.k_regions);
    const std::size_t nu = map.grid.size();
    const auto mb = find_mainbeam(map.nominal_db);

    FeatureReport f;
    f.k_regions = map.k_regions;
    f.u_max = map.grid[mb.peak];
    f.mainbeam_lo = map.grid[mb.lo];
    f.mainbeam_hi = map.grid[mb.hi];
    f.degenerate = map.any_degenerate();
    f.mean_probs = mean_probabilities(map);
    f.sll_probs = f.mean_probs;

    const auto& peak_db = map.region_power_db[mb.peak];
    f.iams_gamma = {peak_db.front(), peak_db.back()};
    for (std::size_t k = 0; k < K; ++k) {
        f.gamma_intervals.push_back({peak_db[k], peak_db[k + 1]});
        f.gamma_probs.push_back(map.p[k][mb.peak]);
    }

    // Highest value of each boundary curve outside the mainbeam.
    std::vector<double> best(K + 1, kNegInfDb);
    double nominal_best = kNegInfDb;
    for (std::size_t i = 0; i < nu; ++i) {
        if (!mb.outside(i)) continue;
        for (std::size_t k = 0; k <= K; ++k) best[k] = std::max(best[k], map.region_power_db[i][k]);
        nominal_best = std::max(nominal_best, map.nominal_db[i]);
    }
    for (std::size_t k = 0; k < K; ++k)
        f.sll_intervals.push_back({best[k] - f.iams_gamma.hi, best[k + 1] - f.iams_gamma.lo});
    f.iams_sll = {best.front() - f.iams_gamma.hi, best.back() - f.iams_gamma.lo};
    f.nominal_sll = {nominal_best - map.nominal_db[mb.peak], nominal_best - map.nominal_db[mb.peak]};
    return f;
}

inline FeatureReport feature_report(const ArrayScenario& scenario, const AngularGrid& grid, int k_regions,
                                    int arc_points = kDefaultArcPoints, unsigned threads = 1) {
    return feature_report(probability_map(scenario, grid, k_regions, arc_points, threads));
}

}  // namespace pia
