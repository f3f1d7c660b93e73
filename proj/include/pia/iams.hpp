// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file iams.hpp
//! Interval array factor as a Minkowski sum of interval phasors, and the
//! inclusive power-pattern bounds derived from it.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "pia/geometry.hpp"
#include "pia/model.hpp"
#include "pia/parallel.hpp"

namespace pia {

inline constexpr double kNegInfDb = -std::numeric_limits<double>::infinity();
inline constexpr int kDefaultArcPoints = 8;

// Power ratio in dB; zero maps to the -inf sentinel.
inline double power_db(double power, double reference) {
    return power > 0 ? 10.0 * std::log10(power / reference) : kNegInfDb;
}

// Inter-element steering phase 2 pi (d / lambda) n u for zero-based index n.
inline double steering_phase(double spacing, std::size_t n, double u) {
    return std::remainder(2.0 * kPi * spacing * static_cast<double>(n) * u, 2.0 * kPi);
}

inline ComplexPoint nominal_af(const ArrayScenario& scenario, double u) {
    ComplexPoint sum = 0;
    for (std::size_t n = 0; n < scenario.size(); ++n) {
        const auto& e = scenario[n];
        sum += std::polar(e.nominal_amplitude, e.nominal_phase + steering_phase(scenario.spacing(), n, u));
    }
    return sum;
}

struct IntervalAF {
    double u = 0;
    ConvexPolygon region;
    double modulus_lo = 0;
    double modulus_hi = 0;
};

inline IntervalAF interval_af(const ArrayScenario& scenario, double u, int arc_points = kDefaultArcPoints) {
    if (!(std::abs(u) <= 1)) throw ValidationError("interval_af: |u| must be <= 1");
    ConvexPolygon region({ComplexPoint{0, 0}});
    for (std::size_t n = 0; n < scenario.size(); ++n) {
        const auto& e = scenario[n];
        const double shift = steering_phase(scenario.spacing(), n, u);
        region = minkowski_sum(region, polygonize_interval_phasor(e.amplitude_lo, e.amplitude_hi,
                                                                  e.phase_lo + shift, e.phase_hi + shift,
                                                                  arc_points));
    }
    const auto d = distance_bounds_to_origin(region);
    return {u, std::move(region), d.min_dist, d.max_dist};
}

//---------------------------------------------------------------------------//
/*!
 * Inclusive bounds of |AF(u)|^2 over a grid.
 *
 * dB values are relative to the nominal pattern's peak over the grid.
 */
struct PowerBoundsCurve {
    AngularGrid grid;
    std::vector<double> p_lo, p_hi;          // linear |AF|^2
    std::vector<double> p_lo_db, p_hi_db;    // -inf sentinel allowed
    std::vector<double> nominal_power;
    std::vector<double> nominal_db;
    std::vector<double> modulus_lo, modulus_hi;
    std::vector<std::size_t> n_vertices;
    double nominal_peak_power = 0;
};

inline PowerBoundsCurve power_bounds(const ArrayScenario& scenario, const AngularGrid& grid,
                                     int arc_points = kDefaultArcPoints, unsigned threads = 1) {
    const std::size_t nu = grid.size();
    PowerBoundsCurve c{grid, {}, {}, {}, {}, {}, {}, {}, {}, {}, 0};
    c.p_lo.resize(nu);
    c.p_hi.resize(nu);
    c.modulus_lo.resize(nu);
    c.modulus_hi.resize(nu);
    c.n_vertices.resize(nu);
    c.nominal_power.resize(nu);
    parallel_for(nu, threads, [&](std::size_t i) {
        const auto iaf = interval_af(scenario, grid[i], arc_points);
        c.modulus_lo[i] = iaf.modulus_lo;
        c.modulus_hi[i] = iaf.modulus_hi;
        c.p_lo[i] = iaf.modulus_lo * iaf.modulus_lo;
        c.p_hi[i] = iaf.modulus_hi * iaf.modulus_hi;
        c.n_vertices[i] = iaf.region.size();
        c.nominal_power[i] = std::norm(nominal_af(scenario, grid[i]));
    });
    c.nominal_peak_power = *std::max_element(c.nominal_power.begin(), c.nominal_power.end());
    if (!(c.nominal_peak_power > 0)) throw ValidationError("power_bounds: nominal pattern is identically zero");
    for (std::size_t i = 0; i < nu; ++i) {
        c.p_lo_db.push_back(power_db(c.p_lo[i], c.nominal_peak_power));
        c.p_hi_db.push_back(power_db(c.p_hi[i], c.nominal_peak_power));
        c.nominal_db.push_back(power_db(c.nominal_power[i], c.nominal_peak_power));
    }
    return c;
}

}  // namespace pia
