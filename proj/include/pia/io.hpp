// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file io.hpp
//! CSV and JSON emission. Numbers use the shortest round-trip decimal form;
//! -inf is written as the literal token `-inf`.
//---------------------------------------------------------------------------//
#pragma once

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <system_error>

#include <nlohmann/json.hpp>

#include "pia/iams.hpp"
#include "pia/montecarlo.hpp"
#include "pia/pia.hpp"

namespace pia::io {

inline std::string format_number(double v) {
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    if (std::isnan(v)) return "nan";
    if (v == 0) v = 0;  // no "-0"
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline nlohmann::json json_number(double v) {
    if (std::isfinite(v)) return v;
    return format_number(v);
}

inline nlohmann::json to_json(const DbInterval& d) { return nlohmann::json::array({json_number(d.lo), json_number(d.hi)}); }

// u, p_lo_db, p_hi_db, nominal_db, modulus_lo, modulus_hi, n_vertices
inline void write_bounds_csv(std::ostream& os, const PowerBoundsCurve& c) {
    os << "u,p_lo_db,p_hi_db,nominal_db,modulus_lo,modulus_hi,n_vertices\n";
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
        os << format_number(c.grid[i]) << ',' << format_number(c.p_lo_db[i]) << ',' << format_number(c.p_hi_db[i])
           << ',' << format_number(c.nominal_db[i]) << ',' << format_number(c.modulus_lo[i]) << ','
           << format_number(c.modulus_hi[i]) << ',' << c.n_vertices[i] << '\n';
    }
}

// u, k, p_lo_db, p_hi_db, p_k  (k is one-based)
inline void write_pia_csv(std::ostream& os, const ProbabilityMap& m) {
    os << "u,k,p_lo_db,p_hi_db,p_k\n";
    for (std::size_t i = 0; i < m.grid.size(); ++i)
        for (std::size_t k = 0; k < static_cast<std::size_t>(m.k_regions); ++k)
            os << format_number(m.grid[i]) << ',' << (k + 1) << ',' << format_number(m.region_power_db[i][k]) << ','
               << format_number(m.region_power_db[i][k + 1]) << ',' << format_number(m.p[k][i]) << '\n';
}

inline nlohmann::json features_json(const FeatureReport& f) {
    using nlohmann::json;
    json regions = json::array();
    for (std::size_t k = 0; k < f.gamma_intervals.size(); ++k) {
        regions.push_back({{"k", k + 1},
                           {"sll_db", to_json(f.sll_intervals[k])},
                           {"p_sll", f.sll_probs[k]},
                           {"gamma_db", to_json(f.gamma_intervals[k])},
                           {"p_gamma", f.gamma_probs[k]},
                           {"mean_prob", f.mean_probs[k]}});
    }
    json mean = json::array();
    for (double p : f.mean_probs) mean.push_back(p);
    return {{"k_regions", f.k_regions},
            {"u_max", f.u_max},
            {"mainbeam_u", json::array({f.mainbeam_lo, f.mainbeam_hi})},
            {"regions", regions},
            {"mean_probs", mean},
            {"iams", {{"sll_db", to_json(f.iams_sll)}, {"gamma_db", to_json(f.iams_gamma)}}},
            {"nominal_sll_db", json_number(f.nominal_sll.lo)},
            {"degenerate", f.degenerate}};
}

// u, mc_min_db, mc_max_db, p_lo_db, p_hi_db
inline void write_mc_envelope_csv(std::ostream& os, const McReport& r, const ProbabilityMap& m) {
    os << "u,mc_min_db,mc_max_db,p_lo_db,p_hi_db\n";
    for (std::size_t i = 0; i < m.grid.size(); ++i)
        os << format_number(m.grid[i]) << ',' << format_number(power_db(r.per_u_min[i], m.nominal_peak_power)) << ','
           << format_number(power_db(r.per_u_max[i], m.nominal_peak_power)) << ',' << format_number(m.p_lo_db(i))
           << ',' << format_number(m.p_hi_db(i)) << '\n';
}

// u, k, mc_freq, pia_p  (k is one-based)
inline void write_mc_frequency_csv(std::ostream& os, const McReport& r, const ProbabilityMap& m) {
    os << "u,k,mc_freq,pia_p\n";
    for (std::size_t i = 0; i < m.grid.size(); ++i)
        for (std::size_t k = 0; k < static_cast<std::size_t>(m.k_regions); ++k)
            os << format_number(m.grid[i]) << ',' << (k + 1) << ',' << format_number(r.region_frequencies[k][i]) << ','
               << format_number(m.p[k][i]) << '\n';
}

// bin_lo_db, bin_hi_db, count
inline void write_histogram_csv(std::ostream& os, const Histogram& h) {
    os << "bin_lo_db,bin_hi_db,count\n";
    const double w = h.bin_width();
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
        const double lo = h.lo_db + w * static_cast<double>(b);
        const double hi = b + 1 == h.counts.size() ? h.hi_db : h.lo_db + w * static_cast<double>(b + 1);
        os << format_number(lo) << ',' << format_number(hi) << ',' << h.counts[b] << '\n';
    }
}

}  // namespace pia::io
