// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file config.hpp
//! JSON scenario documents.
//!
//! {
//!   "spacing_wavelengths": 0.5,
//!   "xi_percent": 1.0, "gamma_deg": 3.0,
//!   "elements": [{"amplitude": 0.365, "phase_deg": 0.0,
//!                 "amplitude_lo": ..., "amplitude_hi": ...,
//!                 "phase_lo_deg": ..., "phase_hi_deg": ...}, ...],
//!   "k_regions": 5, "n_u": 501, "arc_points": 8,
//!   "mc_samples": 100000, "seed": 1, "probe_u": [-0.336]
//! }
//!
//! Explicit endpoints override xi/gamma for that element.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pia/error.hpp"
#include "pia/iams.hpp"
#include "pia/model.hpp"

namespace pia {

struct ScenarioConfig {
    ArrayScenario scenario;
    int k_regions = 5;
    std::size_t n_u = 501;
    int arc_points = kDefaultArcPoints;
    std::optional<std::size_t> mc_samples;
    std::optional<std::uint64_t> seed;
    std::vector<double> probe_u;
};

namespace detail {

inline double number(const nlohmann::json& j, const std::string& field) {
    if (!j.is_number()) throw ConfigError(field, "expected a number");
    return j.get<double>();
}

template <class T>
T count(const nlohmann::json& doc, const std::string& field, T fallback) {
    if (!doc.contains(field)) return fallback;
    const auto& j = doc.at(field);
    if (!j.is_number_integer() && !j.is_number_unsigned()) throw ConfigError(field, "expected an integer");
    const auto v = j.get<long long>();
    if (v < 1) throw ConfigError(field, "must be positive");
    return static_cast<T>(v);
}

inline std::optional<double> optional_number(const nlohmann::json& obj, const std::string& key,
                                             const std::string& field) {
    if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
    return number(obj.at(key), field);
}

}  // namespace detail

inline ScenarioConfig parse_config(const nlohmann::json& doc) {
    using detail::number;
    using detail::optional_number;
    if (!doc.is_object()) throw ConfigError("<root>", "expected a JSON object");
    if (!doc.contains("spacing_wavelengths")) throw ConfigError("spacing_wavelengths", "missing");
    const double spacing = number(doc.at("spacing_wavelengths"), "spacing_wavelengths");
    if (!(spacing > 0)) throw ConfigError("spacing_wavelengths", "must be > 0");

    const double xi = optional_number(doc, "xi_percent", "xi_percent").value_or(0.0) / 100.0;
    const double gamma = deg_to_rad(optional_number(doc, "gamma_deg", "gamma_deg").value_or(0.0));
    if (!(xi >= 0 && xi < 1)) throw ConfigError("xi_percent", "must lie in [0, 100)");
    if (!(gamma >= 0 && gamma < kPi / 2)) throw ConfigError("gamma_deg", "must lie in [0, 90)");

    if (!doc.contains("elements") || !doc.at("elements").is_array())
        throw ConfigError("elements", "missing or not an array");
    const auto& elems = doc.at("elements");
    if (elems.size() < 2) throw ConfigError("elements", "at least 2 elements required");

    std::vector<ExcitationInterval> intervals;
    for (std::size_t n = 0; n < elems.size(); ++n) {
        const std::string base = "elements[" + std::to_string(n) + "]";
        const auto& e = elems[n];
        if (!e.is_object()) throw ConfigError(base, "expected an object");
        if (!e.contains("amplitude")) throw ConfigError(base + ".amplitude", "missing");
        const double a = number(e.at("amplitude"), base + ".amplitude");
        if (!(a >= 0)) throw ConfigError(base + ".amplitude", "negative amplitude");
        const double b = deg_to_rad(optional_number(e, "phase_deg", base + ".phase_deg").value_or(0.0));
        ExcitationInterval x;
        x.nominal_amplitude = a;
        x.nominal_phase = b;
        x.amplitude_lo = optional_number(e, "amplitude_lo", base + ".amplitude_lo").value_or(a * (1 - xi));
        x.amplitude_hi = optional_number(e, "amplitude_hi", base + ".amplitude_hi").value_or(a * (1 + xi));
        const auto plo = optional_number(e, "phase_lo_deg", base + ".phase_lo_deg");
        const auto phi = optional_number(e, "phase_hi_deg", base + ".phase_hi_deg");
        x.phase_lo = plo ? deg_to_rad(*plo) : b - gamma;
        x.phase_hi = phi ? deg_to_rad(*phi) : b + gamma;
        try {
            validate(x, base);
        } catch (const ValidationError& err) {
            throw ConfigError(base, err.what());
        }
        intervals.push_back(x);
    }

    ScenarioConfig cfg{ArrayScenario(std::move(intervals), spacing), 5, 501, kDefaultArcPoints, {}, {}, {}};
    cfg.k_regions = detail::count<int>(doc, "k_regions", 5);
    cfg.n_u = detail::count<std::size_t>(doc, "n_u", 501);
    if (cfg.n_u < 2) throw ConfigError("n_u", "must be >= 2");
    cfg.arc_points = detail::count<int>(doc, "arc_points", kDefaultArcPoints);
    if (cfg.arc_points < 2) throw ConfigError("arc_points", "must be >= 2");
    if (doc.contains("mc_samples")) cfg.mc_samples = detail::count<std::size_t>(doc, "mc_samples", 1);
    if (doc.contains("seed")) {
        const auto& s = doc.at("seed");
        if (!s.is_number_integer() || s.get<long long>() < 0) throw ConfigError("seed", "expected a non-negative integer");
        cfg.seed = s.get<std::uint64_t>();
    }
    if (doc.contains("probe_u")) {
        const auto& p = doc.at("probe_u");
        if (!p.is_array()) throw ConfigError("probe_u", "expected an array");
        for (std::size_t i = 0; i < p.size(); ++i) {
            const double u = number(p[i], "probe_u[" + std::to_string(i) + "]");
            if (!(u >= -1 && u <= 1)) throw ConfigError("probe_u[" + std::to_string(i) + "]", "must lie in [-1, 1]");
            cfg.probe_u.push_back(u);
        }
    }
    return cfg;
}

inline ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("--config", "cannot open " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("--config", std::string("malformed JSON: ") + e.what());
    }
    return parse_config(doc);
}

}  // namespace pia
