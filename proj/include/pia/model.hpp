// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file model.hpp
//! Problem inputs: per-element excitation intervals, the array scenario and
//! the angular sampling grid.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pia/error.hpp"

namespace pia {

inline constexpr double kPi = std::numbers::pi;

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

//---------------------------------------------------------------------------//
/*!
 * Amplitude and phase tolerance interval of one array element.
 *
 * Phases are in radians. The phase interval must be narrower than pi so the
 * swept annular sector stays inside a half-plane.
 */
struct ExcitationInterval {
    double nominal_amplitude = 0;
    double nominal_phase = 0;
    double amplitude_lo = 0;
    double amplitude_hi = 0;
    double phase_lo = 0;
    double phase_hi = 0;

    double amplitude_width() const { return amplitude_hi - amplitude_lo; }
    double phase_width() const { return phase_hi - phase_lo; }
    bool is_degenerate() const { return amplitude_lo == amplitude_hi && phase_lo == phase_hi; }
};

// Throws ValidationError (prefixed with `what`) when an invariant is broken.
inline void validate(const ExcitationInterval& e, const std::string& what = "element") {
    auto fail = [&](const char* msg) { throw ValidationError(what + ": " + msg); };
    for (double v : {e.nominal_amplitude, e.nominal_phase, e.amplitude_lo, e.amplitude_hi,
                     e.phase_lo, e.phase_hi}) {
        if (!std::isfinite(v)) fail("non-finite value");
    }
    if (e.amplitude_lo < 0) fail("amplitude_lo must be >= 0");
    if (!(e.amplitude_lo <= e.nominal_amplitude && e.nominal_amplitude <= e.amplitude_hi))
        fail("amplitude interval must contain the nominal amplitude");
    if (!(e.phase_lo <= e.nominal_phase && e.nominal_phase <= e.phase_hi))
        fail("phase interval must contain the nominal phase");
    if (!(e.phase_width() < kPi)) fail("phase interval must be narrower than 180 degrees");
}

//---------------------------------------------------------------------------//
/*!
 * Linear array of isotropic elements with uniform spacing (in wavelengths).
 */
class ArrayScenario {
  public:
    ArrayScenario(std::vector<ExcitationInterval> elements, double spacing)
        : elements_(std::move(elements)), spacing_(spacing) {
        if (elements_.size() < 2) throw ValidationError("scenario: at least 2 elements required");
        if (!(spacing_ > 0) || !std::isfinite(spacing_))
            throw ValidationError("scenario: spacing must be > 0");
        for (std::size_t n = 0; n < elements_.size(); ++n)
            validate(elements_[n], "element " + std::to_string(n));
    }

    std::span<const ExcitationInterval> elements() const { return elements_; }
    const ExcitationInterval& operator[](std::size_t n) const { return elements_[n]; }
    std::size_t size() const { return elements_.size(); }
    double spacing() const { return spacing_; }

    // True when every element interval has zero width.
    bool is_degenerate() const {
        for (const auto& e : elements_)
            if (!e.is_degenerate()) return false;
        return true;
    }

    // Real, mirror-symmetric nominals with mirror-symmetric tolerance intervals.
    bool is_symmetric() const {
        const std::size_t n = elements_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& a = elements_[i];
            const auto& b = elements_[n - 1 - i];
            if (a.nominal_phase != 0 || a.phase_lo != -a.phase_hi) return false;
            if (a.nominal_amplitude != b.nominal_amplitude || a.amplitude_lo != b.amplitude_lo ||
                a.amplitude_hi != b.amplitude_hi || a.phase_hi != b.phase_hi)
                return false;
        }
        return true;
    }

  private:
    std::vector<ExcitationInterval> elements_;
    double spacing_;
};

//---------------------------------------------------------------------------//
/*!
 * Strictly increasing direction-cosine samples u = sin(theta) in [-1, 1].
 */
class AngularGrid {
  public:
    explicit AngularGrid(std::vector<double> samples) : samples_(std::move(samples)) {
        if (samples_.empty()) throw ValidationError("grid: no samples");
        for (std::size_t i = 0; i < samples_.size(); ++i) {
            if (!(samples_[i] >= -1.0 && samples_[i] <= 1.0))
                throw ValidationError("grid: sample outside [-1, 1]");
            if (i > 0 && !(samples_[i] > samples_[i - 1]))
                throw ValidationError("grid: samples must be strictly increasing");
        }
    }

    std::span<const double> samples() const { return samples_; }
    double operator[](std::size_t i) const { return samples_[i]; }
    std::size_t size() const { return samples_.size(); }

    // Index of the sample closest to u.
    std::size_t nearest(double u) const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < samples_.size(); ++i)
            if (std::abs(samples_[i] - u) < std::abs(samples_[best] - u)) best = i;
        return best;
    }

  private:
    std::vector<double> samples_;
};

struct NominalExcitation {
    double amplitude = 0;
    double phase = 0;  // radians
};

/*!
 * Symmetric tolerance intervals around each nominal excitation.
 *
 * `xi` is a relative amplitude deviation, so element n gets
 * [A_n (1 - xi), A_n (1 + xi)]; `gamma` is an absolute phase deviation in
 * radians.
 */
inline ArrayScenario scenario_from_tolerances(std::span<const NominalExcitation> nominals,
                                              double xi, double gamma, double spacing) {
    if (!(xi >= 0 && xi < 1)) throw ValidationError("xi must lie in [0, 1)");
    if (!(gamma >= 0 && gamma < kPi / 2)) throw ValidationError("gamma must lie in [0, pi/2)");
    std::vector<ExcitationInterval> elements;
    elements.reserve(nominals.size());
    for (std::size_t n = 0; n < nominals.size(); ++n) {
        const auto& w = nominals[n];
        if (!(w.amplitude >= 0))
            throw ValidationError("element " + std::to_string(n) + ": negative amplitude");
        elements.push_back({w.amplitude, w.phase, w.amplitude * (1 - xi), w.amplitude * (1 + xi),
                            w.phase - gamma, w.phase + gamma});
    }
    return ArrayScenario(std::move(elements), spacing);
}

// n equally spaced samples over [-1, 1], endpoints included and mirror-exact.
inline AngularGrid uniform_grid(std::size_t n_samples) {
    if (n_samples < 2) throw ValidationError("grid: at least 2 samples required");
    const auto last = static_cast<double>(n_samples - 1);
    std::vector<double> u(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i)
        u[i] = (2.0 * static_cast<double>(i) - last) / last;
    return AngularGrid(std::move(u));
}

}  // namespace pia
