// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file montecarlo.hpp
//! Seeded Monte Carlo reference: uniform excitation draws inside their
//! intervals, crisp patterns, empirical envelope and region frequencies.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "pia/iams.hpp"
#include "pia/model.hpp"
#include "pia/parallel.hpp"
#include "pia/pia.hpp"

namespace pia {

inline constexpr std::size_t kDefaultMcSamples = 100000;
inline constexpr std::size_t kHistogramBins = 200;
inline constexpr double kInclusionSlack = 1e-9;

//---------------------------------------------------------------------------//
/*!
 * SplitMix64 generator. Each Monte Carlo sample owns a stream keyed by
 * (seed, sample index), so results do not depend on scheduling.
 */
class SampleStream {
  public:
    using result_type = std::uint64_t;

    explicit SampleStream(std::uint64_t seed, std::uint64_t index = 0)
        : state_(mix(seed ^ mix(index + 0x632be59bd9b4e019ULL))) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform double in [0, 1).
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  private:
    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

// One realization: A ~ U[A_lo, A_hi], B ~ U[B_lo, B_hi], independent per element.
inline std::vector<ComplexPoint> sample_realization(const ArrayScenario& scenario, SampleStream& stream) {
    std::vector<ComplexPoint> w;
    w.reserve(scenario.size());
    for (const auto& e : scenario.elements()) {
        const double a = std::clamp(e.amplitude_lo + e.amplitude_width() * stream.uniform(), e.amplitude_lo,
                                    e.amplitude_hi);
        const double b = std::clamp(e.phase_lo + e.phase_width() * stream.uniform(), e.phase_lo, e.phase_hi);
        w.push_back(std::polar(a, b));
    }
    return w;
}

struct Histogram {
    double u = 0;
    double lo_db = 0;
    double hi_db = 0;
    std::vector<std::size_t> counts;

    double bin_width() const { return (hi_db - lo_db) / static_cast<double>(counts.size()); }
    bool operator==(const Histogram&) const = default;
};

struct McReport {
    std::size_t n_samples = 0;
    int k_regions = 0;
    std::vector<double> per_u_min, per_u_max;                 // linear power
    std::vector<std::vector<std::size_t>> region_counts;      // K x N_u
    std::vector<std::vector<double>> region_frequencies;      // K x N_u
    std::vector<int> mode_region;                             // zero-based, per direction
    std::vector<Histogram> histograms;                        // one per probe direction
    std::size_t inclusion_violations = 0;
    std::vector<double> total_variation;                      // per sample, vs the PIA map

    bool operator==(const McReport&) const = default;
};

// Zero-based annulus index of |AF| within the partition. A collapsed
// partition maps everything to region 0, matching the degenerate PIA column.
inline int region_index(const RingPartition& rp, double modulus) {
    const int K = rp.k_regions();
    if (rp.radii.front() == rp.radii.back()) return 0;
    const auto it = std::upper_bound(rp.radii.begin(), rp.radii.end(), modulus);
    const int k = static_cast<int>(it - rp.radii.begin()) - 1;
    return std::clamp(k, 0, K - 1);
}

namespace detail {

struct McAccumulator {
    std::vector<double> lo, hi;
    std::vector<std::vector<std::size_t>> counts;
    std::vector<std::vector<double>> probe_power;
    std::size_t violations = 0;
};

}  // namespace detail

/*!
 * Monte Carlo run paired with a probability map.
 *
 * Region assignment uses the map's ring radii per direction, and inclusion
 * violations are counted against the map's bounds with relative slack
 * kInclusionSlack. The report is identical for any thread count.
 */
inline McReport run_mc(const ArrayScenario& scenario, const ProbabilityMap& map, std::size_t n_samples,
                       std::uint64_t seed, std::span<const double> probe_u = {}, unsigned threads = 1) {
    if (n_samples < 1) throw ValidationError("monte carlo: at least one sample required");
    const std::size_t nu = map.grid.size();
    const std::size_t N = scenario.size();
    const auto K = static_cast<std::size_t>(map.k_regions);

    std::vector<ComplexPoint> steer(nu * N);
    for (std::size_t i = 0; i < nu; ++i)
        for (std::size_t n = 0; n < N; ++n)
            steer[i * N + n] = std::polar(1.0, steering_phase(scenario.spacing(), n, map.grid[i]));

    std::vector<std::size_t> probe_index;
    for (double u : probe_u) probe_index.push_back(map.grid.nearest(u));

    const std::size_t workers = std::clamp<std::size_t>(threads, 1, n_samples);
    std::vector<detail::McAccumulator> acc(workers);
    parallel_for(workers, static_cast<unsigned>(workers), [&](std::size_t w) {
        auto& a = acc[w];
        a.lo.assign(nu, std::numeric_limits<double>::infinity());
        a.hi.assign(nu, 0.0);
        a.counts.assign(K, std::vector<std::size_t>(nu, 0));
        a.probe_power.assign(probe_index.size(), {});
        const std::size_t begin = n_samples * w / workers, end = n_samples * (w + 1) / workers;
        for (std::size_t s = begin; s < end; ++s) {
            SampleStream stream(seed, s);
            const auto weights = sample_realization(scenario, stream);
            for (std::size_t i = 0; i < nu; ++i) {
                ComplexPoint af = 0;
                for (std::size_t n = 0; n < N; ++n) af += weights[n] * steer[i * N + n];
                const double power = std::norm(af);
                a.lo[i] = std::min(a.lo[i], power);
                a.hi[i] = std::max(a.hi[i], power);
                const auto& rp = map.ring_radii[i];
                const double b_lo = rp.radii.front() * rp.radii.front();
                const double b_hi = rp.radii.back() * rp.radii.back();
                if (power < b_lo * (1 - kInclusionSlack) || power > b_hi * (1 + kInclusionSlack)) ++a.violations;
                ++a.counts[static_cast<std::size_t>(region_index(rp, std::sqrt(power)))][i];
            }
            for (std::size_t j = 0; j < probe_index.size(); ++j) {
                ComplexPoint af = 0;
                for (std::size_t n = 0; n < N; ++n) af += weights[n] * steer[probe_index[j] * N + n];
                a.probe_power[j].push_back(std::norm(af));
            }
        }
    });

    McReport r;
    r.n_samples = n_samples;
    r.k_regions = map.k_regions;
    r.per_u_min.assign(nu, std::numeric_limits<double>::infinity());
    r.per_u_max.assign(nu, 0.0);
    r.region_counts.assign(K, std::vector<std::size_t>(nu, 0));
    std::vector<std::vector<double>> probe_power(probe_index.size());
    for (const auto& a : acc) {
        if (a.lo.empty()) continue;
        for (std::size_t i = 0; i < nu; ++i) {
            r.per_u_min[i] = std::min(r.per_u_min[i], a.lo[i]);
            r.per_u_max[i] = std::max(r.per_u_max[i], a.hi[i]);
            for (std::size_t k = 0; k < K; ++k) r.region_counts[k][i] += a.counts[k][i];
        }
        r.inclusion_violations += a.violations;
        for (std::size_t j = 0; j < probe_index.size(); ++j)
            probe_power[j].insert(probe_power[j].end(), a.probe_power[j].begin(), a.probe_power[j].end());
    }

    const auto total = static_cast<double>(n_samples);
    r.region_frequencies.assign(K, std::vector<double>(nu, 0.0));
    r.mode_region.assign(nu, 0);
    r.total_variation.assign(nu, 0.0);
    for (std::size_t i = 0; i < nu; ++i) {
        std::size_t best = 0;
        double tv = 0;
        for (std::size_t k = 0; k < K; ++k) {
            r.region_frequencies[k][i] = static_cast<double>(r.region_counts[k][i]) / total;
            if (r.region_counts[k][i] > r.region_counts[best][i]) best = k;
            tv += std::abs(r.region_frequencies[k][i] - map.p[k][i]);
        }
        r.mode_region[i] = static_cast<int>(best);
        r.total_variation[i] = 0.5 * tv;
    }

    // Bins span the PIA bounds widened by 1 dB; a -inf lower bound falls back
    // to the empirical minimum.
    for (std::size_t j = 0; j < probe_index.size(); ++j) {
        const std::size_t i = probe_index[j];
        Histogram h;
        h.u = map.grid[i];
        double lo_db = map.p_lo_db(i);
        if (!std::isfinite(lo_db)) lo_db = power_db(r.per_u_min[i], map.nominal_peak_power);
        if (!std::isfinite(lo_db)) lo_db = map.p_hi_db(i) - 100.0;
        h.lo_db = lo_db - 1.0;
        h.hi_db = map.p_hi_db(i) + 1.0;
        h.counts.assign(kHistogramBins, 0);
        const double width = h.bin_width();
        for (double p : probe_power[j]) {
            const double db = power_db(p, map.nominal_peak_power);
            double pos = std::isfinite(db) ? (db - h.lo_db) / width : 0.0;
            const auto bin = static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(kHistogramBins - 1)));
            ++h.counts[bin];
        }
        r.histograms.push_back(std::move(h));
    }
    return r;
}

// Convenience overload that builds the paired probability map.
inline McReport run_mc(const ArrayScenario& scenario, const AngularGrid& grid, int k_regions, std::size_t n_samples,
                       std::uint64_t seed, int arc_points = kDefaultArcPoints, unsigned threads = 1) {
    return run_mc(scenario, probability_map(scenario, grid, k_regions, arc_points, threads), n_samples, seed, {},
                  threads);
}

}  // namespace pia
