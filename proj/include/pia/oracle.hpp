// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file oracle.hpp
//! Reference computations that share no code path with the geometry
//! kernel: slice quadrature for disc/polygon intersection areas and gift
//! wrapping for convex hulls. Used by the test suites and `validate`.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace pia::oracle {

using Point = std::complex<double>;

namespace detail {

// Vertical extent of a convex polygon at abscissa x; false if x misses it.
inline bool slice(std::span<const Point> poly, double x, double& ylo, double& yhi) {
    ylo = INFINITY;
    yhi = -INFINITY;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = poly[i], b = poly[(i + 1) % n];
        const double x0 = std::min(a.real(), b.real()), x1 = std::max(a.real(), b.real());
        if (x < x0 || x > x1) continue;
        if (x1 == x0) {
            ylo = std::min({ylo, a.imag(), b.imag()});
            yhi = std::max({yhi, a.imag(), b.imag()});
            continue;
        }
        const double t = (x - a.real()) / (b.real() - a.real());
        const double y = a.imag() + t * (b.imag() - a.imag());
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    }
    return ylo <= yhi;
}

inline constexpr std::array<double, 10> kGaussX{
    -0.9739065285171717, -0.8650633666889845, -0.6794095682990244, -0.4333953941292472, -0.1488743389816312,
    0.1488743389816312,  0.4333953941292472,  0.6794095682990244,  0.8650633666889845,  0.9739065285171717};
inline constexpr std::array<double, 10> kGaussW{
    0.0666713443086881, 0.1494513491505806, 0.2190863625159820, 0.2692667193099963, 0.2955242247147529,
    0.2955242247147529, 0.2692667193099963, 0.2190863625159820, 0.1494513491505806, 0.0666713443086881};

}  // namespace detail

/*!
 * Area of disc(0, r) intersected with a convex polygon (any orientation),
 * integrating the exact vertical slice length over x with composite
 * 10-point Gauss-Legendre panels. Intervals are split at every vertex
 * abscissa, at every edge/circle crossing and at +-r, so the integrand is
 * smooth inside each one. Intervals ending at +-r get `panels` panels for
 * the square-root endpoint; the rest get a share proportional to width.
 */
inline double disc_polygon_area(double r, std::span<const Point> poly, int panels = 200) {
    if (r <= 0 || poly.size() < 3) return 0;
    std::vector<double> cuts{-r, r};
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = poly[i], d = poly[(i + 1) % n] - a;
        cuts.push_back(a.real());
        const double qa = std::norm(d), qb = 2 * (a.real() * d.real() + a.imag() * d.imag()), qc = std::norm(a) - r * r;
        const double disc = qb * qb - 4 * qa * qc;
        if (qa == 0 || disc < 0) continue;
        for (double sgn : {-1.0, 1.0}) {
            const double t = (-qb + sgn * std::sqrt(disc)) / (2 * qa);
            if (t > 0 && t < 1) cuts.push_back(a.real() + t * d.real());
        }
    }
    std::sort(cuts.begin(), cuts.end());
    double xmin = INFINITY, xmax = -INFINITY;
    for (auto p : poly) {
        xmin = std::min(xmin, p.real());
        xmax = std::max(xmax, p.real());
    }
    const double lo = std::max(xmin, -r), hi = std::min(xmax, r);
    auto length = [&](double x) {
        double ylo, yhi;
        if (!detail::slice(poly, x, ylo, yhi)) return 0.0;
        const double s = std::sqrt(std::max(0.0, r * r - x * x));
        return std::max(0.0, std::min(yhi, s) - std::max(ylo, -s));
    };
    double area = 0;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double a = std::max(cuts[c], lo), b = std::min(cuts[c + 1], hi);
        if (!(b > a)) continue;
        const bool endpoint = a <= -r || b >= r;
        const int np = endpoint ? panels : std::max(4, static_cast<int>(std::ceil(panels * (b - a) / (2 * r))));
        const double h = (b - a) / np;
        for (int p = 0; p < np; ++p) {
            const double mid = a + (p + 0.5) * h;
            for (std::size_t g = 0; g < detail::kGaussX.size(); ++g)
                area += 0.5 * h * detail::kGaussW[g] * length(mid + 0.5 * h * detail::kGaussX[g]);
        }
    }
    return area;
}

inline double disc_triangle_area(double r, Point a, Point b, Point c, int panels = 200) {
    const std::array<Point, 3> t{a, b, c};
    return disc_polygon_area(r, t, panels);
}

// Convex hull by gift wrapping, counter-clockwise, collinear points dropped.
inline std::vector<Point> gift_wrap_hull(std::vector<Point> pts) {
    if (pts.size() < 3) return pts;
    auto cross = [](Point o, Point a, Point b) {
        return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
    };
    const auto start = *std::min_element(pts.begin(), pts.end(), [](Point a, Point b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    std::vector<Point> hull;
    Point cur = start;
    do {
        hull.push_back(cur);
        Point next = pts[0] == cur ? pts[1] : pts[0];
        for (auto p : pts) {
            if (p == cur) continue;
            const double c = cross(cur, next, p);
            if (c < 0 || (c == 0 && std::abs(p - cur) > std::abs(next - cur))) next = p;
        }
        cur = next;
    } while (cur != start && hull.size() <= pts.size());
    return hull;
}

inline double shoelace(std::span<const Point> poly) {
    double s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point a = poly[i], b = poly[(i + 1) % poly.size()];
        s += a.real() * b.imag() - a.imag() * b.real();
    }
    return 0.5 * std::abs(s);
}

}  // namespace pia::oracle
