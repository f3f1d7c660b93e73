// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file geometry.hpp
//! Convex polygons in the complex plane: interval-phasor polygonization,
//! Minkowski sums, origin distance bounds, fan triangulation, and exact
//! areas of origin-centred discs intersected with triangles.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pia/error.hpp"
#include "pia/model.hpp"

namespace pia {

using ComplexPoint = std::complex<double>;

// Tolerance for orientation and containment predicates.
inline constexpr double kGeomEps = 1e-9;
// Relative band around r^2 inside which a vertex is treated as on the circle.
inline constexpr double kOnCircleSlack = 1e-10;

inline double cross(ComplexPoint a, ComplexPoint b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(ComplexPoint a, ComplexPoint b) { return a.real() * b.real() + a.imag() * b.imag(); }

namespace detail {

inline bool lower_left(ComplexPoint a, ComplexPoint b) {
    return a.imag() < b.imag() || (a.imag() == b.imag() && a.real() < b.real());
}

// 0 for directions in [0, pi), 1 for [pi, 2 pi).
inline int half_plane(ComplexPoint e) {
    return (e.imag() > 0 || (e.imag() == 0 && e.real() > 0)) ? 0 : 1;
}

// Polar-angle order of edge vectors starting from the +x axis.
inline bool angle_less(ComplexPoint a, ComplexPoint b) {
    const int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

inline double point_segment_distance(ComplexPoint p, ComplexPoint a, ComplexPoint b) {
    const ComplexPoint ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0) return std::abs(p - a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

}  // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Counter-clockwise convex polygon.
 *
 * Vertices are normalized on construction: duplicates and collinear
 * vertices are merged and the list starts at the lowest (then leftmost)
 * vertex. One vertex is a point, two a segment.
 */
class ConvexPolygon {
  public:
    ConvexPolygon() = default;

    // From vertices already in counter-clockwise convex order.
    explicit ConvexPolygon(std::vector<ComplexPoint> ccw_vertices) {
        if (ccw_vertices.empty()) throw ValidationError("polygon: no vertices");
        for (auto v : ccw_vertices)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw ValidationError("polygon: non-finite vertex");
        vertices_ = normalize(std::move(ccw_vertices));
    }

    // Convex hull of an arbitrary point set (monotone chain).
    static ConvexPolygon hull(std::vector<ComplexPoint> pts) {
        if (pts.empty()) throw ValidationError("polygon: no points");
        std::sort(pts.begin(), pts.end(), [](ComplexPoint a, ComplexPoint b) {
            return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
        });
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() < 3) return ConvexPolygon(std::move(pts));
        std::vector<ComplexPoint> h(2 * pts.size());
        std::size_t k = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
            h[k++] = pts[i];
        }
        for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
            while (k >= t && cross(h[k - 1] - h[k - 2], pts[i - 1] - h[k - 2]) <= 0) --k;
            h[k++] = pts[i - 1];
        }
        h.resize(k - 1);
        return ConvexPolygon(std::move(h));
    }

    std::span<const ComplexPoint> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const ComplexPoint& operator[](std::size_t i) const { return vertices_[i]; }
    bool is_point() const { return vertices_.size() == 1; }
    bool is_segment() const { return vertices_.size() == 2; }
    bool is_proper() const { return vertices_.size() >= 3; }

    double area() const {
        double s = 0;
        for (std::size_t i = 0, n = vertices_.size(); i < n; ++i)
            s += cross(vertices_[i], vertices_[(i + 1) % n]);
        return 0.5 * s;
    }

    // Closed containment with slack kGeomEps.
    bool contains(ComplexPoint p) const {
        const std::size_t n = vertices_.size();
        if (n == 1) return std::abs(p - vertices_[0]) <= kGeomEps;
        if (n == 2) return detail::point_segment_distance(p, vertices_[0], vertices_[1]) <= kGeomEps;
        for (std::size_t i = 0; i < n; ++i) {
            const ComplexPoint e = vertices_[(i + 1) % n] - vertices_[i];
            if (cross(e, p - vertices_[i]) < -kGeomEps * std::abs(e)) return false;
        }
        return true;
    }

  private:
    static bool near_same(ComplexPoint a, ComplexPoint b) {
        return std::abs(a - b) <= 1e-14 * std::max({1.0, std::abs(a), std::abs(b)});
    }

    // One scan over the cyclic list: drops duplicates and collinear
    // continuations, rejects reflex turns beyond tolerance.
    static std::vector<ComplexPoint> normalize(std::vector<ComplexPoint> v) {
        std::vector<ComplexPoint> d;
        d.reserve(v.size());
        for (auto p : v)
            if (d.empty() || !near_same(d.back(), p)) d.push_back(p);
        while (d.size() >= 2 && near_same(d.front(), d.back())) d.pop_back();
        if (d.size() <= 1) return d;
        std::rotate(d.begin(), std::min_element(d.begin(), d.end(), detail::lower_left), d.end());

        std::vector<ComplexPoint> out;
        out.reserve(d.size() + 1);
        auto push = [&out](ComplexPoint p) {
            while (out.size() >= 2) {
                const ComplexPoint e1 = out.back() - out[out.size() - 2];
                const ComplexPoint e2 = p - out.back();
                const double c = cross(e1, e2);
                const double s = std::abs(e1) * std::abs(e2);
                if (c > kGeomEps * s) break;
                if (c < -kGeomEps * s)
                    throw ValidationError("polygon: vertices are not convex counter-clockwise");
                if (dot(e1, e2) > 0) {
                    out.pop_back();
                    continue;
                }
                break;  // collinear fold-back of a degenerate sliver
            }
            out.push_back(p);
        };
        for (auto p : d) push(p);
        push(d.front());
        out.pop_back();
        // The start vertex itself may sit on a straight run.
        while (out.size() >= 3) {
            const ComplexPoint e1 = out[0] - out.back();
            const ComplexPoint e2 = out[1] - out[0];
            if (std::abs(cross(e1, e2)) > kGeomEps * std::abs(e1) * std::abs(e2) || dot(e1, e2) <= 0) break;
            out.erase(out.begin());
        }
        std::rotate(out.begin(), std::min_element(out.begin(), out.end(), detail::lower_left), out.end());
        return out;
    }

    std::vector<ComplexPoint> vertices_;
};

//---------------------------------------------------------------------------//
struct Triangle {
    ComplexPoint v1, v2, v3;

    Triangle() = default;
    Triangle(ComplexPoint a, ComplexPoint b, ComplexPoint c) : v1(a), v2(b), v3(c) {
        if (cross(v2 - v1, v3 - v1) < 0) std::swap(v2, v3);
    }

    std::array<ComplexPoint, 3> vertices() const { return {v1, v2, v3}; }
    double signed_area() const { return 0.5 * cross(v2 - v1, v3 - v1); }
};

//---------------------------------------------------------------------------//
/*!
 * Convex polygon enclosing the annular sector a e^{jb},
 * a in [amp_lo, amp_hi], b in [phase_lo, phase_hi].
 *
 * The outer arc is circumscribed by M tangent segments of angular step
 * D = width / M (vertices at radius amp_hi / cos(D/2)); the inner arc is
 * replaced by its chord. Both keep the exact sector inside the polygon.
 */
inline ConvexPolygon polygonize_interval_phasor(double amp_lo, double amp_hi, double phase_lo,
                                                double phase_hi, int arc_points) {
    if (!(amp_lo >= 0 && amp_lo <= amp_hi) || !std::isfinite(amp_hi))
        throw ValidationError("interval phasor: need 0 <= amp_lo <= amp_hi");
    if (!(phase_lo <= phase_hi && phase_hi - phase_lo < kPi))
        throw ValidationError("interval phasor: phase interval must be narrower than 180 degrees");
    if (arc_points < 2) throw ValidationError("interval phasor: arc_points must be >= 2");

    const double width = phase_hi - phase_lo;
    if (width == 0 || amp_hi == 0) {
        const ComplexPoint dir = std::polar(1.0, phase_lo);
        if (amp_lo == amp_hi) return ConvexPolygon({amp_lo * dir});
        return ConvexPolygon({amp_lo * dir, amp_hi * dir});
    }

    const double step = width / arc_points;
    const double outer = amp_hi / std::cos(step / 2);
    std::vector<ComplexPoint> pts;
    pts.reserve(static_cast<std::size_t>(arc_points) + 4);
    pts.push_back(std::polar(amp_hi, phase_lo));
    for (int i = 0; i < arc_points; ++i) pts.push_back(std::polar(outer, phase_lo + (i + 0.5) * step));
    pts.push_back(std::polar(amp_hi, phase_hi));
    if (amp_lo > 0) {
        pts.push_back(std::polar(amp_lo, phase_hi));
        pts.push_back(std::polar(amp_lo, phase_lo));
    } else {
        pts.push_back(0.0);
    }
    return ConvexPolygon::hull(std::move(pts));
}

/*!
 * Minkowski sum by merging the operands' edge sequences in polar-angle order.
 * Linear in the total vertex count; a point operand is a translation.
 */
inline ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
    const auto a = p.vertices();
    const auto b = q.vertices();
    const std::size_t na = a.size(), nb = b.size();
    const std::size_t ea = na == 1 ? 0 : na;
    const std::size_t eb = nb == 1 ? 0 : nb;
    auto edge_a = [&](std::size_t i) { return a[(i + 1) % na] - a[i]; };
    auto edge_b = [&](std::size_t j) { return b[(j + 1) % nb] - b[j]; };

    std::vector<ComplexPoint> out;
    out.reserve(ea + eb + 1);
    ComplexPoint cur = a[0] + b[0];
    out.push_back(cur);
    std::size_t i = 0, j = 0;
    while (i < ea || j < eb) {
        if (j == eb || (i < ea && detail::angle_less(edge_a(i), edge_b(j)))) {
            cur += edge_a(i++);
        } else if (i == ea || detail::angle_less(edge_b(j), edge_a(i))) {
            cur += edge_b(j++);
        } else {
            cur += edge_a(i++) + edge_b(j++);
        }
        out.push_back(cur);
    }
    if (out.size() > 1) out.pop_back();  // closes back onto the start vertex
    return ConvexPolygon(std::move(out));
}

struct DistanceBounds {
    double min_dist = 0;
    double max_dist = 0;
};

// Nearest and farthest distance of the polygon from the origin.
inline DistanceBounds distance_bounds_to_origin(const ConvexPolygon& p) {
    DistanceBounds d;
    for (auto v : p.vertices()) d.max_dist = std::max(d.max_dist, std::abs(v));
    const std::size_t n = p.size();
    if (n == 1) {
        d.min_dist = std::abs(p[0]);
        return d;
    }
    if (n >= 3 && p.contains(0.0)) {
        d.min_dist = 0;
        return d;
    }
    d.min_dist = d.max_dist;
    const std::size_t edges = n == 2 ? 1 : n;
    for (std::size_t i = 0; i < edges; ++i)
        d.min_dist = std::min(d.min_dist, detail::point_segment_distance(0.0, p[i], p[(i + 1) % n]));
    return d;
}

// Fan from vertex 0. Degenerate polygons give no triangles.
inline std::vector<Triangle> triangulate(const ConvexPolygon& p) {
    std::vector<Triangle> tris;
    if (p.size() < 3) return tris;
    tris.reserve(p.size() - 2);
    for (std::size_t i = 1; i + 1 < p.size(); ++i) tris.emplace_back(p[0], p[i], p[i + 1]);
    return tris;
}

// Gauss (shoelace) area, absolute value.
inline double polygon_area(std::span<const ComplexPoint> pts) {
    const std::size_t m = pts.size();
    if (m < 3) return 0;
    double s = 0;
    for (std::size_t i = 0; i < m; ++i) s += cross(pts[i], pts[(i + 1) % m]);
    return 0.5 * std::abs(s);
}

// Heron's formula, evaluated in Kahan's cancellation-free ordering.
inline double triangle_area_heron(double e1, double e2, double e3) {
    std::array<double, 3> e{e1, e2, e3};
    for (double x : e)
        if (!(x >= 0) || !std::isfinite(x)) throw ValidationError("heron: edge lengths must be >= 0");
    std::sort(e.begin(), e.end(), std::greater<>());
    const double a = e[0], b = e[1], c = e[2];
    const double excess = a - (b + c);
    if (excess > kGeomEps * std::max(1.0, a)) throw ValidationError("heron: triangle inequality violated");
    if (excess >= 0) return 0;
    const double prod = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    return prod > 0 ? 0.25 * std::sqrt(prod) : 0.0;
}

inline double triangle_area_heron(const Triangle& t) {
    return triangle_area_heron(std::abs(t.v2 - t.v1), std::abs(t.v3 - t.v2), std::abs(t.v1 - t.v3));
}

/*!
 * Area between the chord a1-a2 and the minor arc of the origin-centred
 * circle of radius r.
 */
inline double circular_segment_area(double r, ComplexPoint a1, ComplexPoint a2) {
    const double tol = kGeomEps * std::max(1.0, r);
    if (std::abs(std::abs(a1) - r) > tol || std::abs(std::abs(a2) - r) > tol)
        throw ValidationError("circular segment: chord endpoints must lie on the circle");
    const double c = std::abs(a1 - a2);
    if (c == 0 || r == 0) return 0;
    const double half = std::min(c / 2, r);
    return r * r * std::asin(half / r) - half * std::sqrt(std::max(0.0, r * r - half * half));
}

namespace detail {

// Parameters t1 <= t2 where |p + t (q - p)| = r, if the line crosses the circle.
struct ChordHit {
    bool crosses = false;
    double t1 = 0, t2 = 0;
};

inline ChordHit line_circle(ComplexPoint p, ComplexPoint q, double r) {
    const ComplexPoint d = q - p;
    const double a = std::norm(d);
    if (a == 0) return {};
    const double b = dot(p, d);
    const double c = std::norm(p) - r * r;
    const double disc = b * b - a * c;
    if (!(disc > 0)) return {};  // tangency counts as no crossing
    const double s = std::sqrt(disc);
    // Stable roots.
    const double qv = b >= 0 ? -(b + s) : -(b - s);
    double t1 = qv / a, t2 = qv != 0 ? c / qv : -t1;
    if (t1 > t2) std::swap(t1, t2);
    return {true, t1, t2};
}

inline ComplexPoint on_circle(ComplexPoint p, double r) {
    const double m = std::abs(p);
    return m > 0 ? p * (r / m) : p;
}

}  // namespace detail

/*!
 * Exact area of disc(0, r) intersected with a triangle.
 *
 * Dispatch follows the vertex/edge configuration:
 *  1. no vertex inside, no edge crossing: whole disc or nothing;
 *  2. no vertex inside, 1-3 crossing edges: disc minus the caps cut off
 *     beyond each crossing edge;
 *  3. one or two vertices inside: shoelace area of the inside vertices and
 *     edge/circle intersections plus the circular segments that close it;
 *  4. all vertices inside: the triangle itself.
 */
inline double circle_triangle_intersection_area(double r, const Triangle& t) {
    if (!(r >= 0)) throw ValidationError("circle/triangle: radius must be >= 0");
    if (r == 0) return 0;
    const std::array<ComplexPoint, 3> v = t.vertices();
    const double r2 = r * r;
    std::array<bool, 3> inside{};
    int n_inside = 0;
    // Vertices within rounding of the circle count as outside; the clamped
    // chords below then meet exactly at them.
    for (int j = 0; j < 3; ++j) {
        inside[j] = std::norm(v[j]) <= r2 * (1 - kOnCircleSlack);
        n_inside += inside[j];
    }

    if (n_inside == 3) return triangle_area_heron(t);

    if (n_inside == 0) {
        const double disc_area = kPi * r2;
        double caps = 0;
        int crossing = 0;
        for (int j = 0; j < 3; ++j) {
            const ComplexPoint p = v[j], q = v[(j + 1) % 3];
            const auto hit = detail::line_circle(p, q, r);
            const double lo = std::max(hit.t1, 0.0), hi = std::min(hit.t2, 1.0);
            if (!hit.crosses || !(hi > lo)) continue;
            const ComplexPoint a1 = detail::on_circle(p + lo * (q - p), r);
            const ComplexPoint a2 = detail::on_circle(p + hi * (q - p), r);
            if (std::abs(a1 - a2) <= kGeomEps * r) continue;  // tangent within rounding
            ++crossing;
            const double minor = circular_segment_area(r, a1, a2);
            // The origin on the triangle side means the cut-off cap is the minor one.
            const bool origin_inner = cross(q - p, -p) >= 0;
            caps += origin_inner ? minor : disc_area - minor;
        }
        if (crossing == 0) {
            // Case 1
            bool origin_in = true;
            for (int j = 0; j < 3; ++j)
                if (cross(v[(j + 1) % 3] - v[j], -v[j]) < 0) origin_in = false;
            return origin_in ? disc_area : 0.0;
        }
        // Case 2
        return std::max(0.0, disc_area - caps);
    }

    // Case 3: walk the boundary counter-clockwise.
    struct BoundaryPoint {
        ComplexPoint z;
        enum Kind { Vertex, Entry, Exit } kind;
    };
    std::vector<BoundaryPoint> walk;
    walk.reserve(6);
    for (int j = 0; j < 3; ++j) {
        const ComplexPoint p = v[j], q = v[(j + 1) % 3];
        const bool pin = inside[j], qin = inside[(j + 1) % 3];
        if (pin) walk.push_back({p, BoundaryPoint::Vertex});
        if (pin && qin) continue;
        const auto hit = detail::line_circle(p, q, r);
        auto at = [&](double s) { return detail::on_circle(p + std::clamp(s, 0.0, 1.0) * (q - p), r); };
        if (pin && !qin) {
            walk.push_back({hit.crosses ? at(hit.t2) : detail::on_circle(p, r), BoundaryPoint::Exit});
        } else if (!pin && qin) {
            walk.push_back({hit.crosses ? at(hit.t1) : detail::on_circle(q, r), BoundaryPoint::Entry});
        } else if (hit.crosses && std::min(hit.t2, 1.0) > std::max(hit.t1, 0.0)) {
            walk.push_back({at(hit.t1), BoundaryPoint::Entry});
            walk.push_back({at(hit.t2), BoundaryPoint::Exit});
        }
    }
    std::vector<ComplexPoint> poly;
    poly.reserve(walk.size());
    for (const auto& b : walk) poly.push_back(b.z);
    double area = polygon_area(poly);
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const auto& a = walk[i];
        const auto& b = walk[(i + 1) % walk.size()];
        if (a.kind != BoundaryPoint::Exit || b.kind != BoundaryPoint::Entry) continue;
        // A vertex strictly inside rules out a full-turn arc, so coincident
        // exit/entry points close with nothing.
        if (std::abs(a.z - b.z) <= kGeomEps * r) continue;
        const double minor = circular_segment_area(r, a.z, b.z);
        // Arc runs counter-clockwise from the exit to the entry point.
        area += cross(a.z, b.z) >= 0 ? minor : kPi * r2 - minor;
    }
    return area;
}

}  // namespace pia
