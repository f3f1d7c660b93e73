// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "pia/error.hpp"
#include "pia/geometry.hpp"
#include "pia/model.hpp"
#include "pia/oracle.hpp"

using namespace pia;

namespace {

using P = ComplexPoint;

ConvexPolygon random_convex(std::mt19937_64& rng, int max_points, double spread = 1.0) {
    std::uniform_real_distribution<double> c(-spread, spread);
    std::uniform_int_distribution<int> n(3, max_points);
    for (;;) {
        std::vector<P> pts(static_cast<std::size_t>(n(rng)));
        for (auto& p : pts) p = {c(rng), c(rng)};
        auto poly = ConvexPolygon::hull(pts);
        if (poly.is_proper() && std::abs(poly.area()) > 1e-6) return poly;
    }
}

// Exact annular-sector area.
double sector_area(double lo, double hi, double width) { return 0.5 * width * (hi * hi - lo * lo); }

// Segment between the inner chord and inner arc.
double inner_segment(double lo, double width) { return 0.5 * lo * lo * (width - std::sin(width)); }

}  // namespace

TEST(ConvexPolygon, NormalizationMergesCollinearAndDuplicates) {
    const ConvexPolygon sq({{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {1, 1}, {0, 1}});
    EXPECT_EQ(sq.size(), 4u);
    EXPECT_NEAR(sq.area(), 1.0, 1e-15);
    const auto h = ConvexPolygon::hull({{0, 0}, {1, 0}, {0.5, 0.5}, {1, 1}, {0, 1}, {0.5, 0}});
    EXPECT_EQ(h.size(), 4u);
    EXPECT_GT(h.area(), 0);
    EXPECT_TRUE(ConvexPolygon::hull({{1, 2}, {1, 2}}).is_point());
    EXPECT_TRUE(ConvexPolygon::hull({{0, 0}, {1, 1}, {2, 2}}).is_segment());
}

TEST(ConvexPolygon, RejectsReflexInput) {
    EXPECT_THROW(ConvexPolygon({{0, 0}, {1, 0}, {0.5, 0.1}, {1, 1}, {0, 1}}), ValidationError);
}

TEST(Polygonize, DegeneratePoint) {
    for (int m : {2, 8, 64}) {
        const auto p = polygonize_interval_phasor(1, 1, 0, 0, m);
        ASSERT_TRUE(p.is_point());
        EXPECT_EQ(p[0], P(1, 0));
    }
}

TEST(Polygonize, ContainsCorners) {
    const double g = deg_to_rad(3);
    const auto p = polygonize_interval_phasor(0.99, 1.01, -g, g, 8);
    for (double a : {0.99, 1.01})
        for (double b : {-g, g}) EXPECT_TRUE(p.contains(std::polar(a, b)));
}

TEST(Polygonize, QuarterAnnulusAreaBound) {
    const double w = kPi / 2;
    const double exact = sector_area(0.5, 1.0, w);
    EXPECT_NEAR(exact, kPi / 4 * (1 - 0.25), 1e-15);
    for (int m : {4, 8, 16, 32}) {
        const auto p = polygonize_interval_phasor(0.5, 1.0, 0, w, m);
        const double a = p.area();
        EXPECT_GE(a, exact);
        EXPECT_LE(a, (exact + inner_segment(0.5, w)) * (1 + 2.0 / (m * m))) << "M=" << m;
    }
}

TEST(Polygonize, ZeroInnerRadiusIsWedge) {
    const auto p = polygonize_interval_phasor(0, 1, 0.1, 0.5, 8);
    EXPECT_TRUE(p.contains(0.0));
    EXPECT_GE(p.area(), sector_area(0, 1, 0.4));
    const auto seg = polygonize_interval_phasor(0.2, 0.7, 0.3, 0.3, 8);
    EXPECT_TRUE(seg.is_segment());
}

TEST(Polygonize, RejectsInvalidIntervals) {
    EXPECT_THROW(polygonize_interval_phasor(1.1, 1.0, 0, 0.1, 8), ValidationError);
    EXPECT_THROW(polygonize_interval_phasor(-0.1, 1.0, 0, 0.1, 8), ValidationError);
    EXPECT_THROW(polygonize_interval_phasor(0.5, 1.0, 0, kPi, 8), ValidationError);
    EXPECT_THROW(polygonize_interval_phasor(0.5, 1.0, 0, 0.1, 1), ValidationError);
}

TEST(Polygonize, InclusionProperty) {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> U(0, 1);
    std::uniform_int_distribution<int> M(2, 16);
    for (int t = 0; t < 1000; ++t) {
        const double lo = 2 * U(rng) * U(rng);
        const double hi = lo + 0.5 * U(rng);
        const double b0 = 2 * kPi * (U(rng) - 0.5);
        const double w = 0.99 * kPi * U(rng);
        const auto poly = polygonize_interval_phasor(lo, hi, b0, b0 + w, M(rng));
        for (int s = 0; s < 1000; ++s) {
            const P z = std::polar(lo + (hi - lo) * U(rng), b0 + w * U(rng));
            ASSERT_TRUE(poly.contains(z)) << "trial " << t;
        }
    }
}

TEST(Polygonize, MonotoneShrink) {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> U(0, 1);
    for (int t = 0; t < 200; ++t) {
        const double lo = U(rng), hi = lo + U(rng) + 1e-3, w = 3.0 * U(rng) + 1e-3, b0 = 6 * U(rng) - 3;
        const double exact = sector_area(lo, hi, w);
        double prev = INFINITY;
        for (int m = 4; m <= 64; m *= 2) {
            const double a = polygonize_interval_phasor(lo, hi, b0, b0 + w, m).area();
            EXPECT_LE(a, prev * (1 + 1e-12));
            EXPECT_GE(a, exact * (1 - 1e-12));
            prev = a;
        }
    }
}

TEST(Minkowski, Examples) {
    const auto pt = minkowski_sum(ConvexPolygon({P(1, 0)}), ConvexPolygon({P(0, 1)}));
    ASSERT_TRUE(pt.is_point());
    EXPECT_EQ(pt[0], P(1, 1));

    const ConvexPolygon sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const auto big = minkowski_sum(sq, sq);
    EXPECT_EQ(big.size(), 4u);
    EXPECT_NEAR(big.area(), 4.0, 1e-14);
    for (P c : {P(0, 0), P(2, 0), P(2, 2), P(0, 2)}) EXPECT_TRUE(big.contains(c));

    const ConvexPolygon tri({{0, 0}, {1, 0}, {0, 1}});
    const auto hex = minkowski_sum(sq, tri);
    EXPECT_EQ(hex.size(), 5u);
    EXPECT_NEAR(hex.area(), 3.5, 1e-14);

    const ConvexPolygon seg({{0, 0}, {1, 0}});
    EXPECT_NEAR(minkowski_sum(seg, ConvexPolygon({{0, 0}, {0, 1}})).area(), 1.0, 1e-14);
    EXPECT_TRUE(minkowski_sum(seg, seg).is_segment());
}

TEST(Minkowski, MatchesBruteForceHull) {
    std::mt19937_64 rng(303);
    for (int t = 0; t < 1000; ++t) {
        const auto a = random_convex(rng, 8), b = random_convex(rng, 8);
        const auto m = minkowski_sum(a, b);
        std::vector<oracle::Point> sums;
        for (auto p : a.vertices())
            for (auto q : b.vertices()) sums.push_back(p + q);
        const auto ref = oracle::gift_wrap_hull(sums);
        const double ra = oracle::shoelace(ref);
        EXPECT_NEAR(m.area(), ra, 1e-9 * ra) << "trial " << t;
        EXPECT_EQ(m.size(), ref.size()) << "trial " << t;
        for (auto v : ref) EXPECT_TRUE(m.contains(v));
    }
}

TEST(DistanceBounds, Examples) {
    auto d = distance_bounds_to_origin(ConvexPolygon({{1, 1}, {3, 1}, {3, 3}, {1, 3}}));
    EXPECT_NEAR(d.min_dist, std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(d.max_dist, 3 * std::sqrt(2.0), 1e-15);
    d = distance_bounds_to_origin(ConvexPolygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}));
    EXPECT_EQ(d.min_dist, 0.0);
    EXPECT_NEAR(d.max_dist, std::sqrt(2.0), 1e-15);

    d = distance_bounds_to_origin(ConvexPolygon::hull({{2, 0}, {0, 2}}));
    double dense = INFINITY;
    for (int i = 0; i <= 100000; ++i) dense = std::min(dense, std::abs(P(2, 0) + (P(0, 2) - P(2, 0)) * (i / 1e5)));
    EXPECT_NEAR(d.min_dist, std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(d.min_dist, dense, 1e-9);
    EXPECT_NEAR(d.max_dist, 2.0, 1e-15);
}

TEST(Triangulate, Examples) {
    const ConvexPolygon tri({{0, 0}, {1, 0}, {0, 1}});
    ASSERT_EQ(triangulate(tri).size(), 1u);
    EXPECT_NEAR(triangle_area_heron(triangulate(tri)[0]), 0.5, 1e-15);

    const auto sq = triangulate(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    ASSERT_EQ(sq.size(), 2u);
    for (const auto& t : sq) EXPECT_NEAR(triangle_area_heron(t), 0.5, 1e-15);

    std::vector<P> hv;
    for (int k = 0; k < 6; ++k) hv.push_back(std::polar(1.0, k * kPi / 3));
    const auto hex = triangulate(ConvexPolygon(hv));
    ASSERT_EQ(hex.size(), 4u);
    double s = 0;
    for (const auto& t : hex) s += triangle_area_heron(t);
    EXPECT_NEAR(s, 3 * std::sqrt(3.0) / 2, 1e-14);
    EXPECT_NEAR(s, polygon_area(hv), 1e-14);
}

TEST(Triangulate, PartitionProperty) {
    std::mt19937_64 rng(404);
    for (int t = 0; t < 1000; ++t) {
        const auto p = random_convex(rng, 40, 3.0);
        double s = 0;
        for (const auto& tri : triangulate(p)) s += triangle_area_heron(tri);
        const double a = polygon_area(p.vertices());
        EXPECT_NEAR(s, a, 1e-9 * a) << "trial " << t;
    }
}

TEST(PolygonArea, Examples) {
    EXPECT_DOUBLE_EQ(polygon_area(std::vector<P>{{0, 0}, {1, 0}, {0, 1}}), 0.5);
    EXPECT_DOUBLE_EQ(polygon_area(std::vector<P>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 1.0);
    EXPECT_DOUBLE_EQ(polygon_area(std::vector<P>{{0, 0}, {4, 0}, {4, 3}, {0, 3}}), 12.0);
    EXPECT_DOUBLE_EQ(polygon_area(std::vector<P>{{0, 3}, {4, 3}, {4, 0}, {0, 0}}), 12.0);
}

TEST(Heron, Examples) {
    EXPECT_NEAR(triangle_area_heron(3, 4, 5), 6.0, 1e-14);
    EXPECT_NEAR(triangle_area_heron(1, 1, std::sqrt(2.0)), 0.5, 1e-15);
    EXPECT_NEAR(triangle_area_heron(2, 2, 2), std::sqrt(3.0), 1e-15);
    EXPECT_EQ(triangle_area_heron(1, 2, 3), 0.0);
    EXPECT_THROW(triangle_area_heron(1, 1, 3), ValidationError);
    EXPECT_THROW(triangle_area_heron(-1, 1, 1), ValidationError);
    // Needle triangles keep full relative accuracy.
    EXPECT_NEAR(triangle_area_heron(1, 1, 1e-6), 0.5e-6 * std::sqrt(1 - 0.25e-12), 1e-20);
}

TEST(CircularSegment, Examples) {
    EXPECT_NEAR(circular_segment_area(1, {1, 0}, {0, 1}), kPi / 4 - 0.5, 1e-15);
    EXPECT_NEAR(circular_segment_area(1, {1, 0}, {-1, 0}), kPi / 2, 1e-15);

    const P a2 = std::polar(2.0, kPi / 3);  // chord length 2
    const double seg = circular_segment_area(2, {2, 0}, a2);
    EXPECT_NEAR(seg, 4 * std::asin(0.5) - std::sqrt(3.0), 1e-14);
    EXPECT_NEAR(seg, 0.36234, 1e-5);
    // Independent check: disc slice beyond the chord line by quadrature.
    std::vector<oracle::Point> cap{{2, 0}, a2, std::polar(4 / std::sqrt(3.0), kPi / 6)};
    EXPECT_NEAR(oracle::disc_polygon_area(2, cap), seg, 1e-6 * seg);

    EXPECT_THROW(circular_segment_area(1, {1.1, 0}, {0, 1}), ValidationError);
    EXPECT_EQ(circular_segment_area(1, {1, 0}, {1, 0}), 0.0);
}

TEST(CircleTriangle, Examples) {
    EXPECT_NEAR(circle_triangle_intersection_area(10, Triangle({0, 0}, {1, 0}, {0, 1})), 0.5, 1e-15);
    EXPECT_NEAR(circle_triangle_intersection_area(0.1, Triangle({-5, -5}, {5, -5}, {0, 5})), kPi * 0.01, 1e-15);
    const Triangle t({0, 0}, {2, 0}, {0, 2});
    const double a = circle_triangle_intersection_area(1, t);
    EXPECT_NEAR(a, kPi / 4, 1e-14);
    EXPECT_NEAR(a, oracle::disc_triangle_area(1, t.v1, t.v2, t.v3), 1e-3 * a);
    EXPECT_EQ(circle_triangle_intersection_area(0.5, Triangle({2, 2}, {3, 2}, {2, 3})), 0.0);
    // Clockwise input is reoriented.
    EXPECT_NEAR(circle_triangle_intersection_area(10, Triangle({0, 0}, {0, 1}, {1, 0})), 0.5, 1e-15);
}

TEST(CircleTriangle, OracleAllCases) {
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> c(-2, 2), R(0.02, 3);
    // Buckets: 0 vertices inside (disc in triangle / crossing / disjoint), 1, 2, 3 inside.
    std::array<int, 6> hits{};
    double worst = 0;
    for (int t = 0; t < 10000; ++t) {
        const double r = R(rng);
        Triangle tri({c(rng), c(rng)}, {c(rng), c(rng)}, {c(rng), c(rng)});
        if (std::abs(tri.signed_area()) < 1e-4) continue;
        int inside = 0;
        for (auto v : tri.vertices()) inside += std::norm(v) <= r * r;
        const double got = circle_triangle_intersection_area(r, tri);
        const double ref = oracle::disc_triangle_area(r, tri.v1, tri.v2, tri.v3);
        if (inside == 0) {
            const bool origin_in = ConvexPolygon(std::vector<P>{tri.v1, tri.v2, tri.v3}).contains(0.0);
            hits[ref > 0 ? (origin_in && std::abs(ref - kPi * r * r) < 1e-6 * ref ? 0 : 1) : 2]++;
        } else {
            hits[static_cast<std::size_t>(2 + inside)]++;
        }
        const double err = ref < 1e-3 ? std::abs(got - ref) : std::abs(got - ref) / ref;
        worst = std::max(worst, ref < 1e-3 ? err * 1e3 : err);
        ASSERT_TRUE(ref < 1e-3 ? err < 1e-6 : err < 1e-3)
            << "r=" << r << " tri=" << tri.v1 << tri.v2 << tri.v3 << " got=" << got << " ref=" << ref;
    }
    for (std::size_t b = 0; b < hits.size(); ++b) EXPECT_GE(hits[b], 50) << "bucket " << b;
    RecordProperty("worst_scaled_error", std::to_string(worst));
}

TEST(CircleTriangle, CaseBoundaryContinuity) {
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> U(0, 1);
    for (int t = 0; t < 2000; ++t) {
        const double r = 0.2 + 2 * U(rng);
        const double th = 2 * kPi * U(rng);
        const P b(4 * U(rng) - 2, 4 * U(rng) - 2), c(4 * U(rng) - 2, 4 * U(rng) - 2);
        const P dir = std::polar(1.0, th);
        const double in = circle_triangle_intersection_area(r, Triangle(dir * (r - 1e-9), b, c));
        const double on = circle_triangle_intersection_area(r, Triangle(dir * r, b, c));
        const double out = circle_triangle_intersection_area(r, Triangle(dir * (r + 1e-9), b, c));
        EXPECT_LT(std::abs(in - out), 1e-6);
        EXPECT_LT(std::abs(in - on), 1e-6);
    }
    // Edge tangent to the circle.
    const double a = circle_triangle_intersection_area(1, Triangle({-2, 1}, {2, 1}, {0, 3}));
    EXPECT_EQ(a, 0.0);
    const double b = circle_triangle_intersection_area(1, Triangle({-2, 1 - 1e-9}, {2, 1 - 1e-9}, {0, 3}));
    EXPECT_LT(b, 1e-6);
}

TEST(CircleTriangle, VerticesOnTheCircle) {
    std::mt19937_64 rng(707);
    std::uniform_real_distribution<double> U(0, 1);
    const std::array<double, 5> jitter{-1e-9, -1e-15, 0.0, 1e-15, 1e-9};
    std::uniform_int_distribution<std::size_t> J(0, jitter.size() - 1);
    for (int t = 0; t < 3000; ++t) {
        const double r = 0.1 + 2 * U(rng);
        std::array<P, 3> v;
        const int on = 1 + t % 3;  // vertices placed on the circle
        for (int k = 0; k < 3; ++k) {
            const double th = 2 * kPi * U(rng);
            const double rad = k < on ? r * (1 + jitter[J(rng)]) : 2.5 * U(rng);
            v[static_cast<std::size_t>(k)] = std::polar(rad, th);
        }
        const Triangle tri(v[0], v[1], v[2]);
        if (std::abs(tri.signed_area()) < 1e-4) continue;
        const double got = circle_triangle_intersection_area(r, tri);
        const double ref = oracle::disc_triangle_area(r, tri.v1, tri.v2, tri.v3);
        ASSERT_NEAR(got, ref, std::max(1e-6, 1e-3 * ref)) << "r=" << r << " tri=" << tri.v1 << tri.v2 << tri.v3;
    }
}
