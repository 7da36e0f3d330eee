#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <linkforge/errors.hpp>
#include <linkforge/families.hpp>
#include <linkforge/geometry.hpp>
#include <linkforge/oracles.hpp>

using namespace linkforge;

namespace {

constexpr double kPi = std::numbers::pi;

Point3 random_point(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng)};
}

RigidTransform random_motion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> s(0.3, 3.0);
  RigidTransform t;
  t.rotation = rotation(normalized(random_point(rng)), kPi * u(rng));
  t.translation = random_point(rng, 5.0);
  t.scale = s(rng);
  return t;
}

}  // namespace

TEST(Geometry, PolyCurveRejectsBadInput) {
  EXPECT_THROW(PolyCurve({{0, 0, 0}, {1, 0, 0}}), InvalidArgument);
  EXPECT_THROW(PolyCurve({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}), InvalidArgument);
  EXPECT_THROW(PolyCurve({{0, 0, 0}, {NAN, 0, 0}, {1, 0, 0}}), InvalidArgument);
}

TEST(Geometry, PolyCurveLengths) {
  const PolyCurve sq({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
  EXPECT_DOUBLE_EQ(sq.length(), 4.0);
  EXPECT_DOUBLE_EQ(sq.arc_position(2), 2.0);
  EXPECT_DOUBLE_EQ(arc_distance(sq, 0, 3), 1.0);
  EXPECT_DOUBLE_EQ(sq.vertex_weight(0), 1.0);
  const PolyCurve c = make_circle(1.0, Frame{}, 1000);
  EXPECT_NEAR(c.length(), 2 * 1000 * std::sin(kPi / 1000), 1e-12);
}

TEST(Geometry, LinkRejectsTouchingComponents) {
  const PolyCurve a({{0, 0, 0}, {2, 0, 0}, {2, 2, 0}});
  const PolyCurve b({{1, 0, -1}, {1, 0, 1}, {1, 5, 1}});
  EXPECT_THROW(Link({a, b}), DivergenceError);
  EXPECT_THROW(Link({}), InvalidArgument);
}

TEST(Geometry, SegmentDistanceKnownCases) {
  EXPECT_DOUBLE_EQ(segment_min_distance({{0, 0, 0}, {1, 0, 0}}, {{0, 1, 1}, {1, 1, 1}}), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(segment_min_distance({{0, 0, 0}, {1, 0, 0}}, {{0.5, -1, 1}, {0.5, 1, 1}}), 1.0);
  EXPECT_DOUBLE_EQ(segment_min_distance({{0, 0, 0}, {1, 0, 0}}, {{3, 0, 0}, {4, 0, 0}}), 2.0);
  EXPECT_DOUBLE_EQ(segment_min_distance({{0, 0, 0}, {1, 0, 0}}, {{0, 0, 0}, {0, 1, 0}}), 0.0);
  EXPECT_THROW(segment_min_distance({{0, 0, 0}, {0, 0, 0}}, {{0, 0, 0}, {0, 1, 0}}), InvalidArgument);
}

TEST(Geometry, SegmentDistanceMatchesOracle) {
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Point3 p0 = random_point(rng), p1 = random_point(rng);
    Point3 q0 = random_point(rng), q1 = random_point(rng);
    if (trial % 4 == 0) {
      // nearly parallel pairs exercise the degenerate branch
      const Point3 offset = random_point(rng, 0.5);
      q0 = p0 + offset + 1e-9 * random_point(rng);
      q1 = p1 + offset;
    }
    const double fast = segment_distance_unchecked(p0, p1, q0, q1);
    const double slow = oracle::segment_distance(p0, p1, q0, q1, 200);
    worst = std::max(worst, std::abs(fast - slow) / std::max(1.0, slow));
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(Geometry, CurveDistanceCutoff) {
  const PolyCurve a = make_circle(1.0, Frame{}, 64);
  const PolyCurve b = make_circle(1.0, Frame{{0, 0, 3}}, 64);
  EXPECT_NEAR(curve_min_distance(a, b), 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(curve_min_distance(a, b, 1.0), 1.0);
}

TEST(Geometry, CircleAndEllipse) {
  const Frame f = Frame::from_normal({1, 2, 3}, normalized(Point3{1, 1, 1}));
  const PolyCurve c = make_circle(2.0, f, 37);
  for (const auto& p : c.vertices()) {
    EXPECT_NEAR(distance(p, f.origin), 2.0, 1e-12);
    EXPECT_NEAR(dot(p - f.origin, f.normal()), 0.0, 1e-12);
  }
  const PolyCurve e = make_ellipse(2.0, 1.0, Frame{}, 400);
  for (const auto& p : e.vertices()) EXPECT_NEAR(p.x * p.x / 4 + p.y * p.y, 1.0, 1e-12);
  EXPECT_THROW(make_circle(-1.0, Frame{}, 10), InvalidArgument);
  EXPECT_THROW(make_circle(1.0, Frame{}, 2), InvalidArgument);
}

TEST(Geometry, StadiumPerimeterAndShape) {
  const double aspect = 1.8, height = 1.0;
  const PolyCurve s = make_stadium(aspect, height, Frame{}, 4000);
  EXPECT_NEAR(s.length(), stadium_perimeter(aspect, height), 1e-5);
  const auto b = bounding_box(s);
  EXPECT_NEAR(b.hi.x - b.lo.x, aspect * height, 1e-6);
  EXPECT_NEAR(b.hi.y - b.lo.y, height, 1e-6);
}

TEST(Geometry, RectangleKeepsCorners) {
  for (int n : {4, 5, 9, 40}) {
    const PolyCurve r = make_rectangle(3.0, 1.0, Frame{}, n);
    EXPECT_EQ(r.size(), static_cast<std::size_t>(n));
    EXPECT_NEAR(r.length(), 8.0, 1e-12);
  }
}

TEST(Geometry, SymmetricDecagonRejectsSelfIntersection) {
  EXPECT_NO_THROW(make_symmetric_decagon({0.44, 0.75}, {0.52, 0.27}, Frame{}));
  EXPECT_THROW(make_symmetric_decagon({0.9, 0.1}, {0.1, 0.9}, Frame{}), InvalidArgument);
}

TEST(Geometry, TorusKnotLiesOnTorus) {
  const PolyCurve k = make_torus_knot(2, 3, 2.0, 0.5, 300);
  for (const auto& p : k.vertices()) {
    const double rho = std::hypot(p.x, p.y);
    EXPECT_NEAR(std::hypot(rho - 2.0, p.z), 0.5, 1e-12);
  }
  EXPECT_EQ(make_torus_link(2, 4, 2.0, 0.5, 100).size(), 2u);
  EXPECT_THROW(make_torus_knot(2, 4, 2.0, 0.5, 100), InvalidArgument);
  EXPECT_THROW(make_torus_knot(2, 3, 1.0, 1.5, 100), InvalidArgument);
}

TEST(Geometry, SubdivideKeepsShape) {
  const PolyCurve sq({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
  const PolyCurve d = subdivide(sq);
  EXPECT_EQ(d.size(), 8u);
  EXPECT_DOUBLE_EQ(d.length(), 4.0);
}

TEST(Geometry, LinkingNumbers) {
  const Link hopf = family_hopf_circles(1.0, 1.0, 64);
  EXPECT_EQ(std::abs(linking_number(hopf[0], hopf[1])), 1);
  const Link apart = family_hopf_circles(1.0, 1.0, 64);
  const PolyCurve far = transform(apart[1], {Mat3::identity(), {10, 0, 0}, 1.0});
  EXPECT_EQ(linking_number(apart[0], far), 0);

  // A (2,4) torus link has linking number 2 between its components.
  const auto t24 = make_torus_link(2, 4, 2.0, 0.6, 400);
  EXPECT_EQ(std::abs(linking_number(t24[0], t24[1])), 2);

  // Borromean rings are pairwise unlinked.
  const Link b = family_borromean({}, 120);
  EXPECT_EQ(linking_matrix(b), (LinkingMatrix{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
}

TEST(Geometry, LinkingNumberSignFollowsOrientation) {
  const Link hopf = family_hopf_circles(1.0, 1.0, 64);
  std::vector<Point3> rev(hopf[1].vertices().rbegin(), hopf[1].vertices().rend());
  EXPECT_EQ(linking_number(hopf[0], PolyCurve(rev)), -linking_number(hopf[0], hopf[1]));
}

TEST(Geometry, LinkingNumberInvariantUnderMotion) {
  std::mt19937_64 rng(11);
  const Link hopf = family_hopf_circles(0.7, 0.9, 100);
  const double raw = linking_number_raw(hopf[0], hopf[1]);
  for (int trial = 0; trial < 10; ++trial) {
    const Link moved = transform(hopf, random_motion(rng));
    EXPECT_NEAR(linking_number_raw(moved[0], moved[1]), raw, 1e-9);
  }
}

TEST(Geometry, TransformPreservesDistancesUpToScale) {
  std::mt19937_64 rng(3);
  const PolyCurve c = make_circle(1.0, Frame{}, 50);
  const auto t = random_motion(rng);
  const PolyCurve m = transform(c, t);
  EXPECT_NEAR(m.length(), t.scale * c.length(), 1e-10);
  EXPECT_NEAR(distance(m[0], m[17]), t.scale * distance(c[0], c[17]), 1e-10);
}
