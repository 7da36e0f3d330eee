#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include <linkforge/analysis.hpp>
#include <linkforge/families.hpp>
#include <linkforge/optimize.hpp>

using namespace linkforge;

namespace {

constexpr double kPi = std::numbers::pi;

FamilyOptions small_options(const std::string& name) {
  FamilyOptions o;
  if (name.starts_with("chainmail")) o.size = 2;
  if (name == "chain-layered") o.size = 2;
  return o;
}

}  // namespace

TEST(Families, EveryFamilyBuildsItsExpectedTopology) {
  for (const auto& name : family_names()) {
    const FamilySpec f = make_family(name, small_options(name));
    const int n = f.default_vertices > 100 ? 120 : 0;
    const Link link = f.build(f.initial(), n);
    if (!f.expected_topology.empty()) {
      EXPECT_EQ(topology_fingerprint(link), f.expected_topology) << name;
    }
    EXPECT_EQ(f.param_names().size(), f.n_params()) << name;
  }
}

TEST(Families, UnknownNamesAndBoundsAreRejected) {
  EXPECT_THROW(make_family("hopf-triangles"), InvalidArgument);
  EXPECT_THROW(make_family("borromean-heptagon"), InvalidArgument);
  const auto f = make_family("hopf-circles");
  EXPECT_THROW(f.build(std::vector<double>{2.5}), InvalidArgument);
  EXPECT_THROW(f.build(std::vector<double>{1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(f.param_index("radius"), InvalidArgument);
}

TEST(Families, HopfCirclesGeometry) {
  const Link l = family_hopf_circles(0.5, 1.2, 50);
  EXPECT_NEAR(bounding_box(l[1]).hi.x, 1.7, 1e-12);
  EXPECT_THROW(family_hopf_circles(0.5, 2.0, 50), InvalidArgument);
  EXPECT_THROW(family_hopf_circles(0.5, 0.1, 50), InvalidArgument);
}

TEST(Families, HopfPolygonsHaveUnitApothem) {
  for (int sides : {4, 5, 8}) {
    const Link l = family_hopf_polygons(sides, 1.0);
    const auto b = bounding_box(l[0]);
    EXPECT_NEAR(b.hi.x, 1.0, 1e-12) << sides;
  }
  const Link sq = family_hopf_polygons(4, 1.0);
  EXPECT_NEAR(sq[0].length(), 8.0, 1e-12);
  EXPECT_THROW(family_hopf_polygons(3, 1.0), InvalidArgument);
}

TEST(Families, TambourineThreadsEverySmallCircle) {
  const Link t = family_tambourine(6, 0.05, tambourine_default_offset(0.05), 40);
  ASSERT_EQ(t.size(), 7u);
  for (std::size_t k = 1; k < t.size(); ++k) {
    EXPECT_EQ(std::abs(linking_number(t[0], t[k])), 1);
    EXPECT_EQ(linking_number(t[1], t[k == 1 ? 2 : k]), 0);
  }
}

TEST(Families, Link633HasThreePairwiseLinkedComponents) {
  const Link l = family_link633(std::sqrt(3.0), kPi / 3, 0.5, 120);
  EXPECT_EQ(topology_fingerprint(l), (LinkingMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
}

TEST(Families, BorromeanShapesAreMutuallyPerpendicular) {
  for (auto shape : {BorromeanShape::ellipse, BorromeanShape::stadium, BorromeanShape::rectangle}) {
    BorromeanParams p;
    p.shape = shape;
    p.aspect = 1.8;
    const Link l = family_borromean(p, 80);
    for (std::size_t i = 0; i < 3; ++i) {
      const auto b = bounding_box(l[i]);
      const double ext[3] = {b.hi.x - b.lo.x, b.hi.y - b.lo.y, b.hi.z - b.lo.z};
      int flat = 0;
      for (double e : ext) flat += e < 1e-12;
      EXPECT_EQ(flat, 1);
    }
  }
}

TEST(Families, CongruentChainIsLinear) {
  const Link c = family_chain_congruent(5, 1.5, RingShape::circle, 60);
  EXPECT_EQ(topology_fingerprint(c), detail::chain_topology(5));
  EXPECT_THROW(family_chain_congruent(5, 2.5, RingShape::circle, 60), Error);
}

TEST(Families, ChainLayoutRoundTrip) {
  const auto f = make_family("chain-layered", {.size = 3});
  const auto x = f.initial();
  EXPECT_EQ(x.size(), 10u);
  EXPECT_EQ(ChainLayout::from_params(x).to_params(), x);
  EXPECT_THROW(ChainLayout::from_params(std::vector<double>{1.0, 2.0}), InvalidArgument);
}

TEST(Families, ChainmailTopologies) {
  for (int N : {2, 3}) {
    ChainmailParams j;
    j.style = ChainmailStyle::japanese;
    j.size = N;
    EXPECT_EQ(topology_fingerprint(family_chainmail(j, 60)), chainmail_expected_topology(ChainmailStyle::japanese, N));
    ChainmailParams e;
    e.size = N;
    EXPECT_EQ(topology_fingerprint(family_chainmail(e, 60)), chainmail_expected_topology(ChainmailStyle::european, N));
  }
}

TEST(Families, EuropeanChainmailWithSquareRings) {
  ChainmailParams e;
  e.size = 3;
  e.shape = RingShape::square;
  e.d4 = 1.7;
  e.theta4 = 0.5;
  EXPECT_EQ(topology_fingerprint(family_chainmail(e, 4)), chainmail_expected_topology(ChainmailStyle::european, 3));
}

TEST(Families, TorusKnotFamily) {
  const auto t = make_family("torus-knot", {.p = 2, .q = 4});
  EXPECT_EQ(t.build(t.initial(), 200).size(), 2u);
  EXPECT_EQ(t.expected_topology, (LinkingMatrix{{0, 2}, {2, 0}}));
}

TEST(Families, BuildIsDeterministic) {
  const auto f = make_family("link633");
  const Link a = f.build(f.initial()), b = f.build(f.initial());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i] == b[i]);
}
