#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include <linkforge/analysis.hpp>

using namespace linkforge;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Analysis, RopelengthBound) {
  EXPECT_NEAR(ropelength_lower_bound(4.57), 1.0, 1e-15);
  EXPECT_NEAR(ropelength_lower_bound(4.57 * 16.0), 8.0, 1e-12);
  EXPECT_THROW(ropelength_lower_bound(3.0), InvalidArgument);
}

TEST(Analysis, TambourineBound) {
  EXPECT_NEAR(tambourine_bound(1), 8.0 + 4 * kPi * kPi, 1e-12);
  EXPECT_NEAR(tambourine_bound(10) - tambourine_bound(9), 4.0 + 4 * kPi * kPi, 1e-12);
  EXPECT_THROW(tambourine_bound(0), InvalidArgument);
}

TEST(Analysis, ImprovedPrefactor) {
  // (2 pi^2 + 2)/4.57 raised to 3/4
  EXPECT_NEAR(improved_ropelength_prefactor(), std::pow((2 * kPi * kPi + 2) / 4.57, 0.75), 1e-14);
  EXPECT_GT(improved_ropelength_prefactor(CrossConvention::double_counted, true), improved_ropelength_prefactor());
  EXPECT_LT(improved_ropelength_prefactor(CrossConvention::single_counted), improved_ropelength_prefactor());
  EXPECT_GT(improved_ropelength_prefactor(), kCurrentRopelengthPrefactor);
  EXPECT_NEAR(improved_ropelength_bound(16), improved_ropelength_prefactor() * 8.0, 1e-12);
  EXPECT_THROW(improved_ropelength_bound(1), InvalidArgument);
}

TEST(Analysis, BoundCrossover) {
  const std::vector<std::pair<int, double>> competing{{2, 100.0}, {4, 50.0}, {8, 1.0}};
  EXPECT_EQ(bound_crossover(competing, 1.0), 4);
  EXPECT_FALSE(bound_crossover(competing, 1000.0).has_value());
}

TEST(Analysis, EfficiencyOfHopfLink) {
  const Link hopf = family_hopf_circles(1.0, std::sqrt(2.0), 360);
  const auto lk = linking_matrix(hopf);
  const auto pairs = hopf_pairs(lk);
  ASSERT_EQ(pairs.size(), 1u);
  const auto e = efficiency(hopf, pairs, EnergyKind::mobius);
  EXPECT_EQ(e.n_linkages, 1);
  EXPECT_NEAR(e.ratio, 1.0, 5e-3);
  EXPECT_LT(e.ratio, 1.0);  // the discrete cross-energy sits just below the continuum value
  const std::vector<std::pair<std::size_t, std::size_t>> none;
  EXPECT_THROW(efficiency(hopf, none, EnergyKind::mobius), InvalidArgument);
}

TEST(Analysis, EfficiencyRejectsUnlinkedPairs) {
  const Link b = family_borromean({}, 60);
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}};
  EXPECT_THROW(efficiency(b, pairs, EnergyKind::mobius), TopologyError);
}

TEST(Analysis, MdSquareEfficiency) {
  const Link sq = family_hopf_polygons(4, 1.2);
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}};
  EXPECT_NEAR(efficiency(sq, pairs, EnergyKind::md).ratio, square_hopf_cross_formula(1.2) / 85.5, 1e-12);
}

TEST(Analysis, LayerScaling) {
  ChainLayout c;
  c.center_aspect = 1.2;
  c.layers = {{0.25, 0.6, 1.1}, {0.04, 0.3, 1.0}};
  const auto s = layer_scaling(c);
  ASSERT_EQ(s.size_ratios.size(), 2u);
  EXPECT_NEAR(s.size_ratios[0], 0.5, 1e-15);
  EXPECT_NEAR(s.size_ratios[1], 0.4, 1e-15);
  EXPECT_NEAR(s.displacement_ratios[0], 0.5, 1e-15);
}

TEST(Analysis, ChainWidth) {
  const Link c = family_chain_congruent(3, 1.5, RingShape::circle, 720);
  EXPECT_NEAR(chain_width(c), 2.0 * 1.5 + 2.0, 1e-12);
  ChainLayout single;
  single.center_aspect = 1.0;
  EXPECT_NEAR(layered_chain_width(single), 2.0, 1e-12);
}
