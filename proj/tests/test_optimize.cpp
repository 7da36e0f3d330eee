#include <cmath>
#include <numbers>
#include <span>

#include <gtest/gtest.h>

#include <linkforge/families.hpp>
#include <linkforge/optimize.hpp>

using namespace linkforge;

TEST(GoldenSection, FindsParabolaMinimum) {
  int calls = 0;
  const auto r = golden_section(
      [&](double x) {
        ++calls;
        return (x - 0.3) * (x - 0.3);
      },
      -1.0, 2.0, 1e-9);
  EXPECT_NEAR(r.params_opt[0], 0.3, 1e-8);
  EXPECT_LT(r.energy_opt, 1e-16);
  EXPECT_EQ(calls, r.n_evals);
  EXPECT_LE(r.n_evals, golden_section_eval_bound(-1.0, 2.0, 1e-9));
  EXPECT_TRUE(r.converged);
}

TEST(GoldenSection, NeverEvaluatesEndpoints) {
  const auto r = golden_section(
      [](double x) {
        if (x <= 0.0 || x >= 1.0) ADD_FAILURE() << "endpoint evaluated";
        return -std::log(x) - std::log(1.0 - x);
      },
      0.0, 1.0, 1e-8, true);
  for (const auto& h : r.history) EXPECT_TRUE(h.x[0] > 0.0 && h.x[0] < 1.0);
  EXPECT_NEAR(r.params_opt[0], 0.5, 1e-7);
  EXPECT_EQ(r.history.size(), static_cast<std::size_t>(r.n_evals));
}

TEST(GoldenSection, InfiniteValuesActAsWalls) {
  const auto r = golden_section([](double x) { return x < 0.2 ? NAN : (x - 0.25) * (x - 0.25); }, 0.0, 1.0, 1e-8);
  EXPECT_NEAR(r.params_opt[0], 0.25, 1e-7);
  EXPECT_THROW(golden_section([](double) { return NAN; }, 0.0, 1.0, 1e-3), InvalidArgument);
  EXPECT_THROW(golden_section([](double x) { return x; }, 1.0, 0.0), InvalidArgument);
}

TEST(NelderMead, QuadraticBowl) {
  const auto f = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 2.0) * (x[1] + 2.0) + 0.5 * x[0] * (x[1] + 2.0);
  };
  const auto r = nelder_mead(f, {5.0, 5.0});
  // Stationary point of the quadratic.
  const double y = -2.0 - 0.5 / 7.875;
  const double x = 1.0 - 0.25 * (y + 2.0);
  EXPECT_NEAR(r.params_opt[0], x, 1e-5);
  EXPECT_NEAR(r.params_opt[1], y, 1e-5);
  EXPECT_TRUE(r.converged);
}

TEST(NelderMead, Rosenbrock) {
  const auto f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  OptimizerConfig c;
  c.param_tol = 1e-9;
  c.value_tol = 1e-14;
  c.max_evals = 20000;
  c.restarts = 2;
  const auto r = nelder_mead(f, {-1.2, 1.0}, c);
  EXPECT_NEAR(r.params_opt[0], 1.0, 1e-5);
  EXPECT_NEAR(r.params_opt[1], 1.0, 1e-5);
}

TEST(NelderMead, RespectsBounds) {
  const auto f = [](std::span<const double> x) { return (x[0] - 3.0) * (x[0] - 3.0) + x[1] * x[1]; };
  int outside = 0;
  const auto g = [&](std::span<const double> x) {
    if (x[0] <= 0.0 || x[0] >= 2.0 || x[1] <= 0.0) ++outside;
    return f(x);
  };
  const auto r = nelder_mead(g, {1.0, 1.0}, {}, {{0.0, 2.0}, {0.0, INFINITY}});
  EXPECT_EQ(outside, 0);
  EXPECT_GT(r.params_opt[0], 1.99);
  EXPECT_LT(r.params_opt[1], 1e-3);
  EXPECT_THROW(nelder_mead(f, {3.0, 1.0}, {}, {{0.0, 2.0}, {0.0, INFINITY}}), InvalidArgument);
}

TEST(NelderMead, EvaluationBudget) {
  OptimizerConfig c;
  c.max_evals = 50;
  c.record_history = true;
  const auto r = nelder_mead([](std::span<const double> x) { return std::cos(x[0]) + x[1] * x[1]; }, {0.1, 3.0}, c);
  EXPECT_LE(r.n_evals, 50);
  EXPECT_EQ(r.history.size(), static_cast<std::size_t>(r.n_evals));
}

TEST(BoundTransform, RoundTrip) {
  for (BoundTransform t : {BoundTransform{0.0, 2.0}, BoundTransform{1.0, INFINITY}, BoundTransform{-INFINITY, 4.0},
                           BoundTransform{}}) {
    for (double y : {-3.0, 0.0, 2.5}) EXPECT_NEAR(t.to_free(t.to_param(y)), y, 1e-12);
  }
}

TEST(MinimizeFamily, HopfCirclesGoldenSection) {
  const auto f = make_family("hopf-circles");
  OptimizerConfig c;
  c.method = Method::golden_section;
  const auto r = minimize_family(f, EnergyKind::mobius, {}, c, 180);
  EXPECT_NEAR(r.params_opt[0], std::sqrt(2.0), 1e-4);
  ASSERT_TRUE(r.energy_doubled.has_value());
  EXPECT_GT(*r.energy_doubled, r.energy_opt);
  EXPECT_EQ(r.family, "hopf-circles");
  EXPECT_EQ(r.topology, (LinkingMatrix{{0, 1}, {1, 0}}));
}

TEST(MinimizeFamily, GoldenNeedsOneParameter) {
  OptimizerConfig c;
  c.method = Method::golden_section;
  EXPECT_THROW(minimize_family(make_family("link633"), EnergyKind::mobius, {}, c, 60), InvalidArgument);
}

TEST(MinimizeFamily, UnlinkedStartIsATopologyError) {
  const auto f = make_family("chain-layered", {.size = 1});
  auto x = f.initial();
  x[2] = 50.0;  // displacement far beyond the rings
  EXPECT_THROW(minimize_family(f, EnergyKind::md, x), TopologyError);
}

TEST(MinimizeFamily, IsDeterministic) {
  const auto f = make_family("hopf-polygons", {.sides = 5});
  const auto a = minimize_family(f, EnergyKind::md, {});
  const auto b = minimize_family(f, EnergyKind::md, {});
  EXPECT_EQ(a.params_opt, b.params_opt);
  EXPECT_EQ(a.energy_opt, b.energy_opt);
  EXPECT_EQ(a.n_evals, b.n_evals);
}
