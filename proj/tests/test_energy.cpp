#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <linkforge/energy.hpp>
#include <linkforge/families.hpp>
#include <linkforge/geometry.hpp>
#include <linkforge/oracles.hpp>
#include <linkforge/special.hpp>

using namespace linkforge;

namespace {

constexpr double kPi = std::numbers::pi;

// Plain double loop over vertex charges, no blocking or threads.
double brute_cross(const PolyCurve& a, const PolyCurve& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a.vertex_weight(i) * b.vertex_weight(j) / norm2(a[i] - b[j]);
  return 2.0 * s;
}

double brute_self(const PolyCurve& c) {
  const double L = c.length();
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i == j) continue;
      double arc = std::abs(c.arc_position(i) - c.arc_position(j));
      arc = std::min(arc, L - arc);
      s += c.vertex_weight(i) * c.vertex_weight(j) * (1.0 / norm2(c[i] - c[j]) - 1.0 / (arc * arc));
    }
  return s;
}

class ThreadEnv {
public:
  explicit ThreadEnv(const char* value) {
    if (const char* old = std::getenv("LINKFORGE_THREADS")) saved_ = old;
    setenv("LINKFORGE_THREADS", value, 1);
  }
  ~ThreadEnv() {
    if (saved_.empty())
      unsetenv("LINKFORGE_THREADS");
    else
      setenv("LINKFORGE_THREADS", saved_.c_str(), 1);
  }

private:
  std::string saved_;
};

}  // namespace

TEST(Energy, CircleSelfEnergyReference) {
  EXPECT_NEAR(mobius_self(make_circle(1.0, Frame{}, 360)), 3.9608, 5e-5);
  EXPECT_NEAR(mobius_self(make_circle(1.0, Frame{}, 720)), 3.9804, 5e-5);
}

TEST(Energy, CircleSelfEnergyConvergesFirstOrder) {
  const double e1 = 4.0 - mobius_self(make_circle(1.0, Frame{}, 200));
  const double e2 = 4.0 - mobius_self(make_circle(1.0, Frame{}, 400));
  EXPECT_GT(e1, 0.0);
  EXPECT_NEAR(e1 / e2, 2.0, 0.05);
}

TEST(Energy, MobiusMatchesBruteForce) {
  const Link hopf = family_hopf_circles(0.8, 1.1, 90);
  EXPECT_NEAR(mobius_cross(hopf[0], hopf[1]), brute_cross(hopf[0], hopf[1]), 1e-10);
  const PolyCurve trefoil = make_torus_knot(2, 3, 2.0, 0.7, 150);
  EXPECT_NEAR(mobius_self(trefoil), brute_self(trefoil), 1e-9);
}

TEST(Energy, MobiusInvariantUnderSimilarity) {
  const Link hopf = family_hopf_circles(1.0, 1.3, 120);
  RigidTransform t;
  t.rotation = rotation(normalized(Point3{1, -2, 0.5}), 0.9);
  t.translation = {3, -1, 7};
  t.scale = 2.7;
  const auto a = mobius_total(hopf), b = mobius_total(transform(hopf, t));
  EXPECT_NEAR(a.total, b.total, 1e-9 * a.total);
  const auto c = md_energy(hopf), d = md_energy(transform(hopf, t));
  EXPECT_NEAR(c.total, d.total, 1e-9 * c.total);
}

TEST(Energy, ReportStructure) {
  const Link three = family_borromean({}, 60);
  const auto r = mobius_total(three);
  ASSERT_EQ(r.self_energies.size(), 3u);
  ASSERT_EQ(r.cross_energies.size(), 3u);
  EXPECT_NEAR(r.total, r.self_sum() + r.cross_sum(), 1e-12);
  EXPECT_DOUBLE_EQ(r.cross(2, 0), r.cross(0, 2));
  EXPECT_THROW(r.cross(0, 5), InvalidArgument);
  EXPECT_EQ(parse_energy_kind("md"), EnergyKind::md);
  EXPECT_THROW(parse_energy_kind("elastic"), InvalidArgument);
}

TEST(Energy, ThreadCountDoesNotChangeResult) {
  const Link hopf = family_hopf_circles(1.0, 1.2, 700);
  double one = 0.0, four = 0.0;
  {
    ThreadEnv env("1");
    one = mobius_total(hopf).total;
  }
  {
    ThreadEnv env("4");
    four = mobius_total(hopf).total;
  }
  EXPECT_EQ(one, four);
}

TEST(Energy, EllipticKMatchesQuadrature) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-20.0, 0.99);
  for (int k = 0; k < 100; ++k) {
    const double m = u(rng);
    const double ref = oracle::elliptic_k(m);
    EXPECT_NEAR(elliptic_k(m), ref, 1e-13 * ref) << "m = " << m;
  }
  EXPECT_DOUBLE_EQ(elliptic_k(0.0), kPi / 2);
  EXPECT_THROW(elliptic_k(1.0), DivergenceError);
}

TEST(Energy, HopfClosedForm) {
  EXPECT_NEAR(hopf_cross_closed_form(std::sqrt(2.0)), 4 * kPi * kPi, 1e-12);
  for (double d : {0.3, 0.9, 1.2, 1.7}) EXPECT_GT(hopf_cross_closed_form(d), 4 * kPi * kPi);
  EXPECT_THROW(hopf_cross_closed_form(2.0), InvalidArgument);
}

TEST(Energy, HopfClosedFormAgreesWithDiscrete) {
  for (double d : {0.7, 1.3}) {
    const Link hopf = family_hopf_circles(1.0, d, 720);
    const double discrete = mobius_cross(hopf[0], hopf[1]);
    EXPECT_NEAR(discrete, hopf_cross_closed_form(d), 2e-3 * discrete) << "delta = " << d;
  }
}

TEST(Energy, AsymmetricQuadratureReducesToClosedForm) {
  for (double d : {0.5, std::sqrt(2.0), 1.8})
    EXPECT_NEAR(hopf_cross_asymmetric(1.0, d), hopf_cross_closed_form(d), 1e-7) << "delta = " << d;
}

TEST(Energy, AsymmetricQuadratureAgreesWithDiscrete) {
  const double alpha = 0.6, delta = 0.9;
  const Link hopf = family_hopf_circles(alpha, delta, 720);
  const double discrete = mobius_cross(hopf[0], hopf[1]);
  EXPECT_NEAR(hopf_cross_asymmetric(alpha, delta), discrete, 3e-3 * discrete);
  EXPECT_THROW(hopf_cross_asymmetric(0.5, 0.5), DivergenceError);
  EXPECT_THROW(hopf_cross_asymmetric(0.5, 3.0), InvalidArgument);
}

TEST(Energy, SquareHopfFormulaMatchesGeometry) {
  for (double d : {0.4, 1.2, 1.7}) {
    const auto r = md_energy(family_hopf_polygons(4, d));
    EXPECT_NEAR(r.cross(0, 1), square_hopf_cross_formula(d), 1e-10) << "delta = " << d;
  }
}

TEST(Energy, SquareHopfDerivativeAndQuintic) {
  for (double d : {0.5, 1.0, 1.5}) {
    const double h = 1e-5;
    const double fd = (square_hopf_cross_formula(d + h) - square_hopf_cross_formula(d - h)) / (2 * h);
    EXPECT_NEAR(square_hopf_cross_derivative(d), fd, 1e-5 * std::abs(fd) + 1e-6);
  }
  // The derivative and the quintic vanish together.
  double lo = 1.0, hi = 1.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (square_hopf_cross_derivative(mid) < 0 ? lo : hi) = mid;
  }
  EXPECT_NEAR(square_hopf_quintic(lo * lo), 0.0, 1e-9);
}

TEST(Energy, RectangleFormulasMatchGeometry) {
  for (double a : {1.0, 1.6, 3.0}) {
    const Link r({make_rectangle(a, 1.0, Frame{}, 4)});
    EXPECT_NEAR(md_energy(r).total, rectangle_md_energy(a), 1e-12);
  }
  for (double a : {1.3, 1.75599, 2.5}) {
    BorromeanParams p;
    p.shape = BorromeanShape::rectangle;
    p.aspect = a;
    EXPECT_NEAR(md_energy(family_borromean(p, 4)).total, borromean_rect_energy(a), 1e-9 * borromean_rect_energy(a))
        << "aspect = " << a;
  }
}

TEST(Energy, MdEnergyOfSquareSkipsAdjacentEdges) {
  const Link sq({PolyCurve({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}})});
  EXPECT_DOUBLE_EQ(md_energy(sq).total, 4.0);
}
