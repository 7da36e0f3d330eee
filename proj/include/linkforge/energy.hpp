#ifndef LINKFORGE_ENERGY_HPP
#define LINKFORGE_ENERGY_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "geometry.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "special.hpp"

namespace linkforge {

/// Pairwise distances below this fraction of the link diameter count as divergent.
inline constexpr double kDivergenceTolerance = 1e-12;

/// Energy conventions: every pair of line elements is counted twice, so a round
/// circle has self-energy 4 and the minimal Hopf link has cross-energy 4 pi^2.
inline constexpr double kPairCountFactor = 2.0;
inline constexpr double kCircleEnergy = 4.0;
inline constexpr double kHopfCrossMinimum = 4.0 * std::numbers::pi * std::numbers::pi;

struct PairEnergy {
  std::size_t i = 0;
  std::size_t j = 0;
  double energy = 0.0;
};

struct EnergyReport {
  std::vector<double> self_energies;
  std::vector<PairEnergy> cross_energies;  // unordered pairs, i < j, row-major order
  double total = 0.0;
  std::vector<std::size_t> n_vertices;

  double self_sum() const {
    double s = 0.0;
    for (double e : self_energies) s += e;
    return s;
  }
  double cross_sum() const {
    double s = 0.0;
    for (const auto& p : cross_energies) s += p.energy;
    return s;
  }
  double cross(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    for (const auto& p : cross_energies)
      if (p.i == i && p.j == j) return p.energy;
    throw InvalidArgument("EnergyReport has no pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
};

inline void to_json(nlohmann::json& j, const EnergyReport& r) {
  nlohmann::json cross = nlohmann::json::array();
  for (const auto& p : r.cross_energies) cross.push_back({{"i", p.i}, {"j", p.j}, {"energy", p.energy}});
  j = {{"self", r.self_energies}, {"cross", cross}, {"total", r.total}, {"n_vertices", r.n_vertices}};
}

namespace detail {

inline constexpr std::size_t kRowBlock = 32;

[[noreturn]] inline void diverge(const std::string& where) {
  throw DivergenceError(where + ": points closer than " + std::to_string(kDivergenceTolerance) +
                        " x link diameter");
}

inline double mobius_self_impl(const PolyCurve& c, double min_dist) {
  const std::size_t n = c.size();
  const double L = c.length();
  const double min2 = min_dist * min_dist;
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = c.vertex_weight(i);
  const auto pts = c.vertices();
  const double half = block_sum(n, kRowBlock, [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      const Point3 xi = pts[i];
      const double si = c.arc_position(i);
      double row = 0.0;
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d2 = norm2(pts[j] - xi);
        if (d2 < min2) diverge("mobius_self");
        double arc = c.arc_position(j) - si;
        arc = std::min(arc, L - arc);
        row += (1.0 / d2 - 1.0 / (arc * arc)) * w[j];
      }
      s += row * w[i];
    }
    return s;
  });
  return kPairCountFactor * half;
}

inline double mobius_cross_impl(const PolyCurve& a, const PolyCurve& b, double min_dist) {
  const std::size_t na = a.size(), nb = b.size();
  const double min2 = min_dist * min_dist;
  std::vector<double> wb(nb);
  for (std::size_t j = 0; j < nb; ++j) wb[j] = b.vertex_weight(j);
  const auto pa = a.vertices();
  const auto pb = b.vertices();
  const double sum = block_sum(na, kRowBlock, [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      const Point3 xi = pa[i];
      double row = 0.0;
      for (std::size_t j = 0; j < nb; ++j) {
        const double d2 = norm2(pb[j] - xi);
        if (d2 < min2) diverge("mobius_cross");
        row += wb[j] / d2;
      }
      s += row * a.vertex_weight(i);
    }
    return s;
  });
  return kPairCountFactor * sum;
}

inline double curve_scale(const PolyCurve& c) { return bounding_box(c).diagonal(); }

inline double pair_scale(const PolyCurve& a, const PolyCurve& b) {
  BoundingBox box = bounding_box(a);
  box.extend(bounding_box(b));
  return box.diagonal();
}

}  // namespace detail

/// Discrete Moebius self-energy: every vertex is a point charge weighted by
/// half its two adjacent edge lengths; ordered pairs i != j contribute
/// 1/|x_i - x_j|^2 - 1/arc(i, j)^2.
inline double mobius_self(const PolyCurve& curve) {
  require(curve.size() >= 4, "mobius_self needs at least 4 vertices");
  return detail::mobius_self_impl(curve, kDivergenceTolerance * detail::curve_scale(curve));
}

/// Discrete Moebius cross-energy, 2 * sum_i sum_j w_i w_j / |x_i - y_j|^2.
inline double mobius_cross(const PolyCurve& a, const PolyCurve& b) {
  return detail::mobius_cross_impl(a, b, kDivergenceTolerance * detail::pair_scale(a, b));
}

inline EnergyReport mobius_total(const Link& link) {
  const double min_dist = kDivergenceTolerance * link.diameter();
  EnergyReport r;
  for (const auto& c : link.components()) {
    require(c.size() >= 4, "mobius_total needs at least 4 vertices per component");
    r.self_energies.push_back(detail::mobius_self_impl(c, min_dist));
    r.n_vertices.push_back(c.size());
  }
  for (std::size_t i = 0; i < link.size(); ++i)
    for (std::size_t j = i + 1; j < link.size(); ++j)
      r.cross_energies.push_back({i, j, detail::mobius_cross_impl(link[i], link[j], min_dist)});
  r.total = r.self_sum() + r.cross_sum();
  return r;
}

namespace detail {

inline double md_self_impl(const PolyCurve& c, double min_dist) {
  const std::size_t n = c.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing edge
      const double md = segment_distance_unchecked(c[i], c[(i + 1) % n], c[j], c[(j + 1) % n]);
      if (md < min_dist) diverge("md_energy");
      sum += c.edge_length(i) * c.edge_length(j) / (md * md);
    }
  return kPairCountFactor * sum;
}

inline double md_cross_impl(const PolyCurve& a, const PolyCurve& b, double min_dist) {
  const std::size_t na = a.size(), nb = b.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const double md = segment_distance_unchecked(a[i], a[(i + 1) % na], b[j], b[(j + 1) % nb]);
      if (md < min_dist) diverge("md_energy");
      sum += a.edge_length(i) * b.edge_length(j) / (md * md);
    }
  return kPairCountFactor * sum;
}

}  // namespace detail

/// Minimum Distance energy: 2 * sum over unordered pairs of non-adjacent
/// edges of l_i l_j / MD_ij^2. Edges on different components are never adjacent.
inline EnergyReport md_energy(const Link& link) {
  const double min_dist = kDivergenceTolerance * link.diameter();
  EnergyReport r;
  for (const auto& c : link.components()) {
    require(c.size() >= 4, "md_energy needs at least 4 edges per component");
    r.self_energies.push_back(detail::md_self_impl(c, min_dist));
    r.n_vertices.push_back(c.size());
  }
  for (std::size_t i = 0; i < link.size(); ++i)
    for (std::size_t j = i + 1; j < link.size(); ++j)
      r.cross_energies.push_back({i, j, detail::md_cross_impl(link[i], link[j], min_dist)});
  r.total = r.self_sum() + r.cross_sum();
  return r;
}

enum class EnergyKind { mobius, md };

inline EnergyReport evaluate(const Link& link, EnergyKind kind) {
  return kind == EnergyKind::mobius ? mobius_total(link) : md_energy(link);
}

inline const char* to_string(EnergyKind k) { return k == EnergyKind::mobius ? "mobius" : "md"; }

inline EnergyKind parse_energy_kind(const std::string& s) {
  if (s == "mobius") return EnergyKind::mobius;
  if (s == "md") return EnergyKind::md;
  throw InvalidArgument("unknown energy kind '" + s + "' (expected mobius or md)");
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Cross-energy of two perpendicular unit circles whose centres are `delta`
/// apart along the cross product of their normals.
inline double hopf_cross_closed_form(double delta) {
  require(delta > 0.0 && delta < 2.0, "hopf_cross_closed_form: delta must lie in (0, 2)");
  const double d2 = delta * delta;
  const double den = d2 - 4.0;
  return -16.0 * std::numbers::pi / den * elliptic_k(-8.0 * (d2 - 2.0) / (den * den));
}

/// Cross-energy of the unit circle (cos t, sin t, 0) and the circle
/// (alpha cos s + delta, 0, alpha sin s), by adaptive Gauss-Legendre quadrature.
inline double hopf_cross_asymmetric(double alpha, double delta) {
  require(alpha > 0.0 && std::isfinite(delta), "hopf_cross_asymmetric: alpha must be positive");
  // The second circle meets the z = 0 plane at x = delta -/+ alpha; exactly one
  // of these must fall inside the unit disk.
  const double in = delta - alpha, out = delta + alpha;
  const double tol = 1e-12 * (1.0 + alpha + std::abs(delta));
  for (double x : {in, out})
    if (std::abs(std::abs(x) - 1.0) < tol) throw DivergenceError("hopf_cross_asymmetric: circles intersect");
  const bool in_inside = std::abs(in) < 1.0, out_inside = std::abs(out) < 1.0;
  require(in_inside != out_inside, "hopf_cross_asymmetric: circles are not linked");
  const auto integrand = [&](double theta, double phi) {
    const double dx = alpha * std::cos(theta) + delta - std::cos(phi);
    const double sp = std::sin(phi), st = alpha * std::sin(theta);
    return alpha / (dx * dx + sp * sp + st * st);
  };
  const double two_pi = 2.0 * std::numbers::pi;
  return kPairCountFactor * adaptive_gauss_legendre_2d(integrand, 0.0, two_pi, 0.0, two_pi, 1e-8);
}

/// MD cross-energy of two linked squares of side 2 in perpendicular planes,
/// centres `delta` apart.
inline double square_hopf_cross_formula(double delta) {
  require(delta > 0.0 && delta < 2.0, "square_hopf_cross_formula: delta must lie in (0, 2)");
  const double d2 = delta * delta;
  return 8.0 * (1.0 / ((2.0 + delta) * (2.0 + delta)) + 1.0 / ((2.0 - delta) * (2.0 - delta)) + 2.0 / d2 + 4.0 +
                2.0 + 4.0 / (1.0 + d2));
}

inline double square_hopf_cross_derivative(double delta) {
  require(delta > 0.0 && delta < 2.0, "square_hopf_cross_derivative: delta must lie in (0, 2)");
  const double p = 2.0 + delta, m = 2.0 - delta, q = 1.0 + delta * delta;
  return 8.0 * (-2.0 / (p * p * p) + 2.0 / (m * m * m) - 4.0 / (delta * delta * delta) - 8.0 * delta / (q * q));
}

/// Stationarity condition of square_hopf_cross_formula in x = delta^2.
inline double square_hopf_quintic(double x) {
  return ((((2.0 * x - 10.0) * x + 73.0) * x - 48.0) * x - 40.0) * x - 32.0;
}

/// MD energy of a single rectangle of aspect ratio alpha.
inline double rectangle_md_energy(double alpha) {
  require(alpha > 0.0, "rectangle_md_energy: alpha must be positive");
  return 2.0 * (1.0 / (alpha * alpha) + alpha * alpha);
}

/// Total MD energy of Borromean rings made of three mutually perpendicular
/// 1 x alpha rectangles with a common centre.
inline double borromean_rect_energy(double alpha) {
  require(alpha > 1.0, "borromean_rect_energy: alpha must exceed 1");
  const double a = alpha, a2 = a * a;
  return 6.0 * (17.0 * a2 + 16.0 * a / (a2 + 1.0) + 16.0 / (2.0 * a2 - 2.0 * a + 1.0) +
                8.0 * a / ((a - 1.0) * (a - 1.0)) + 8.0 * a / ((a + 1.0) * (a + 1.0)) + 1.0 / a2);
}

}  // namespace linkforge

#endif  // LINKFORGE_ENERGY_HPP
