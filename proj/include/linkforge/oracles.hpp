#ifndef LINKFORGE_ORACLES_HPP
#define LINKFORGE_ORACLES_HPP

// Slow reference implementations used to cross-check the fast routines. They
// share no code with the routines they check.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "vec3.hpp"

namespace linkforge::oracle {

/// Minimum distance between segments [p0,p1] and [q0,q1]: the smaller of a
/// dense (grid+1)^2 parameter grid and a nested ternary search. The squared
/// distance is convex in the two segment parameters, so the ternary search
/// converges to the global minimum; the grid guards the search.
inline double segment_distance(const Point3& p0, const Point3& p1, const Point3& q0, const Point3& q1,
                               int grid = 1000) {
  const auto point_p = [&](double s) { return p0 + s * (p1 - p0); };
  const auto point_q = [&](double t) { return q0 + t * (q1 - q0); };
  const auto d2 = [&](double s, double t) { return norm2(point_p(s) - point_q(t)); };

  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= grid; ++i) {
    const Point3 a = point_p(static_cast<double>(i) / grid);
    for (int j = 0; j <= grid; ++j) best = std::min(best, norm2(a - point_q(static_cast<double>(j) / grid)));
  }

  const auto ternary = [](auto&& f) {
    double lo = 0.0, hi = 1.0;
    for (int k = 0; k < 200; ++k) {
      const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (f(m1) <= f(m2))
        hi = m2;
      else
        lo = m1;
    }
    return 0.5 * (lo + hi);
  };
  const auto inner = [&](double s) { return d2(s, ternary([&](double t) { return d2(s, t); })); };
  const double s = ternary(inner);
  best = std::min({best, inner(s), inner(0.0), inner(1.0)});
  return std::sqrt(best);
}

/// Complete elliptic integral of the first kind, parameter m, by adaptive
/// Gauss-Kronrod quadrature of the defining integral.
inline double elliptic_k(double m) {
  const auto integrand = [m](double theta) {
    const double s = std::sin(theta);
    return 1.0 / std::sqrt(1.0 - m * s * s);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 0.5 * std::numbers::pi, 15,
                                                                        1e-13);
}

}  // namespace linkforge::oracle

#endif  // LINKFORGE_ORACLES_HPP
