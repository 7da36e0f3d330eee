#ifndef LINKFORGE_SPECIAL_HPP
#define LINKFORGE_SPECIAL_HPP

#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace linkforge {

/// Arithmetic-geometric mean of two positive numbers.
inline double agm(double a, double b) {
  for (int it = 0; it < 64 && std::abs(a - b) > 1e-16 * a; ++it) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

/// Complete elliptic integral of the first kind in the parameter convention,
/// K(m) = int_0^{pi/2} dtheta / sqrt(1 - m sin^2 theta), for any m < 1.
inline double elliptic_k(double m) {
  if (!(m < 1.0)) throw DivergenceError("elliptic_k: parameter m = " + std::to_string(m) + " must be < 1");
  return std::numbers::pi / (2.0 * agm(1.0, std::sqrt(1.0 - m)));
}

}  // namespace linkforge

#endif  // LINKFORGE_SPECIAL_HPP
