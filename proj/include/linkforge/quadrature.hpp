#ifndef LINKFORGE_QUADRATURE_HPP
#define LINKFORGE_QUADRATURE_HPP

#include <array>
#include <cmath>

namespace linkforge {

/// 8-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre8 {
  static constexpr std::array<double, 8> nodes{-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                               -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                               0.7966664774136267,  0.9602898564975363};
  static constexpr std::array<double, 8> weights{0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                                 0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                                 0.2223810344533745, 0.1012285362903763};
};

/// Tensor-product Gauss-Legendre over [a0,a1] x [b0,b1] with `panels` equal
/// panels per axis.
template <typename F>
double gauss_legendre_2d(F&& f, double a0, double a1, double b0, double b1, int panels) {
  using GL = GaussLegendre8;
  const double ha = (a1 - a0) / panels, hb = (b1 - b0) / panels;
  double total = 0.0;
  for (int pa = 0; pa < panels; ++pa) {
    const double ca = a0 + (pa + 0.5) * ha;
    for (int pb = 0; pb < panels; ++pb) {
      const double cb = b0 + (pb + 0.5) * hb;
      double panel = 0.0;
      for (std::size_t i = 0; i < GL::nodes.size(); ++i) {
        const double x = ca + 0.5 * ha * GL::nodes[i];
        double row = 0.0;
        for (std::size_t j = 0; j < GL::nodes.size(); ++j) row += GL::weights[j] * f(x, cb + 0.5 * hb * GL::nodes[j]);
        panel += GL::weights[i] * row;
      }
      total += panel;
    }
  }
  return total * 0.25 * ha * hb;
}

/// Doubles the panel count until successive estimates agree to `rel_tol`.
template <typename F>
double adaptive_gauss_legendre_2d(F&& f, double a0, double a1, double b0, double b1, double rel_tol = 1e-8,
                                  int max_panels = 1024) {
  int panels = 2;
  double prev = gauss_legendre_2d(f, a0, a1, b0, b1, panels);
  while (panels < max_panels) {
    panels *= 2;
    const double cur = gauss_legendre_2d(f, a0, a1, b0, b1, panels);
    if (std::abs(cur - prev) <= rel_tol * std::abs(cur)) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace linkforge

#endif  // LINKFORGE_QUADRATURE_HPP
