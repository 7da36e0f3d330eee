#ifndef LINKFORGE_FAMILIES_HPP
#define LINKFORGE_FAMILIES_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "energy.hpp"
#include "errors.hpp"
#include "geometry.hpp"

namespace linkforge {

inline constexpr int kDefaultSmoothVertices = 360;

using LinkingMatrix = std::vector<std::vector<int>>;

// ---------------------------------------------------------------------------
// Hopf links
// ---------------------------------------------------------------------------

/// Unit circle in the XY plane and a radius-alpha circle in the XZ plane
/// centred at (delta, 0, 0).
inline Link family_hopf_circles(double alpha, double delta, int n = kDefaultSmoothVertices) {
  require(alpha > 0.0, "hopf-circles: alpha must be positive");
  const double in = delta - alpha, out = delta + alpha;
  require((std::abs(in) < 1.0) != (std::abs(out) < 1.0), "hopf-circles: parameters do not give a Hopf link");
  return Link({make_circle(1.0, Frame{}, n), make_circle(alpha, Frame{{delta, 0.0, 0.0}, kUnitX, kUnitZ}, n)});
}

/// Two congruent regular polygons with unit apothem (side 2 for squares) in
/// the XY and XZ planes, centres `delta` apart along x. Rotations are measured
/// from the in-plane x axis; the defaults turn a flat side of each polygon
/// toward the other.
inline Link family_hopf_polygons(int sides, double delta, double rotation1, double rotation2) {
  require(sides >= 4, "hopf-polygons: need at least 4 sides");
  const double circumradius = 1.0 / std::cos(std::numbers::pi / sides);
  return Link({make_stretched_ngon(sides, 1.0, rotation1, circumradius, Frame{}),
               make_stretched_ngon(sides, 1.0, rotation2, circumradius, Frame{{delta, 0.0, 0.0}, kUnitX, kUnitZ})});
}

inline Link family_hopf_polygons(int sides, double delta) {
  const double rot = default_ngon_rotation(sides);
  return family_hopf_polygons(sides, delta, rot, rot + std::numbers::pi);
}

// ---------------------------------------------------------------------------
// Tambourine
// ---------------------------------------------------------------------------

/// Radial offset (in units of r) at which a radius-r circle threaded on the
/// unit circle has minimal cross-energy: centre at sqrt(1 + r^2).
inline double tambourine_default_offset(double radius) { return (std::sqrt(1.0 + radius * radius) - 1.0) / radius; }

/// Central vertex count that keeps the central edge length near r / 25.
inline int tambourine_central_vertices(double radius, int n_small) {
  return std::max(n_small, static_cast<int>(std::ceil(50.0 * std::numbers::pi / radius)));
}

/// Central unit circle in XY plus `count` radius-r circles, one per equally
/// spaced point of the unit circle. Each small circle lies in the plane
/// spanned by the local radial direction and z (normal along the local
/// tangent) with its centre pushed out radially by offset * r.
inline Link family_tambourine(int count, double radius, double offset, int n_small = kDefaultSmoothVertices,
                              int n_central = 0) {
  require(count >= 1, "tambourine: need at least one small circle");
  require(radius > 0.0 && radius < 1.0, "tambourine: small radius must lie in (0, 1)");
  require(std::abs(offset) < 1.0, "tambourine: |offset| must be < 1 for the small circles to link");
  const double pi = std::numbers::pi;
  if (count > 1) {
    const double gap = 2.0 * (1.0 + offset * radius) * std::sin(pi / count);
    require(gap > 2.0 * radius, "tambourine: small circles overlap; reduce count or radius");
  }
  if (n_central <= 0) n_central = tambourine_central_vertices(radius, n_small);
  std::vector<PolyCurve> comps;
  comps.reserve(count + 1);
  comps.push_back(make_circle(1.0, Frame{}, n_central));
  for (int k = 0; k < count; ++k) {
    const double phi = 2.0 * pi * k / count;
    const Point3 radial{std::cos(phi), std::sin(phi), 0.0};
    comps.push_back(make_circle(radius, Frame{(1.0 + offset * radius) * radial, radial, kUnitZ}, n_small));
  }
  return Link(std::move(comps));
}

// ---------------------------------------------------------------------------
// 6^3_3
// ---------------------------------------------------------------------------

/// Frame whose plane contains the x axis, tilted by `angle` about x from the XY plane.
inline Frame inclined_frame(const Point3& origin, double angle) {
  return {origin, kUnitX, {0.0, std::cos(angle), std::sin(angle)}};
}

/// Two unit circles centred at (-/+ d/2, 0, 0) whose planes contain the x axis
/// and meet at angle `incline`, plus a radius-r circle at the origin in the XY
/// plane. The big circles are tilted by -/+ (pi - incline) / 2 from XY, so the
/// small circle bisects the obtuse angle between them; at incline = 60 degrees
/// the three planes are equally spaced.
inline Link family_link633(double d, double incline, double r_small, int n = kDefaultSmoothVertices) {
  require(d > 0.0 && r_small > 0.0, "link633: separation and small radius must be positive");
  require(incline > 0.0 && incline < std::numbers::pi, "link633: inclination must lie in (0, pi)");
  const double tilt = 0.5 * (std::numbers::pi - incline);
  return Link({make_circle(1.0, inclined_frame({-0.5 * d, 0.0, 0.0}, -tilt), n),
               make_circle(1.0, inclined_frame({0.5 * d, 0.0, 0.0}, tilt), n),
               make_circle(r_small, inclined_frame({}, 0.0), n)});
}

// ---------------------------------------------------------------------------
// Borromean rings
// ---------------------------------------------------------------------------

enum class BorromeanShape { ellipse, stadium, rectangle, ngon, sym_decagon };

struct BorromeanParams {
  BorromeanShape shape = BorromeanShape::ellipse;
  double aspect = 1.7;
  int sides = 10;              // ngon
  double rotation = -1.0;      // ngon; negative selects pi / sides
  Point2 one{0.44, 0.75};      // sym_decagon, 1 o'clock
  Point2 two{0.52, 0.27};      // sym_decagon, 2 o'clock
};

/// Frame for component i: plane normal e_i, long axis e_{i+1}.
inline Frame borromean_frame(int i) {
  const std::array<Point3, 3> e{kUnitX, kUnitY, kUnitZ};
  return {{}, e[(i + 1) % 3], e[(i + 2) % 3]};
}

inline PolyCurve borromean_component(const BorromeanParams& p, int i, int n) {
  const Frame f = borromean_frame(i);
  switch (p.shape) {
    case BorromeanShape::ellipse:
      return make_ellipse(p.aspect, 1.0, f, n);
    case BorromeanShape::stadium:
      return make_stadium(p.aspect, 2.0, f, n);
    case BorromeanShape::rectangle:
      return make_rectangle(p.aspect, 1.0, f);
    case BorromeanShape::ngon:
      return make_stretched_ngon(p.sides, p.aspect, p.rotation < 0.0 ? default_ngon_rotation(p.sides) : p.rotation,
                                 1.0, f);
    case BorromeanShape::sym_decagon:
      // 12 o'clock along the long axis.
      return make_symmetric_decagon(p.one, p.two, Frame{{}, f.v, f.u});
  }
  throw InvalidArgument("unknown Borromean shape");
}

/// Three congruent planar curves in the three coordinate planes, sharing a
/// centre, with cyclically arranged long axes.
inline Link family_borromean(const BorromeanParams& p, int n = kDefaultSmoothVertices) {
  if (p.shape != BorromeanShape::sym_decagon)
    require(p.aspect > 1.0, "borromean: aspect must exceed 1 (three circles cannot form Borromean rings)");
  return Link({borromean_component(p, 0, n), borromean_component(p, 1, n), borromean_component(p, 2, n)});
}

// ---------------------------------------------------------------------------
// Linear chains
// ---------------------------------------------------------------------------

enum class RingShape { circle, square };

inline RingShape parse_ring_shape(const std::string& s) {
  if (s == "circle") return RingShape::circle;
  if (s == "square") return RingShape::square;
  throw InvalidArgument("unknown ring shape '" + s + "' (expected circle or square)");
}

/// Unit circle or side-2 square in the given frame.
inline PolyCurve make_ring(RingShape shape, const Frame& f, int n, double scale = 1.0) {
  return shape == RingShape::circle ? make_circle(scale, f, n) : make_rectangle(2.0 * scale, 2.0 * scale, f);
}

/// Plane for chain member k: XY for even k, XZ for odd k.
inline Frame chain_frame(const Point3& origin, int k) {
  return k % 2 == 0 ? Frame{origin, kUnitX, kUnitY} : Frame{origin, kUnitX, kUnitZ};
}

/// m congruent rings with centres (k * spacing, 0, 0), alternating planes.
inline Link family_chain_congruent(int m, double spacing, RingShape shape, int n = kDefaultSmoothVertices) {
  require(m >= 2, "chain-congruent: need at least 2 components");
  require(spacing > 0.0 && spacing < 2.0, "chain-congruent: spacing must lie in (0, 2)");
  std::vector<PolyCurve> comps;
  for (int k = 0; k < m; ++k) comps.push_back(make_ring(shape, chain_frame({k * spacing, 0.0, 0.0}, k), n));
  return Link(std::move(comps));
}

struct ChainLayer {
  double area = 1.0;
  double displacement = 1.0;  // centre distance from the inner neighbour
  double aspect = 1.0;        // extent along x over transverse extent
};

/// Mirror-symmetric chain of 2N+1 rectangles: a unit-area centre rectangle
/// plus N layers on each side.
struct ChainLayout {
  double center_aspect = 1.0;
  std::vector<ChainLayer> layers;

  std::size_t n_layers() const { return layers.size(); }
  std::size_t n_params() const { return 3 * layers.size() + 1; }

  std::vector<double> to_params() const {
    std::vector<double> x{center_aspect};
    for (const auto& l : layers) x.insert(x.end(), {l.area, l.displacement, l.aspect});
    return x;
  }

  static ChainLayout from_params(std::span<const double> x) {
    require(!x.empty() && (x.size() - 1) % 3 == 0, "chain layout needs 3N+1 parameters");
    ChainLayout c;
    c.center_aspect = x[0];
    for (std::size_t i = 1; i < x.size(); i += 3) c.layers.push_back({x[i], x[i + 1], x[i + 2]});
    return c;
  }
};

/// Rectangles ordered left to right; layer k sits in XY for even k, XZ for odd k.
inline Link family_chain_layered(const ChainLayout& layout) {
  require(layout.center_aspect > 0.0, "chain-layered: aspect must be positive");
  const std::size_t N = layout.n_layers();
  std::vector<PolyCurve> right;
  std::vector<PolyCurve> left;
  const auto rect = [](double area, double aspect, const Frame& f) {
    return make_rectangle(std::sqrt(area * aspect), std::sqrt(area / aspect), f);
  };
  double x = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    const auto& l = layout.layers[k];
    require(l.area > 0.0 && l.displacement > 0.0 && l.aspect > 0.0, "chain-layered: layer values must be positive");
    x += l.displacement;
    right.push_back(rect(l.area, l.aspect, chain_frame({x, 0.0, 0.0}, static_cast<int>(k + 1))));
    left.push_back(rect(l.area, l.aspect, chain_frame({-x, 0.0, 0.0}, static_cast<int>(k + 1))));
  }
  std::vector<PolyCurve> comps(left.rbegin(), left.rend());
  comps.push_back(rect(1.0, layout.center_aspect, chain_frame({}, 0)));
  comps.insert(comps.end(), right.begin(), right.end());
  return Link(std::move(comps));
}

// ---------------------------------------------------------------------------
// Chainmail
// ---------------------------------------------------------------------------

enum class ChainmailStyle { european, japanese };

/// Tilt patterns for 4-in-1 mail. `checkerboard_diagonal` tilts sublattice
/// (i + j) even by +theta and odd by -theta about the lattice diagonal, which
/// links every ring to its four lattice neighbours. The two y-axis variants
/// link only along y and are kept for comparison.
enum class EuropeanTilt { checkerboard_diagonal, checkerboard_y, rows_y };

inline EuropeanTilt parse_european_tilt(const std::string& s) {
  if (s == "checkerboard-diagonal") return EuropeanTilt::checkerboard_diagonal;
  if (s == "checkerboard-y") return EuropeanTilt::checkerboard_y;
  if (s == "rows-y") return EuropeanTilt::rows_y;
  throw InvalidArgument("unknown tilt pattern '" + s + "'");
}

struct ChainmailParams {
  ChainmailStyle style = ChainmailStyle::european;
  int size = 3;  // N: rings per side of the planar lattice
  RingShape shape = RingShape::circle;
  // european
  double d4 = 1.55;
  double theta4 = 0.75;  // radians
  EuropeanTilt tilt = EuropeanTilt::checkerboard_diagonal;
  // japanese
  double dj = 3.0;
  double lj = 0.6;
};

inline Link family_chainmail(const ChainmailParams& p, int n = kDefaultSmoothVertices) {
  require(p.size >= 1, "chainmail: size must be at least 1");
  const int N = p.size;
  std::vector<PolyCurve> comps;
  std::vector<std::string> labels;
  if (p.style == ChainmailStyle::european) {
    require(p.d4 > 0.0 && p.d4 < 2.0, "chainmail-european: D4 must lie in (0, 2)");
    require(p.theta4 > 0.0 && p.theta4 < 0.5 * std::numbers::pi, "chainmail-european: theta4 must lie in (0, 90 deg)");
    // With the diagonal tilt the mail rows run along (1, -1, 0); square rings
    // keep their edges along the rows, as in woven 4-in-1.
    const bool diagonal = p.tilt == EuropeanTilt::checkerboard_diagonal;
    const Point3 axis = diagonal ? normalized(Point3{1.0, 1.0, 0.0}) : kUnitY;
    const Point3 across = diagonal ? normalized(Point3{-1.0, 1.0, 0.0}) : kUnitX;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        const double sign = p.tilt == EuropeanTilt::rows_y ? (j % 2 == 0 ? 1.0 : -1.0)
                                                           : ((i + j) % 2 == 0 ? 1.0 : -1.0);
        const Mat3 R = rotation(axis, sign * p.theta4);
        const Frame f{{i * p.d4, j * p.d4, 0.0}, R * axis, R * across};
        comps.push_back(make_ring(p.shape, f, n));
        labels.push_back("ring_" + std::to_string(i) + "_" + std::to_string(j));
      }
  } else {
    require(p.dj > 2.0, "chainmail-japanese: DJ must exceed 2");
    require(p.lj > 0.5 * p.dj - 1.0, "chainmail-japanese: LJ must exceed DJ/2 - 1 to reach the planar rings");
    require(p.lj < 0.5 * p.dj + 1.0, "chainmail-japanese: LJ must be below DJ/2 + 1");
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        comps.push_back(make_ring(p.shape, Frame{{i * p.dj, j * p.dj, 0.0}, kUnitX, kUnitY}, n));
        labels.push_back("ring_" + std::to_string(i) + "_" + std::to_string(j));
      }
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (i + 1 < N) {
          comps.push_back(make_ring(p.shape, Frame{{(i + 0.5) * p.dj, j * p.dj, 0.0}, kUnitX, kUnitZ}, n, p.lj));
          labels.push_back("link_x_" + std::to_string(i) + "_" + std::to_string(j));
        }
        if (j + 1 < N) {
          comps.push_back(make_ring(p.shape, Frame{{i * p.dj, (j + 0.5) * p.dj, 0.0}, kUnitY, kUnitZ}, n, p.lj));
          labels.push_back("link_y_" + std::to_string(i) + "_" + std::to_string(j));
        }
      }
  }
  return Link(std::move(comps), std::move(labels));
}

/// Expected |linking number| pattern of a chainmail of the given style and size.
inline LinkingMatrix chainmail_expected_topology(ChainmailStyle style, int N) {
  const auto ring = [N](int i, int j) { return static_cast<std::size_t>(i * N + j); };
  if (style == ChainmailStyle::european) {
    LinkingMatrix m(N * N, std::vector<int>(N * N, 0));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (i + 1 < N) m[ring(i, j)][ring(i + 1, j)] = m[ring(i + 1, j)][ring(i, j)] = 1;
        if (j + 1 < N) m[ring(i, j)][ring(i, j + 1)] = m[ring(i, j + 1)][ring(i, j)] = 1;
      }
    return m;
  }
  const std::size_t total = N * N + 2 * N * (N - 1);
  LinkingMatrix m(total, std::vector<int>(total, 0));
  std::size_t next = N * N;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i + 1 < N) {
        m[next][ring(i, j)] = m[ring(i, j)][next] = 1;
        m[next][ring(i + 1, j)] = m[ring(i + 1, j)][next] = 1;
        ++next;
      }
      if (j + 1 < N) {
        m[next][ring(i, j)] = m[ring(i, j)][next] = 1;
        m[next][ring(i, j + 1)] = m[ring(i, j + 1)][next] = 1;
        ++next;
      }
    }
  return m;
}

// ---------------------------------------------------------------------------
// Family registry
// ---------------------------------------------------------------------------

struct ParamInfo {
  std::string name;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  double initial = 0.0;
  bool angle = false;  // radians internally, degrees on the command line
};

/// Fixed (non-optimized) settings shared by the family constructors.
struct FamilyOptions {
  int size = 3;             // chain components, chainmail width, tambourine count, chain layers
  double alpha = 1.0;       // hopf-circles radius ratio
  int sides = 4;            // hopf-polygons, borromean-ngon
  double radius = 0.01;     // tambourine small radius
  RingShape shape = RingShape::circle;
  EuropeanTilt tilt = EuropeanTilt::checkerboard_diagonal;
  int p = 2;                // torus-knot
  int q = 3;
};

struct FamilySpec {
  std::string name;
  std::vector<ParamInfo> params;
  int default_vertices = kDefaultSmoothVertices;
  std::function<Link(std::span<const double>, int)> builder;
  /// Expected |linking number| matrix; empty when the family does not fix one.
  LinkingMatrix expected_topology;

  std::size_t n_params() const { return params.size(); }

  std::vector<std::string> param_names() const {
    std::vector<std::string> out;
    for (const auto& p : params) out.push_back(p.name);
    return out;
  }

  std::vector<double> initial() const {
    std::vector<double> out;
    for (const auto& p : params) out.push_back(p.initial);
    return out;
  }

  std::size_t param_index(const std::string& name) const {
    for (std::size_t i = 0; i < params.size(); ++i)
      if (params[i].name == name) return i;
    throw InvalidArgument("family " + this->name + " has no parameter '" + name + "'");
  }

  Link build(std::span<const double> x, int vertices = 0) const {
    require(x.size() == params.size(), "family " + name + " expects " + std::to_string(params.size()) +
                                           " parameters, got " + std::to_string(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
      require(x[i] > params[i].lo && x[i] < params[i].hi,
              "parameter " + params[i].name + " = " + std::to_string(x[i]) + " is out of bounds");
    return builder(x, vertices > 0 ? vertices : default_vertices);
  }
};

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "hopf-circles",       "hopf-polygons",      "tambourine",        "link633",
      "borromean-ellipse",  "borromean-stadium",  "borromean-rectangle", "borromean-ngon",
      "borromean-decagon",  "chain-congruent",    "chain-layered",     "chainmail-european",
      "chainmail-japanese", "torus-knot"};
  return names;
}

namespace detail {

inline LinkingMatrix uniform_topology(std::size_t m, int value) {
  LinkingMatrix t(m, std::vector<int>(m, value));
  for (std::size_t i = 0; i < m; ++i) t[i][i] = 0;
  return t;
}

inline LinkingMatrix chain_topology(std::size_t m) {
  LinkingMatrix t(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i + 1 < m; ++i) t[i][i + 1] = t[i + 1][i] = 1;
  return t;
}

}  // namespace detail

inline FamilySpec make_family(const std::string& name, const FamilyOptions& o = {}) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double pi = std::numbers::pi;
  FamilySpec f;
  f.name = name;

  if (name == "hopf-circles") {
    const double alpha = o.alpha;
    f.params = {{"delta", std::abs(1.0 - alpha), 1.0 + alpha, std::sqrt(1.0 + alpha * alpha)}};
    f.builder = [alpha](std::span<const double> x, int n) { return family_hopf_circles(alpha, x[0], n); };
    f.expected_topology = detail::uniform_topology(2, 1);
  } else if (name == "hopf-polygons") {
    const int sides = o.sides;
    f.params = {{"delta", 0.0, 2.0, 1.2}};
    f.default_vertices = sides;
    f.builder = [sides](std::span<const double> x, int) { return family_hopf_polygons(sides, x[0]); };
    f.expected_topology = detail::uniform_topology(2, 1);
  } else if (name == "tambourine") {
    const int count = o.size;
    const double r = o.radius;
    f.params = {{"offset", -1.0, 1.0, tambourine_default_offset(r)}};
    f.builder = [count, r](std::span<const double> x, int n) { return family_tambourine(count, r, x[0], n); };
    LinkingMatrix t(count + 1, std::vector<int>(count + 1, 0));
    for (int k = 1; k <= count; ++k) t[0][k] = t[k][0] = 1;
    f.expected_topology = t;
  } else if (name == "link633") {
    f.params = {{"separation", 0.0, 4.0, std::sqrt(3.0)},
                {"incline", 0.0, pi, pi / 3.0, true},
                {"small_radius", 0.0, 2.0, 0.5}};
    f.builder = [](std::span<const double> x, int n) { return family_link633(x[0], x[1], x[2], n); };
    f.expected_topology = detail::uniform_topology(3, 1);
  } else if (name.starts_with("borromean-")) {
    BorromeanParams base;
    const std::string shape = name.substr(10);
    if (shape == "ellipse" || shape == "stadium" || shape == "rectangle") {
      base.shape = shape == "ellipse"   ? BorromeanShape::ellipse
                   : shape == "stadium" ? BorromeanShape::stadium
                                        : BorromeanShape::rectangle;
      f.params = {{"aspect", 1.0, 4.0, shape == "rectangle" ? 1.756 : 1.7}};
      if (base.shape == BorromeanShape::rectangle) f.default_vertices = 4;
      f.builder = [base](std::span<const double> x, int n) {
        BorromeanParams p = base;
        p.aspect = x[0];
        return family_borromean(p, n);
      };
    } else if (shape == "ngon") {
      base.shape = BorromeanShape::ngon;
      base.sides = o.sides;
      f.params = {{"aspect", 1.0, 4.0, 1.74}, {"rotation", -pi, pi, default_ngon_rotation(o.sides), true}};
      f.default_vertices = o.sides;
      f.builder = [base](std::span<const double> x, int) {
        BorromeanParams p = base;
        p.aspect = x[0];
        p.rotation = x[1];
        return family_borromean(p);
      };
    } else if (shape == "decagon") {
      base.shape = BorromeanShape::sym_decagon;
      f.params = {{"one_x", 0.0, 2.0, 0.44}, {"one_y", 0.0, 1.0, 0.75}, {"two_x", 0.0, 2.0, 0.52},
                  {"two_y", 0.0, 1.0, 0.27}};
      f.default_vertices = 10;
      f.builder = [base](std::span<const double> x, int) {
        BorromeanParams p = base;
        p.one = {x[0], x[1]};
        p.two = {x[2], x[3]};
        return family_borromean(p);
      };
    } else {
      throw InvalidArgument("unknown family '" + name + "'");
    }
    f.expected_topology = detail::uniform_topology(3, 0);
  } else if (name == "chain-congruent") {
    const int m = o.size;
    const RingShape shape = o.shape;
    f.params = {{"spacing", 0.0, 2.0, 1.58}};
    if (shape == RingShape::square) f.default_vertices = 4;
    f.builder = [m, shape](std::span<const double> x, int n) { return family_chain_congruent(m, x[0], shape, n); };
    f.expected_topology = detail::chain_topology(m);
  } else if (name == "chain-layered") {
    const int N = o.size;
    // Start each layer centred on the outer edge of its inner neighbour,
    // which links them for any size.
    constexpr double aspect = 1.2;
    f.params = {{"center_aspect", 0.0, inf, aspect}};
    double area = 1.0;
    for (int k = 1; k <= N; ++k) {
      const double disp = 0.5 * std::sqrt(area * aspect);
      area *= 0.2;
      const std::string tag = "layer" + std::to_string(k) + "_";
      f.params.push_back({tag + "area", 0.0, inf, area});
      f.params.push_back({tag + "displacement", 0.0, inf, disp});
      f.params.push_back({tag + "aspect", 0.0, inf, aspect});
    }
    f.default_vertices = 4;
    f.builder = [](std::span<const double> x, int) { return family_chain_layered(ChainLayout::from_params(x)); };
    f.expected_topology = detail::chain_topology(2 * N + 1);
  } else if (name == "chainmail-european" || name == "chainmail-japanese") {
    ChainmailParams base;
    base.size = o.size;
    base.shape = o.shape;
    base.tilt = o.tilt;
    if (o.shape == RingShape::square) f.default_vertices = 4;
    if (name == "chainmail-european") {
      base.style = ChainmailStyle::european;
      f.params = {{"D4", 0.0, 2.0, 1.55}, {"theta4", 0.0, 0.5 * pi, 44.0 * pi / 180.0, true}};
      f.builder = [base](std::span<const double> x, int n) {
        ChainmailParams p = base;
        p.d4 = x[0];
        p.theta4 = x[1];
        return family_chainmail(p, n);
      };
      if (o.tilt == EuropeanTilt::checkerboard_diagonal)
        f.expected_topology = chainmail_expected_topology(ChainmailStyle::european, o.size);
    } else {
      base.style = ChainmailStyle::japanese;
      f.params = {{"DJ", 2.0, inf, 3.0}, {"LJ", 0.0, inf, 0.6}};
      f.builder = [base](std::span<const double> x, int n) {
        ChainmailParams p = base;
        p.dj = x[0];
        p.lj = x[1];
        return family_chainmail(p, n);
      };
      f.expected_topology = chainmail_expected_topology(ChainmailStyle::japanese, o.size);
    }
  } else if (name == "torus-knot") {
    const int p = o.p, q = o.q;
    f.params = {{"R", 0.0, inf, 1.0}, {"r", 0.0, inf, 0.5}};
    f.builder = [p, q](std::span<const double> x, int n) {
      return Link(make_torus_link(p, q, x[0], x[1], n));
    };
    f.default_vertices = 720;
    const int g = std::gcd(p, q);
    f.expected_topology = detail::uniform_topology(static_cast<std::size_t>(g), std::abs((p / g) * (q / g)));
  } else {
    throw InvalidArgument("unknown family '" + name + "'");
  }
  return f;
}

}  // namespace linkforge

#endif  // LINKFORGE_FAMILIES_HPP
