#ifndef LINKFORGE_GEOMETRY_HPP
#define LINKFORGE_GEOMETRY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vec3.hpp"

namespace linkforge {

using detail::require;

// ---------------------------------------------------------------------------
// Curves and links
// ---------------------------------------------------------------------------

/// Closed polygonal curve. The edge from the last vertex back to the first is
/// implicit; the first vertex is never repeated.
class PolyCurve {
public:
  explicit PolyCurve(std::vector<Point3> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    require(n >= 3, "PolyCurve needs at least 3 vertices, got " + std::to_string(n));
    edges_.resize(n);
    cumulative_.resize(n + 1);
    cumulative_[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      require(is_finite(vertices_[i]), "PolyCurve vertex " + std::to_string(i) + " is not finite");
      edges_[i] = distance(vertices_[i], vertices_[(i + 1) % n]);
      require(edges_[i] > 0.0, "PolyCurve has coincident consecutive vertices at " + std::to_string(i));
      cumulative_[i + 1] = cumulative_[i] + edges_[i];
    }
  }

  std::size_t size() const { return vertices_.size(); }
  std::span<const Point3> vertices() const { return vertices_; }
  const Point3& operator[](std::size_t i) const { return vertices_[i]; }

  /// Length of the edge from vertex i to vertex i+1 (mod n).
  double edge_length(std::size_t i) const { return edges_[i]; }
  std::span<const double> edge_lengths() const { return edges_; }

  double length() const { return cumulative_.back(); }

  /// Arc length from vertex 0 forward to vertex i.
  double arc_position(std::size_t i) const { return cumulative_[i]; }

  /// Half the sum of the two edges meeting at vertex i.
  double vertex_weight(std::size_t i) const {
    const std::size_t n = size();
    return 0.5 * (edges_[i] + edges_[(i + n - 1) % n]);
  }

  friend bool operator==(const PolyCurve& a, const PolyCurve& b) { return a.vertices_ == b.vertices_; }

private:
  std::vector<Point3> vertices_;
  std::vector<double> edges_;
  std::vector<double> cumulative_;
};

struct Segment {
  Point3 a;
  Point3 b;

  double length() const { return distance(a, b); }
};

inline double point_segment_distance(const Point3& p, const Point3& q0, const Point3& q1) {
  const Point3 v = q1 - q0;
  const double t = std::clamp(dot(p - q0, v) / dot(v, v), 0.0, 1.0);
  return distance(p, q0 + t * v);
}

namespace detail {

// Nearly parallel segments: the clamped closed form loses accuracy, so take the
// best of the four endpoint distances and, when it lies inside both segments,
// the unclamped critical point.
inline double near_parallel_distance(const Point3& p0, const Point3& p1, const Point3& q0, const Point3& q1,
                                     double D, double b, double d, double e, double a, double c) {
  double best = std::min({point_segment_distance(p0, q0, q1), point_segment_distance(p1, q0, q1),
                          point_segment_distance(q0, p0, p1), point_segment_distance(q1, p0, p1)});
  if (D > 0.0) {
    const double s = (b * e - c * d) / D, t = (a * e - b * d) / D;
    if (s > 0.0 && s < 1.0 && t > 0.0 && t < 1.0) best = std::min(best, distance(p0 + s * (p1 - p0), q0 + t * (q1 - q0)));
  }
  return best;
}

}  // namespace detail

/// Minimum Euclidean distance between two closed segments (clamped
/// closest-point method). Assumes both segments are non-degenerate.
inline double segment_distance_unchecked(const Point3& p0, const Point3& p1, const Point3& q0,
                                         const Point3& q1) {
  const Point3 u = p1 - p0;
  const Point3 v = q1 - q0;
  const Point3 w = p0 - q0;
  const double a = dot(u, u);
  const double b = dot(u, v);
  const double c = dot(v, v);
  const double d = dot(u, w);
  const double e = dot(v, w);
  const double D = a * c - b * b;
  double sN, sD = D;
  double tN, tD = D;

  if (D <= 1e-8 * a * c) return detail::near_parallel_distance(p0, p1, q0, q1, D, b, d, e, a, c);
  {
    sN = b * e - c * d;
    tN = a * e - b * d;
    if (sN < 0.0) {
      sN = 0.0;
      tN = e;
      tD = c;
    } else if (sN > sD) {
      sN = sD;
      tN = e + b;
      tD = c;
    }
  }

  if (tN < 0.0) {
    tN = 0.0;
    if (-d < 0.0) {
      sN = 0.0;
    } else if (-d > a) {
      sN = sD;
    } else {
      sN = -d;
      sD = a;
    }
  } else if (tN > tD) {
    tN = tD;
    if (-d + b < 0.0) {
      sN = 0.0;
    } else if (-d + b > a) {
      sN = sD;
    } else {
      sN = -d + b;
      sD = a;
    }
  }

  const double sc = sN == 0.0 ? 0.0 : sN / sD;
  const double tc = tN == 0.0 ? 0.0 : tN / tD;
  return norm(w + sc * u - tc * v);
}

inline double segment_min_distance(const Segment& s1, const Segment& s2) {
  require(norm2(s1.b - s1.a) > 0.0, "segment_min_distance: first segment is degenerate");
  require(norm2(s2.b - s2.a) > 0.0, "segment_min_distance: second segment is degenerate");
  return segment_distance_unchecked(s1.a, s1.b, s2.a, s2.b);
}

struct BoundingBox {
  Point3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  Point3 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity()};

  void extend(const Point3& p) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  void extend(const BoundingBox& b) {
    extend(b.lo);
    extend(b.hi);
  }
  double diagonal() const { return distance(lo, hi); }

  /// True when the boxes, each grown by `pad`, overlap.
  bool overlaps(const BoundingBox& o, double pad = 0.0) const {
    return lo.x - pad <= o.hi.x && o.lo.x - pad <= hi.x && lo.y - pad <= o.hi.y && o.lo.y - pad <= hi.y &&
           lo.z - pad <= o.hi.z && o.lo.z - pad <= hi.z;
  }
};

inline BoundingBox bounding_box(const PolyCurve& c) {
  BoundingBox b;
  for (const auto& p : c.vertices()) b.extend(p);
  return b;
}

/// Smallest distance between an edge of `c1` and an edge of `c2`, or
/// `cutoff` if every pair is at least `cutoff` apart.
inline double curve_min_distance(const PolyCurve& c1, const PolyCurve& c2,
                                 double cutoff = std::numeric_limits<double>::infinity()) {
  const std::size_t n1 = c1.size(), n2 = c2.size();
  std::vector<BoundingBox> boxes2(n2);
  for (std::size_t j = 0; j < n2; ++j) {
    boxes2[j].extend(c2[j]);
    boxes2[j].extend(c2[(j + 1) % n2]);
  }
  double best = cutoff;
  for (std::size_t i = 0; i < n1; ++i) {
    BoundingBox bi;
    bi.extend(c1[i]);
    bi.extend(c1[(i + 1) % n1]);
    for (std::size_t j = 0; j < n2; ++j) {
      if (std::isfinite(best) && !bi.overlaps(boxes2[j], best)) continue;
      best = std::min(best, segment_distance_unchecked(c1[i], c1[(i + 1) % n1], c2[j], c2[(j + 1) % n2]));
    }
  }
  return best;
}

/// Relative tolerance (times link diameter) below which two components are
/// considered to touch.
inline constexpr double kDisjointTolerance = 1e-9;

/// Ordered collection of closed curves.
class Link {
public:
  explicit Link(std::vector<PolyCurve> components, std::vector<std::string> labels = {})
      : components_(std::move(components)), labels_(std::move(labels)) {
    require(!components_.empty(), "Link needs at least one component");
    require(labels_.empty() || labels_.size() == components_.size(),
            "Link labels must be empty or one per component");
    std::vector<BoundingBox> boxes;
    boxes.reserve(components_.size());
    for (const auto& c : components_) {
      boxes.push_back(bounding_box(c));
      box_.extend(boxes.back());
    }
    const double tol = kDisjointTolerance * diameter();
    for (std::size_t i = 0; i < components_.size(); ++i)
      for (std::size_t j = i + 1; j < components_.size(); ++j) {
        if (!boxes[i].overlaps(boxes[j], tol)) continue;
        if (curve_min_distance(components_[i], components_[j], tol) < tol)
          throw DivergenceError("Link components " + std::to_string(i) + " and " + std::to_string(j) +
                                " touch");
      }
  }

  std::size_t size() const { return components_.size(); }
  const PolyCurve& operator[](std::size_t i) const { return components_[i]; }
  std::span<const PolyCurve> components() const { return components_; }
  std::span<const std::string> labels() const { return labels_; }

  BoundingBox bounds() const { return box_; }

  /// Diagonal of the axis-aligned bounding box; the length scale for all
  /// relative tolerances.
  double diameter() const { return box_.diagonal(); }

  std::size_t total_vertices() const {
    std::size_t n = 0;
    for (const auto& c : components_) n += c.size();
    return n;
  }

private:
  std::vector<PolyCurve> components_;
  std::vector<std::string> labels_;
  BoundingBox box_;
};

// ---------------------------------------------------------------------------
// Placement
// ---------------------------------------------------------------------------

/// Origin plus an orthonormal in-plane basis (u, v); the plane normal is u x v.
struct Frame {
  Point3 origin{};
  Point3 u = kUnitX;
  Point3 v = kUnitY;

  Point3 normal() const { return cross(u, v); }
  Point3 at(double a, double b) const { return origin + a * u + b * v; }

  static Frame make(const Point3& origin, const Point3& u, const Point3& v) {
    require(std::abs(norm(u) - 1.0) < 1e-9 && std::abs(norm(v) - 1.0) < 1e-9 && std::abs(dot(u, v)) < 1e-9,
            "Frame axes must be orthonormal");
    return {origin, u, v};
  }

  /// Frame with the given unit normal. The in-plane axis u is the projection
  /// of x (or of y when the normal is nearly parallel to x).
  static Frame from_normal(const Point3& origin, const Point3& normal) {
    require(is_finite(normal) && std::abs(norm(normal) - 1.0) < 1e-9, "normal must be a unit vector");
    const Point3 ref = std::abs(normal.x) > 0.9 ? kUnitY : kUnitX;
    const Point3 u = normalized(ref - dot(ref, normal) * normal);
    return {origin, u, cross(normal, u)};
  }
};

// ---------------------------------------------------------------------------
// Shape generators
// ---------------------------------------------------------------------------

inline void require_vertices(int n, int minimum = 3) {
  require(n >= minimum, "vertex count must be at least " + std::to_string(minimum) + ", got " + std::to_string(n));
}

/// Regular n-gon inscribed in a circle; vertex k sits at angle phase + 2 pi k / n.
inline PolyCurve make_circle(double radius, const Frame& frame, int n, double phase = 0.0) {
  require(radius > 0.0 && std::isfinite(radius), "circle radius must be positive");
  require_vertices(n);
  std::vector<Point3> pts(n);
  for (int k = 0; k < n; ++k) {
    const double t = phase + 2.0 * std::numbers::pi * k / n;
    pts[k] = frame.at(radius * std::cos(t), radius * std::sin(t));
  }
  return PolyCurve(std::move(pts));
}

inline PolyCurve make_circle(double radius, const Point3& center, const Point3& normal, int n, double phase = 0.0) {
  return make_circle(radius, Frame::from_normal(center, normal), n, phase);
}

/// Ellipse with semi-axis `a_semi` along u and `b_semi` along v, sampled
/// uniformly in the harmonic parameter.
inline PolyCurve make_ellipse(double a_semi, double b_semi, const Frame& frame, int n) {
  require(a_semi > 0.0 && b_semi > 0.0, "ellipse semi-axes must be positive");
  require_vertices(n);
  std::vector<Point3> pts(n);
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    pts[k] = frame.at(a_semi * std::cos(t), b_semi * std::sin(t));
  }
  return PolyCurve(std::move(pts));
}

/// Point at arc length `s` along a stadium of cap radius `radius` and straight
/// half-length `half_straight` (along u), starting at the rightmost point and
/// running counter-clockwise.
inline std::pair<double, double> stadium_point(double s, double radius, double half_straight) {
  const double pi = std::numbers::pi;
  const double quarter = 0.5 * pi * radius;
  const double straight = 2.0 * half_straight;
  if (s < quarter) {
    const double t = s / radius;
    return {half_straight + radius * std::cos(t), radius * std::sin(t)};
  }
  s -= quarter;
  if (s < straight) return {half_straight - s, radius};
  s -= straight;
  if (s < pi * radius) {
    const double t = 0.5 * pi + s / radius;
    return {-half_straight + radius * std::cos(t), radius * std::sin(t)};
  }
  s -= pi * radius;
  if (s < straight) return {-half_straight + s, -radius};
  s -= straight;
  const double t = 1.5 * pi + s / radius;
  return {half_straight + radius * std::cos(t), radius * std::sin(t)};
}

/// Stadium (two semicircular caps joined by straight sides) of total height
/// `height` and width aspect * height, long axis along u, vertices at uniform
/// arc spacing.
inline PolyCurve make_stadium(double aspect, double height, const Frame& frame, int n) {
  require(aspect >= 1.0 && std::isfinite(aspect), "stadium aspect must be >= 1");
  require(height > 0.0, "stadium height must be positive");
  require_vertices(n);
  const double radius = 0.5 * height;
  const double half_straight = 0.5 * (aspect - 1.0) * height;
  const double perimeter = 2.0 * std::numbers::pi * radius + 4.0 * half_straight;
  std::vector<Point3> pts(n);
  for (int k = 0; k < n; ++k) {
    const auto [a, b] = stadium_point(perimeter * k / n, radius, half_straight);
    pts[k] = frame.at(a, b);
  }
  return PolyCurve(std::move(pts));
}

inline double stadium_perimeter(double aspect, double height) {
  return std::numbers::pi * height + 2.0 * (aspect - 1.0) * height;
}

/// Axis-aligned rectangle (width along u). With n > 4 the edges are
/// subdivided in proportion to their length; the corners are always kept.
inline PolyCurve make_rectangle(double width, double height, const Frame& frame, int n = 4) {
  require(width > 0.0 && height > 0.0, "rectangle sides must be positive");
  require_vertices(n, 4);
  const double hw = 0.5 * width, hh = 0.5 * height;
  const std::array<std::pair<double, double>, 4> corners{{{-hw, -hh}, {hw, -hh}, {hw, hh}, {-hw, hh}}};
  const std::array<double, 4> lens{width, height, width, height};
  const double perimeter = 2.0 * (width + height);

  // Largest-remainder split of n vertices over the four edges, one at least each.
  std::array<int, 4> counts{1, 1, 1, 1};
  int spare = n - 4;
  std::array<double, 4> remainder{};
  for (int e = 0; e < 4; ++e) {
    const double share = spare * lens[e] / perimeter;
    counts[e] += static_cast<int>(std::floor(share));
    remainder[e] = share - std::floor(share);
  }
  int assigned = counts[0] + counts[1] + counts[2] + counts[3];
  while (assigned < n) {
    const auto it = std::max_element(remainder.begin(), remainder.end());
    ++counts[it - remainder.begin()];
    *it = -1.0;
    ++assigned;
  }

  std::vector<Point3> pts;
  pts.reserve(n);
  for (int e = 0; e < 4; ++e) {
    const auto [x0, y0] = corners[e];
    const auto [x1, y1] = corners[(e + 1) % 4];
    for (int k = 0; k < counts[e]; ++k) {
      const double t = static_cast<double>(k) / counts[e];
      pts.push_back(frame.at(x0 + t * (x1 - x0), y0 + t * (y1 - y0)));
    }
  }
  return PolyCurve(std::move(pts));
}

/// Regular polygon of circumradius `scale`, vertex k at angle
/// rotation + 2 pi k / sides, then stretched by `aspect` along u.
inline PolyCurve make_stretched_ngon(int sides, double aspect, double rotation, double scale, const Frame& frame) {
  require(sides >= 3, "polygon needs at least 3 sides");
  require(aspect > 0.0 && scale > 0.0, "polygon aspect and scale must be positive");
  std::vector<Point3> pts(sides);
  for (int k = 0; k < sides; ++k) {
    const double t = rotation + 2.0 * std::numbers::pi * k / sides;
    pts[k] = frame.at(aspect * scale * std::cos(t), scale * std::sin(t));
  }
  return PolyCurve(std::move(pts));
}

inline double default_ngon_rotation(int sides) { return std::numbers::pi / sides; }

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

namespace detail {

inline double orient2d(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline bool segments_cross_2d(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const double o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
  const double o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);
  return ((o1 > 0) != (o2 > 0) || o1 == 0 || o2 == 0) && ((o3 > 0) != (o4 > 0) || o3 == 0 || o4 == 0);
}

}  // namespace detail

/// True when the closed planar polygon has no self-intersections.
inline bool is_simple_polygon(std::span<const Point2> poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (detail::segments_cross_2d(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n])) return false;
    }
  return true;
}

/// Decagon with the vertices of a clock face minus 3 and 9 o'clock: 12 o'clock
/// at (0, 1), `one` and `two` o'clock given, the rest mirrored across both
/// in-plane axes. In-plane x runs along u and y along v.
inline PolyCurve make_symmetric_decagon(Point2 one, Point2 two, const Frame& frame) {
  require(one.x > 0.0 && one.y > 0.0 && two.x > 0.0 && two.y > 0.0,
          "decagon control points must lie in the open first quadrant");
  const std::array<Point2, 10> poly{{{0.0, 1.0},
                                     one,
                                     two,
                                     {two.x, -two.y},
                                     {one.x, -one.y},
                                     {0.0, -1.0},
                                     {-one.x, -one.y},
                                     {-two.x, -two.y},
                                     {-two.x, two.y},
                                     {-one.x, one.y}}};
  require(is_simple_polygon(poly), "decagon control points give a self-intersecting polygon");
  std::vector<Point3> pts;
  pts.reserve(10);
  for (const auto& p : poly) pts.push_back(frame.at(p.x, p.y));
  return PolyCurve(std::move(pts));
}

/// Components of the torus link T(p, q) on a torus of major radius R and
/// minor radius r: gcd(p, q) parallel copies of T(p/g, q/g).
inline std::vector<PolyCurve> make_torus_link(int p, int q, double R, double r, int n) {
  require(p > 0 && q >= 0, "torus winding numbers must satisfy p > 0, q >= 0");
  require(r > 0.0 && r < R, "torus radii must satisfy 0 < r_minor < R_major");
  require_vertices(n);
  const int g = std::gcd(p, q);
  const int pp = p / g, qq = q / g;
  std::vector<PolyCurve> out;
  out.reserve(g);
  for (int c = 0; c < g; ++c) {
    const double shift = 2.0 * std::numbers::pi * c / (g * pp);
    std::vector<Point3> pts(n);
    for (int k = 0; k < n; ++k) {
      const double t = 2.0 * std::numbers::pi * k / n;
      const double rho = R + r * std::cos(qq * t + shift);
      pts[k] = {rho * std::cos(pp * t), rho * std::sin(pp * t), r * std::sin(qq * t + shift)};
    }
    out.emplace_back(std::move(pts));
  }
  return out;
}

/// Torus knot ((R + r cos qt) cos pt, (R + r cos qt) sin pt, r sin qt).
inline PolyCurve make_torus_knot(int p, int q, double R, double r, int n) {
  require(std::gcd(p, q) == 1, "torus knot needs gcd(p, q) = 1; use make_torus_link otherwise");
  return std::move(make_torus_link(p, q, R, r, n).front());
}

// ---------------------------------------------------------------------------
// Transforms and distances
// ---------------------------------------------------------------------------

/// x -> scale * R x + translation.
struct RigidTransform {
  Mat3 rotation = Mat3::identity();
  Point3 translation{};
  double scale = 1.0;

  Point3 apply(const Point3& p) const { return scale * (rotation * p) + translation; }
};

inline PolyCurve transform(const PolyCurve& curve, const RigidTransform& t) {
  require(t.scale > 0.0 && std::isfinite(t.scale), "transform scale must be positive");
  std::vector<Point3> pts;
  pts.reserve(curve.size());
  for (const auto& p : curve.vertices()) pts.push_back(t.apply(p));
  return PolyCurve(std::move(pts));
}

inline Link transform(const Link& link, const RigidTransform& t) {
  std::vector<PolyCurve> comps;
  comps.reserve(link.size());
  for (const auto& c : link.components()) comps.push_back(transform(c, t));
  return Link(std::move(comps), {link.labels().begin(), link.labels().end()});
}

/// Shorter of the two arc lengths between vertices i and j.
inline double arc_distance(const PolyCurve& curve, std::size_t i, std::size_t j) {
  require(i < curve.size() && j < curve.size(), "arc_distance: vertex index out of range");
  require(i != j, "arc_distance: indices must differ");
  const double s = std::abs(curve.arc_position(j) - curve.arc_position(i));
  return std::min(s, curve.length() - s);
}

/// Midpoint subdivision: every edge split in two.
inline PolyCurve subdivide(const PolyCurve& curve) {
  std::vector<Point3> pts;
  pts.reserve(2 * curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    pts.push_back(curve[i]);
    pts.push_back(0.5 * (curve[i] + curve[(i + 1) % curve.size()]));
  }
  return PolyCurve(std::move(pts));
}

// ---------------------------------------------------------------------------
// Linking number
// ---------------------------------------------------------------------------

namespace detail {

inline double safe_asin(double x) { return std::asin(std::clamp(x, -1.0, 1.0)); }

inline Point3 unit_or_zero(const Point3& v) {
  const double n = norm(v);
  return n > 0.0 ? v / n : Point3{};
}

/// Signed solid-angle contribution of segment pair (p1 p2), (p3 p4) to the
/// Gauss linking integral, divided by 4 pi.
inline double gauss_segment_pair(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4) {
  const Point3 r13 = p3 - p1, r14 = p4 - p1, r23 = p3 - p2, r24 = p4 - p2;
  const Point3 n1 = unit_or_zero(cross(r13, r14));
  const Point3 n2 = unit_or_zero(cross(r14, r24));
  const Point3 n3 = unit_or_zero(cross(r24, r23));
  const Point3 n4 = unit_or_zero(cross(r23, r13));
  const double omega = safe_asin(dot(n1, n2)) + safe_asin(dot(n2, n3)) + safe_asin(dot(n3, n4)) +
                       safe_asin(dot(n4, n1));
  const double orient = dot(cross(p4 - p3, p2 - p1), r13);
  if (orient == 0.0) return 0.0;
  return (orient > 0.0 ? omega : -omega) / (4.0 * std::numbers::pi);
}

}  // namespace detail

/// Gauss double sum over edge pairs, before rounding.
inline double linking_number_raw(const PolyCurve& c1, const PolyCurve& c2) {
  const std::size_t n1 = c1.size(), n2 = c2.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n1; ++i) {
    const Point3& a = c1[i];
    const Point3& b = c1[(i + 1) % n1];
    for (std::size_t j = 0; j < n2; ++j) total += detail::gauss_segment_pair(a, b, c2[j], c2[(j + 1) % n2]);
  }
  return total;
}

/// Maximum distance of the raw Gauss sum from an integer before the result is
/// rejected as under-resolved.
inline constexpr double kLinkingSnapTolerance = 0.1;

/// Integer linking number. Curves whose bounding boxes are disjoint are
/// unlinked without evaluating the sum.
inline int linking_number(const PolyCurve& c1, const PolyCurve& c2) {
  if (!bounding_box(c1).overlaps(bounding_box(c2))) return 0;
  const double raw = linking_number_raw(c1, c2);
  const double rounded = std::round(raw);
  if (!std::isfinite(raw) || std::abs(raw - rounded) > kLinkingSnapTolerance)
    throw ResolutionError("linking number " + std::to_string(raw) + " is not within " +
                          std::to_string(kLinkingSnapTolerance) + " of an integer");
  return static_cast<int>(rounded);
}

/// Symmetric matrix of pairwise linking numbers (zero diagonal).
inline std::vector<std::vector<int>> linking_matrix(const Link& link) {
  const std::size_t m = link.size();
  std::vector<std::vector<int>> lk(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) lk[i][j] = lk[j][i] = linking_number(link[i], link[j]);
  return lk;
}

}  // namespace linkforge

#endif  // LINKFORGE_GEOMETRY_HPP
