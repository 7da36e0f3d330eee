#ifndef LINKFORGE_VEC3_HPP
#define LINKFORGE_VEC3_HPP

#include <cmath>

namespace linkforge {

/// Point or displacement in 3-space.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Point3& operator+=(const Point3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Point3& operator-=(const Point3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Point3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Point3 operator+(Point3 a, const Point3& b) { return a += b; }
  friend constexpr Point3 operator-(Point3 a, const Point3& b) { return a -= b; }
  friend constexpr Point3 operator-(const Point3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Point3 operator*(Point3 a, double s) { return a *= s; }
  friend constexpr Point3 operator*(double s, Point3 a) { return a *= s; }
  friend constexpr Point3 operator/(Point3 a, double s) { return a *= (1.0 / s); }
  friend constexpr bool operator==(const Point3&, const Point3&) = default;
};

constexpr double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr double norm2(const Point3& a) { return dot(a, a); }

inline double norm(const Point3& a) { return std::sqrt(norm2(a)); }

inline double distance(const Point3& a, const Point3& b) { return norm(a - b); }

inline Point3 normalized(const Point3& a) { return a / norm(a); }

inline bool is_finite(const Point3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

inline constexpr Point3 kUnitX{1.0, 0.0, 0.0};
inline constexpr Point3 kUnitY{0.0, 1.0, 0.0};
inline constexpr Point3 kUnitZ{0.0, 0.0, 1.0};

/// Row-major 3x3 matrix, used for rotations.
struct Mat3 {
  double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

  static constexpr Mat3 identity() { return {}; }

  constexpr Point3 operator*(const Point3& p) const {
    return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z,
            m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
            m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z};
  }

  constexpr Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        r.m[i][j] = 0.0;
        for (int k = 0; k < 3; ++k) r.m[i][j] += m[i][k] * o.m[k][j];
      }
    return r;
  }
};

/// Rotation by `angle` radians about the unit vector `axis` (Rodrigues).
inline Mat3 rotation(const Point3& axis, double angle) {
  const Point3 k = normalized(axis);
  const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
  Mat3 r;
  r.m[0][0] = t * k.x * k.x + c;
  r.m[0][1] = t * k.x * k.y - s * k.z;
  r.m[0][2] = t * k.x * k.z + s * k.y;
  r.m[1][0] = t * k.x * k.y + s * k.z;
  r.m[1][1] = t * k.y * k.y + c;
  r.m[1][2] = t * k.y * k.z - s * k.x;
  r.m[2][0] = t * k.x * k.z - s * k.y;
  r.m[2][1] = t * k.y * k.z + s * k.x;
  r.m[2][2] = t * k.z * k.z + c;
  return r;
}

}  // namespace linkforge

#endif  // LINKFORGE_VEC3_HPP
