#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <iosfwd>

#include "hyperham/linalg.hpp"

namespace hyperham {

/// A quaternion t + x*i1 + y*i2 + z*i3 with double components.
///
/// The imaginary units satisfy i1^2 = i2^2 = i3^2 = -1, i1 i2 = i3,
/// i2 i3 = i1, i3 i1 = i2, and distinct units anticommute.
struct Quaternion {
  double t = 0.0;  ///< scalar part
  double x = 0.0;  ///< component along i1
  double y = 0.0;  ///< component along i2
  double z = 0.0;  ///< component along i3

  constexpr Quaternion() = default;
  constexpr Quaternion(double t_, double x_, double y_, double z_)
      : t(t_), x(x_), y(y_), z(z_) {}
  constexpr Quaternion(double real) : t(real) {}  // NOLINT: implicit on purpose

  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i1() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion i2() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion i3() { return {0.0, 0.0, 0.0, 1.0}; }
  /// unit(0) = 1, unit(alpha) = i_alpha for alpha in 1..3.
  static Quaternion unit(std::size_t a);

  /// component(0) = t, component(alpha) = coefficient of i_alpha.
  double component(std::size_t a) const;
  double& component(std::size_t a);

  constexpr double norm_sq() const { return t * t + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }

  constexpr Quaternion& operator+=(const Quaternion& r) {
    t += r.t; x += r.x; y += r.y; z += r.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& r) {
    t -= r.t; x -= r.x; y -= r.y; z -= r.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    t *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.t, -a.x, -a.y, -a.z}; }
  friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
  friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

  /// Hamilton product.
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z,
            a.t * b.x + a.x * b.t + a.y * b.z - a.z * b.y,
            a.t * b.y - a.x * b.z + a.y * b.t + a.z * b.x,
            a.t * b.z + a.x * b.y - a.y * b.x + a.z * b.t};
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion conj(const Quaternion& q) { return {q.t, -q.x, -q.y, -q.z}; }
inline double abs(const Quaternion& q) { return q.norm(); }

bool approx_equal(const Quaternion& a, const Quaternion& b, double tol);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// An ordered triple (j1, j2, j3) of imaginary units with j1^2 = j2^2 = -1
/// and j3 = j1 j2, together with the rotation relating it to the standard
/// triple: j_a = sum_b rotation(a, b) * i_{b+1}.
struct UnitTriple {
  std::array<Quaternion, 3> units;
  Matrix rotation;  // 3x3, orthogonal, det +1
};

/// Builds the triple induced by a 3x3 rotation matrix.
///
/// Throws NonOrthogonal unless c^T c = I within 1e-12, and
/// OrientationReversing when det(c) = -1 (such a triple would satisfy
/// j1 j2 = -j3 instead of j3).  The constructed units are re-validated by
/// direct multiplication; TripleInconsistent signals an arithmetic bug.
UnitTriple make_triple(const Matrix& c);

/// The standard triple (i1, i2, i3).
UnitTriple standard_triple();

}  // namespace hyperham
