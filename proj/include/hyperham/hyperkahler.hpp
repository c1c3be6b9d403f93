#pragma once

#include <array>
#include <cstddef>

#include "hyperham/kform.hpp"
#include "hyperham/linalg.hpp"
#include "hyperham/quaternion.hpp"

namespace hyperham {

/// The flat hyper-Kahler model on R^{4n} identified with H^n.
///
/// Coordinates are grouped four at a time: slot 4k is the scalar part of
/// the k-th quaternionic coordinate and slots 4k+1..4k+3 its imaginary
/// parts.  The three complex structures J1, J2, J3 act as LEFT
/// multiplication by i1, i2, i3 on each coordinate, which yields
///   J1^2 = J2^2 = -I,  J1 J2 = -J2 J1,  J3 = J1 J2,
/// and the metric is the Euclidean one, so each J_alpha is orthogonal
/// and antisymmetric and the 2-forms
///   omega_alpha(X, Y) = g(J_alpha X, Y)
/// are symplectic.  Immutable after construction.
class HyperKahlerStructure {
 public:
  /// Throws InvalidDimension when n < 1.
  explicit HyperKahlerStructure(std::size_t n);

  std::size_t quaternion_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return 4 * n_; }

  /// J_alpha for alpha in 1..3.
  const Matrix& complex_structure(std::size_t alpha) const;

  /// Euclidean metric g(X, Y).
  double metric(const Vec& x, const Vec& y) const;
  Matrix metric_matrix() const { return Matrix::identity(dim()); }
  /// Solves g(X, .) = rhs for X.
  Vec solve_metric(const Vec& rhs) const;

  /// Left action of a quaternion: q Y = t Y + x^alpha J_alpha Y.  Makes
  /// R^{4n} a left H-module: act(p q, Y) = act(p, act(q, Y)).
  Vec act(const Quaternion& q, const Vec& y) const;

  /// J_u = u^1 J1 + u^2 J2 + u^3 J3 for a unit imaginary u; J_u^2 = -I.
  /// Throws NotUnitImaginary unless |u| = 1 and u has no scalar part
  /// (both within 1e-12).
  Matrix complex_structure_of_unit(const Quaternion& u) const;

  /// omega_alpha as a sparse 2-form, alpha in 1..3.
  KForm symplectic_form(std::size_t alpha) const;
  /// omega_u for an arbitrary unit imaginary u.
  KForm symplectic_form_of_unit(const Quaternion& u) const;

 private:
  KForm form_of(const Matrix& j) const;
  void check_dim(const Vec& v, const char* where) const;

  std::size_t n_;
  std::array<Matrix, 3> j_;
};

}  // namespace hyperham
