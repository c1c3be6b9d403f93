#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hyperham/linalg.hpp"

namespace hyperham {

/// An alternating k-form on R^m with constant coefficients, stored
/// sparsely as a map from strictly increasing multi-indices to nonzero
/// coefficients.  Basis convention: a 2-form is
///   sum_{a<b} w(e_a, e_b) dx^a ^ dx^b,
/// and similarly in higher degree.  Multi-indices are kept in
/// lexicographic order by the map; coefficients with magnitude below
/// 1e-14 are pruned after arithmetic, so equal forms compare equal.
class KForm {
 public:
  using Index = std::vector<std::size_t>;

  KForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  /// The constant 0-form with the given value.
  static KForm scalar(std::size_t dim, double value);
  /// The coordinate 1-form dx^a.
  static KForm dx(std::size_t dim, std::size_t a);
  /// dx^0 ^ dx^1 ^ ... ^ dx^{m-1}.
  static KForm volume(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient on a strictly increasing multi-index (0 if absent).
  double coefficient(const Index& idx) const;

  /// Adds coeff * dx^{idx}.  The index may arrive in any order; it is
  /// sorted with sign tracking, and terms with repeated entries vanish.
  void add_term(Index idx, double coeff);

  const std::map<Index, double>& terms() const noexcept { return coeffs_; }

  KForm& operator+=(const KForm& rhs);
  KForm& operator-=(const KForm& rhs);
  KForm& operator*=(double s);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(KForm a, double s) { return a *= s; }
  friend KForm operator*(double s, KForm a) { return a *= s; }

  friend bool operator==(const KForm&, const KForm&) = default;

 private:
  void check_compatible(const KForm& rhs) const;

  std::size_t dim_;
  std::size_t degree_;
  std::map<Index, double> coeffs_;
};

/// Exterior product.  a ^ b = (-1)^{deg a * deg b} b ^ a.
KForm wedge(const KForm& a, const KForm& b);

/// k-fold wedge of an even-degree form; k = 0 gives the scalar 1.
KForm wedge_power(const KForm& w, std::size_t k);

/// Contraction (X inserted into the first slot):
///   (X /| rho)(Y_1, ..., Y_{k-1}) = rho(X, Y_1, ..., Y_{k-1}).
/// On a monomial, X /| dx^I = sum_j (-1)^j X^{I_j} dx^{I \ I_j}.
KForm interior_product(const Vec& x, const KForm& rho);

/// The unique X with interior_product(X, volume) = rho, for rho of
/// degree dim - 1.  Componentwise X^a = (-1)^a * rho(omit a) / vol.
Vec solve_contraction(const KForm& volume, const KForm& rho);

/// Matrix W of a 2-form, W(i, j) = w(e_i, e_j).
Matrix two_form_matrix(const KForm& w);

std::string to_string(const KForm& w);

}  // namespace hyperham
