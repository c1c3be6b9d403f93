#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hyperham/linalg.hpp"

namespace hyperham {

/// A real polynomial on R^m in canonical sparse form: a map from
/// exponent vectors (length m) to coefficients.  Terms with equal
/// exponents merge on insertion and exact-zero coefficients are dropped,
/// so equality of fields is equality of representations.
class ScalarField {
 public:
  using Exponents = std::vector<unsigned>;

  explicit ScalarField(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds coeff * prod_a x_a^{exponents[a]}.
  void add_term(Exponents exponents, double coeff);

  double operator()(const Vec& p) const;

  /// Analytic gradient.
  Vec gradient(const Vec& p) const;

  /// *this += factor * other
  ScalarField& add_scaled(const ScalarField& other, double factor);

  const std::map<Exponents, double>& terms() const noexcept { return terms_; }

  /// Largest exponent appearing on any single variable.
  unsigned max_exponent() const;

  friend ScalarField operator*(ScalarField f, double s);
  friend ScalarField operator*(double s, ScalarField f) { return std::move(f) * s; }
  friend ScalarField operator+(ScalarField a, const ScalarField& b) {
    return std::move(a.add_scaled(b, 1.0));
  }

  friend bool operator==(const ScalarField&, const ScalarField&) = default;

 private:
  void check_point(const Vec& p) const;

  std::size_t dim_;
  std::map<Exponents, double> terms_;
};

}  // namespace hyperham
