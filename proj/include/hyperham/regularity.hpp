#pragma once

#include <array>
#include <cstddef>

#include "hyperham/hyperkahler.hpp"
#include "hyperham/linalg.hpp"
#include "hyperham/polynomial.hpp"
#include "hyperham/quaternion.hpp"

namespace hyperham {

/// A quaternion-valued 1-form on R^{4n} with constant coefficients,
/// stored as four real 1-forms: theta = comp0 + comp[alpha] i_{alpha+1}.
struct QForm {
  explicit QForm(std::size_t dim)
      : comp0(dim, 0.0), comp{Vec(dim, 0.0), Vec(dim, 0.0), Vec(dim, 0.0)} {}

  Vec comp0;                 ///< component along 1
  std::array<Vec, 3> comp;   ///< components along i1, i2, i3

  std::size_t dim() const noexcept { return comp0.size(); }

  /// theta(Y), real-linear in Y.
  Quaternion operator()(const Vec& y) const;
};

/// The regularity defect
///   D(Y) = theta(Y) + sum_alpha theta(i_alpha Y) i_alpha,
/// where the units act through the structure's left module.  theta is a
/// regular 1-form exactly when D vanishes identically; D is
/// quaternionically anti-linear, D(q Y) = D(Y) conj(q), so vanishing on
/// the coordinate basis suffices.
Quaternion regularity_defect(const HyperKahlerStructure& s, const QForm& theta, const Vec& y);

/// True when |D(e_b)| <= tol for every basis vector e_b.
bool is_regular(const HyperKahlerStructure& s, const QForm& theta, double tol = 1e-12);

/// Completion of a purely imaginary 1-form xi (comp0 must be zero):
/// the unique real 1-form r with r + xi regular, given by
///   r(Y) = sum_alpha xi^alpha(i_alpha Y).
/// Returns the coefficients of r.  Throws NotImaginary when comp0 != 0.
Vec complete(const HyperKahlerStructure& s, const QForm& xi);

/// A polynomial function H -> H with components along 1, i1, i2, i3.
/// Each component is a polynomial on R^4.
struct QuaternionicPolynomialFunction {
  QuaternionicPolynomialFunction()
      : comp{ScalarField(4), ScalarField(4), ScalarField(4), ScalarField(4)} {}
  explicit QuaternionicPolynomialFunction(std::array<ScalarField, 4> components);

  std::array<ScalarField, 4> comp;

  Quaternion operator()(const Vec& p) const;
};

/// The Cauchy-Fueter operator for right regularity,
///   d phi/dt + sum_alpha (d phi/dx^alpha) i_alpha
/// evaluated at p with analytic polynomial partials (units multiply on
/// the right).  phi is right regular when this vanishes identically.
Quaternion fueter_defect(const QuaternionicPolynomialFunction& phi, const Vec& p);

/// Differential of phi at p as a constant-coefficient QForm.  phi is
/// right regular at p exactly when this form is regular.
QForm differential_at(const QuaternionicPolynomialFunction& phi, const Vec& p);

}  // namespace hyperham
