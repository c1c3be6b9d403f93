#include "hyperham/regularity.hpp"

#include "hyperham/errors.hpp"

namespace hyperham {

Quaternion QForm::operator()(const Vec& y) const {
  if (y.size() != dim()) throw DimensionMismatch("QForm: vector length != dim");
  return {dot(comp0, y), dot(comp[0], y), dot(comp[1], y), dot(comp[2], y)};
}

Quaternion regularity_defect(const HyperKahlerStructure& s, const QForm& theta, const Vec& y) {
  if (theta.dim() != s.dim())
    throw DimensionMismatch("regularity_defect: form dimension != 4n");
  Quaternion d = theta(y);
  for (std::size_t alpha = 1; alpha <= 3; ++alpha)
    d += theta(s.act(Quaternion::unit(alpha), y)) * Quaternion::unit(alpha);
  return d;
}

bool is_regular(const HyperKahlerStructure& s, const QForm& theta, double tol) {
  const std::size_t m = s.dim();
  Vec basis(m, 0.0);
  for (std::size_t b = 0; b < m; ++b) {
    basis[b] = 1.0;
    const Quaternion d = regularity_defect(s, theta, basis);
    basis[b] = 0.0;
    if (abs(d) > tol) return false;
  }
  return true;
}

Vec complete(const HyperKahlerStructure& s, const QForm& xi) {
  if (xi.dim() != s.dim())
    throw DimensionMismatch("complete: form dimension != 4n");
  for (double v : xi.comp0)
    if (v != 0.0) throw NotImaginary("complete: form has a nonzero real component");

  const std::size_t m = s.dim();
  Vec r(m, 0.0);
  Vec basis(m, 0.0);
  for (std::size_t b = 0; b < m; ++b) {
    basis[b] = 1.0;
    double v = 0.0;
    for (std::size_t alpha = 0; alpha < 3; ++alpha)
      v += dot(xi.comp[alpha], s.act(Quaternion::unit(alpha + 1), basis));
    r[b] = v;
    basis[b] = 0.0;
  }
  return r;
}

QuaternionicPolynomialFunction::QuaternionicPolynomialFunction(
    std::array<ScalarField, 4> components)
    : comp(std::move(components)) {
  for (const auto& f : comp)
    if (f.dim() != 4)
      throw DimensionMismatch("QuaternionicPolynomialFunction: components must live on R^4");
}

Quaternion QuaternionicPolynomialFunction::operator()(const Vec& p) const {
  return {comp[0](p), comp[1](p), comp[2](p), comp[3](p)};
}

Quaternion fueter_defect(const QuaternionicPolynomialFunction& phi, const Vec& p) {
  // partial[a] = quaternion-valued d phi / dx^a
  std::array<Vec, 4> grads;
  for (std::size_t c = 0; c < 4; ++c) grads[c] = phi.comp[c].gradient(p);
  Quaternion d;
  for (std::size_t a = 0; a < 4; ++a) {
    const Quaternion partial{grads[0][a], grads[1][a], grads[2][a], grads[3][a]};
    d += partial * Quaternion::unit(a);
  }
  return d;
}

QForm differential_at(const QuaternionicPolynomialFunction& phi, const Vec& p) {
  QForm theta(4);
  theta.comp0 = phi.comp[0].gradient(p);
  for (std::size_t alpha = 0; alpha < 3; ++alpha)
    theta.comp[alpha] = phi.comp[alpha + 1].gradient(p);
  return theta;
}

}  // namespace hyperham
