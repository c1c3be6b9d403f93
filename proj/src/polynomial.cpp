#include "hyperham/polynomial.hpp"

#include <algorithm>

#include "hyperham/errors.hpp"

namespace hyperham {

namespace {

double pow_u(double base, unsigned e) {
  double r = 1.0;
  for (unsigned k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace

void ScalarField::add_term(Exponents exponents, double coeff) {
  if (exponents.size() != dim_)
    throw DimensionMismatch("ScalarField::add_term: exponent vector length != dim");
  if (coeff == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), coeff);
  if (!inserted) it->second += coeff;
  if (it->second == 0.0) terms_.erase(it);
}

void ScalarField::check_point(const Vec& p) const {
  if (p.size() != dim_)
    throw DimensionMismatch("ScalarField: point length != dim");
}

double ScalarField::operator()(const Vec& p) const {
  check_point(p);
  double s = 0.0;
  for (const auto& [exps, c] : terms_) {
    double m = c;
    for (std::size_t a = 0; a < dim_; ++a)
      if (exps[a] != 0) m *= pow_u(p[a], exps[a]);
    s += m;
  }
  return s;
}

Vec ScalarField::gradient(const Vec& p) const {
  check_point(p);
  Vec g(dim_, 0.0);
  for (const auto& [exps, c] : terms_) {
    for (std::size_t a = 0; a < dim_; ++a) {
      const unsigned e = exps[a];
      if (e == 0) continue;
      double m = c * e * pow_u(p[a], e - 1);
      for (std::size_t b = 0; b < dim_; ++b)
        if (b != a && exps[b] != 0) m *= pow_u(p[b], exps[b]);
      g[a] += m;
    }
  }
  return g;
}

ScalarField& ScalarField::add_scaled(const ScalarField& other, double factor) {
  if (other.dim_ != dim_)
    throw DimensionMismatch("ScalarField::add_scaled: dimensions differ");
  for (const auto& [exps, c] : other.terms_) add_term(exps, factor * c);
  return *this;
}

unsigned ScalarField::max_exponent() const {
  unsigned m = 0;
  for (const auto& [exps, c] : terms_)
    for (unsigned e : exps) m = std::max(m, e);
  return m;
}

ScalarField operator*(ScalarField f, double s) {
  if (s == 0.0) {
    f.terms_.clear();
    return f;
  }
  for (auto& [exps, c] : f.terms_) c *= s;
  return f;
}

}  // namespace hyperham
