#include "hyperham/kform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperham/errors.hpp"

namespace hyperham {

namespace {

constexpr double kPruneTol = 1e-14;

// Sorts idx in place, returns the parity sign of the permutation, or 0
// when an entry repeats (the term vanishes).
int sort_with_sign(KForm::Index& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
    if (j > 0 && idx[j - 1] == idx[j]) return 0;
  }
  return sign;
}

// Parity of merging two disjoint increasing index sets a, b into one
// increasing sequence: (-1)^{#(i in a, j in b with j < i)}.
int merge_sign(const KForm::Index& a, const KForm::Index& b) {
  std::size_t inversions = 0;
  for (std::size_t jb : b) {
    // entries of a strictly greater than jb must jump over it
    inversions += a.end() - std::upper_bound(a.begin(), a.end(), jb);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

bool shares_index(const KForm::Index& a, const KForm::Index& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return true;
    if (*ia < *ib) ++ia; else ++ib;
  }
  return false;
}

KForm::Index merge_indices(const KForm::Index& a, const KForm::Index& b) {
  KForm::Index out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

KForm KForm::scalar(std::size_t dim, double value) {
  KForm f(dim, 0);
  f.add_term({}, value);
  return f;
}

KForm KForm::dx(std::size_t dim, std::size_t a) {
  if (a >= dim) throw Error("KForm::dx: coordinate index out of range");
  KForm f(dim, 1);
  f.add_term({a}, 1.0);
  return f;
}

KForm KForm::volume(std::size_t dim) {
  KForm f(dim, dim);
  Index full(dim);
  for (std::size_t i = 0; i < dim; ++i) full[i] = i;
  f.add_term(std::move(full), 1.0);
  return f;
}

double KForm::coefficient(const Index& idx) const {
  if (idx.size() != degree_) throw DegreeMismatch("KForm::coefficient: index length != degree");
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= dim_) throw Error("KForm::coefficient: index entry out of range");
    if (i > 0 && idx[i - 1] >= idx[i])
      throw Error("KForm::coefficient: index must be strictly increasing");
  }
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? 0.0 : it->second;
}

void KForm::add_term(Index idx, double coeff) {
  if (idx.size() != degree_) throw DegreeMismatch("KForm::add_term: index length != degree");
  for (std::size_t v : idx)
    if (v >= dim_) throw Error("KForm::add_term: index entry out of range");
  const int sign = sort_with_sign(idx);
  if (sign == 0 || coeff == 0.0) return;
  auto [it, inserted] = coeffs_.try_emplace(std::move(idx), sign * coeff);
  if (!inserted) it->second += sign * coeff;
  if (std::abs(it->second) < kPruneTol) coeffs_.erase(it);
}

void KForm::check_compatible(const KForm& rhs) const {
  if (dim_ != rhs.dim_) throw DimensionMismatch("KForm: ambient dimensions differ");
  if (degree_ != rhs.degree_) throw DegreeMismatch("KForm: degrees differ");
}

KForm& KForm::operator+=(const KForm& rhs) {
  check_compatible(rhs);
  for (const auto& [idx, c] : rhs.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(idx, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < kPruneTol) coeffs_.erase(it);
  }
  return *this;
}

KForm& KForm::operator-=(const KForm& rhs) {
  check_compatible(rhs);
  for (const auto& [idx, c] : rhs.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(idx, -c);
    if (!inserted) it->second -= c;
    if (std::abs(it->second) < kPruneTol) coeffs_.erase(it);
  }
  return *this;
}

KForm& KForm::operator*=(double s) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    it->second *= s;
    it = std::abs(it->second) < kPruneTol ? coeffs_.erase(it) : std::next(it);
  }
  return *this;
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge: ambient dimensions differ");
  KForm out(a.dim(), a.degree() + b.degree());
  // Degree above dim yields the empty (zero) form automatically: every
  // merged index would repeat an entry.
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      if (shares_index(ia, ib)) continue;
      const int sign = merge_sign(ia, ib);
      out.add_term(merge_indices(ia, ib), sign * ca * cb);
    }
  }
  return out;
}

KForm wedge_power(const KForm& w, std::size_t k) {
  if (w.degree() % 2 != 0)
    throw OddDegreeBase("wedge_power: base form must have even degree");
  KForm out = KForm::scalar(w.dim(), 1.0);
  for (std::size_t i = 0; i < k; ++i) out = wedge(out, w);
  return out;
}

KForm interior_product(const Vec& x, const KForm& rho) {
  if (x.size() != rho.dim())
    throw DimensionMismatch("interior_product: vector length != form dimension");
  if (rho.degree() == 0) throw DegreeZero("interior_product: cannot contract a 0-form");

  KForm out(rho.dim(), rho.degree() - 1);
  for (const auto& [idx, c] : rho.terms()) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const double xv = x[idx[j]];
      if (xv == 0.0) continue;
      KForm::Index rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (k != j) rest.push_back(idx[k]);
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      out.add_term(std::move(rest), sign * xv * c);
    }
  }
  return out;
}

Vec solve_contraction(const KForm& volume, const KForm& rho) {
  const std::size_t m = volume.dim();
  if (rho.dim() != m)
    throw DimensionMismatch("solve_contraction: ambient dimensions differ");
  if (volume.degree() != m)
    throw DegreeMismatch("solve_contraction: first argument must be a top-degree form");
  if (rho.degree() + 1 != m)
    throw DegreeMismatch("solve_contraction: rho must have degree dim - 1");

  KForm::Index full(m);
  for (std::size_t i = 0; i < m; ++i) full[i] = i;
  const double vol = volume.coefficient(full);
  if (vol == 0.0) throw Error("solve_contraction: degenerate volume form");

  Vec x(m, 0.0);
  KForm::Index omit(m - 1);
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (i != a) omit[w++] = i;
    const double sign = (a % 2 == 0) ? 1.0 : -1.0;
    x[a] = sign * rho.coefficient(omit) / vol;
  }
  return x;
}

Matrix two_form_matrix(const KForm& w) {
  if (w.degree() != 2) throw DegreeMismatch("two_form_matrix: expected a 2-form");
  Matrix m(w.dim(), w.dim());
  for (const auto& [idx, c] : w.terms()) {
    m(idx[0], idx[1]) = c;
    m(idx[1], idx[0]) = -c;
  }
  return m;
}

std::string to_string(const KForm& w) {
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : w.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    os << std::abs(c);
    if (!idx.empty()) {
      os << " ";
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) os << "^";
        os << "dx" << idx[i];
      }
    }
  }
  return os.str();
}

}  // namespace hyperham
