#include "hyperham/hyperkahler.hpp"

#include <cmath>

#include "hyperham/errors.hpp"

namespace hyperham {

namespace {

constexpr double kUnitTol = 1e-12;

// 4x4 blocks of left multiplication by i1, i2, i3 on a quaternionic
// coordinate (t, x1, x2, x3).  block[alpha][row][col].
constexpr double kLeftBlocks[3][4][4] = {
    // i1: 1 -> i1, i1 -> -1, i2 -> i3, i3 -> -i2
    {{0, -1, 0, 0},
     {1, 0, 0, 0},
     {0, 0, 0, -1},
     {0, 0, 1, 0}},
    // i2: 1 -> i2, i1 -> -i3, i2 -> -1, i3 -> i1
    {{0, 0, -1, 0},
     {0, 0, 0, 1},
     {1, 0, 0, 0},
     {0, -1, 0, 0}},
    // i3: 1 -> i3, i1 -> i2, i2 -> -i1, i3 -> -1
    {{0, 0, 0, -1},
     {0, 0, -1, 0},
     {0, 1, 0, 0},
     {1, 0, 0, 0}},
};

}  // namespace

HyperKahlerStructure::HyperKahlerStructure(std::size_t n) : n_(n) {
  if (n < 1) throw InvalidDimension("HyperKahlerStructure: n must be >= 1");
  const std::size_t m = 4 * n;
  for (std::size_t alpha = 0; alpha < 3; ++alpha) {
    Matrix j(m, m);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          j(4 * k + r, 4 * k + c) = kLeftBlocks[alpha][r][c];
    j_[alpha] = std::move(j);
  }
}

const Matrix& HyperKahlerStructure::complex_structure(std::size_t alpha) const {
  if (alpha < 1 || alpha > 3)
    throw Error("complex_structure: index must be 1, 2 or 3");
  return j_[alpha - 1];
}

void HyperKahlerStructure::check_dim(const Vec& v, const char* where) const {
  if (v.size() != dim())
    throw DimensionMismatch(std::string(where) + ": expected a vector of length 4n");
}

double HyperKahlerStructure::metric(const Vec& x, const Vec& y) const {
  check_dim(x, "metric");
  check_dim(y, "metric");
  return dot(x, y);
}

Vec HyperKahlerStructure::solve_metric(const Vec& rhs) const {
  check_dim(rhs, "solve_metric");
  return solve_dense(metric_matrix(), rhs);
}

Vec HyperKahlerStructure::act(const Quaternion& q, const Vec& y) const {
  check_dim(y, "act");
  Vec out = vec_scale(q.t, y);
  for (std::size_t alpha = 0; alpha < 3; ++alpha) {
    const double c = q.component(alpha + 1);
    if (c == 0.0) continue;
    out = vec_add_scaled(out, c, j_[alpha].apply(y));
  }
  return out;
}

Matrix HyperKahlerStructure::complex_structure_of_unit(const Quaternion& u) const {
  if (std::abs(u.t) > kUnitTol || std::abs(u.norm() - 1.0) > kUnitTol)
    throw NotUnitImaginary("complex_structure_of_unit: expected a unit imaginary quaternion");
  Matrix ju = j_[0] * u.x + j_[1] * u.y + j_[2] * u.z;
  return ju;
}

KForm HyperKahlerStructure::form_of(const Matrix& j) const {
  const std::size_t m = dim();
  KForm w(m, 2);
  // omega(e_a, e_b) = g(J e_a, e_b) = J(b, a)
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (j(b, a) != 0.0) w.add_term({a, b}, j(b, a));
  return w;
}

KForm HyperKahlerStructure::symplectic_form(std::size_t alpha) const {
  return form_of(complex_structure(alpha));
}

KForm HyperKahlerStructure::symplectic_form_of_unit(const Quaternion& u) const {
  return form_of(complex_structure_of_unit(u));
}

}  // namespace hyperham
