#include "hyperham/quaternion.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "hyperham/errors.hpp"

namespace hyperham {

namespace {
constexpr double kTripleTol = 1e-12;
}

Quaternion Quaternion::unit(std::size_t a) {
  switch (a) {
    case 0: return one();
    case 1: return i1();
    case 2: return i2();
    case 3: return i3();
    default: throw Error("Quaternion::unit: index out of range");
  }
}

double Quaternion::component(std::size_t a) const {
  switch (a) {
    case 0: return t;
    case 1: return x;
    case 2: return y;
    case 3: return z;
    default: throw Error("Quaternion::component: index out of range");
  }
}

double& Quaternion::component(std::size_t a) {
  switch (a) {
    case 0: return t;
    case 1: return x;
    case 2: return y;
    case 3: return z;
    default: throw Error("Quaternion::component: index out of range");
  }
}

bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
  return abs(a - b) <= tol;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  os << q.t;
  const char* names[] = {"i1", "i2", "i3"};
  const double imag[] = {q.x, q.y, q.z};
  for (int k = 0; k < 3; ++k) {
    os << (imag[k] < 0 ? " - " : " + ") << std::abs(imag[k]) << "*" << names[k];
  }
  return os;
}

UnitTriple make_triple(const Matrix& c) {
  if (c.rows() != 3 || c.cols() != 3)
    throw NonOrthogonal("make_triple: expected a 3x3 matrix");

  const double defect = orthogonality_defect(c);
  if (defect > kTripleTol) {
    std::ostringstream msg;
    msg << "make_triple: c^T c deviates from I by " << defect;
    throw NonOrthogonal(msg.str());
  }
  if (det3(c) < 0.0)
    throw OrientationReversing("make_triple: det(c) = -1 would give j1 j2 = -j3");

  UnitTriple triple;
  triple.rotation = c;
  for (std::size_t a = 0; a < 3; ++a) {
    Quaternion j;
    for (std::size_t b = 0; b < 3; ++b) j += c(a, b) * Quaternion::unit(b + 1);
    triple.units[a] = j;
  }

  const auto& j = triple.units;
  if (!approx_equal(j[0] * j[0], Quaternion(-1.0), kTripleTol) ||
      !approx_equal(j[1] * j[1], Quaternion(-1.0), kTripleTol) ||
      !approx_equal(j[0] * j[1], j[2], kTripleTol))
    throw TripleInconsistent("make_triple: constructed units fail j1^2 = j2^2 = -1, j3 = j1 j2");
  return triple;
}

UnitTriple standard_triple() { return make_triple(Matrix::identity(3)); }

}  // namespace hyperham
