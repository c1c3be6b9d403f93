#pragma once

#include <cmath>

#include "hyperham/linalg.hpp"
#include "hyperham/quaternion.hpp"

namespace hyperham::testing {

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool close(const Vec& a, const Vec& b, double tol) {
  return a.size() == b.size() && max_abs_diff(a, b) <= tol;
}

inline bool close(const Quaternion& a, const Quaternion& b, double tol) {
  return abs(a - b) <= tol;
}

/// Basis vector e_b of R^m.
inline Vec basis(std::size_t m, std::size_t b) {
  Vec e(m, 0.0);
  e[b] = 1.0;
  return e;
}

/// R^4 <-> H identification used by the n=1 oracles.
inline Vec to_vec(const Quaternion& q) { return {q.t, q.x, q.y, q.z}; }
inline Quaternion to_quat(const Vec& v) { return {v[0], v[1], v[2], v[3]}; }

}  // namespace hyperham::testing
