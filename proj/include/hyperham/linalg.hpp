#pragma once

#include <cstddef>
#include <vector>

#include "hyperham/errors.hpp"

namespace hyperham {

using Vec = std::vector<double>;

/// Dense row-major matrix.  Everything in this project is tiny (at most
/// 8x8), so no effort is spent on anything beyond clarity.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(double s) const;

  Vec apply(const Vec& x) const;
  Vec column(std::size_t j) const;

 private:
  std::size_t rows_, cols_;
  std::vector<double> a_;
};

/// Gaussian elimination with partial pivoting.  Throws Error on a
/// (numerically) singular system.
Vec solve_dense(Matrix a, Vec b);

double det3(const Matrix& m);

/// max |(m^T m - I)_{ij}|
double orthogonality_defect(const Matrix& m);

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
double norm_inf(const Vec& a);
double max_abs_diff(const Vec& a, const Vec& b);
double max_abs_diff(const Matrix& a, const Matrix& b);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(double s, const Vec& a);
/// a + s * b
Vec vec_add_scaled(const Vec& a, double s, const Vec& b);

bool all_finite(const Vec& a);

}  // namespace hyperham
