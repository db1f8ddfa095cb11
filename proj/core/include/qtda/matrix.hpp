#pragma once

#include <cstddef>
#include <vector>

namespace qtda {

// Dense row-major real matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool empty() const { return rows == 0 || cols == 0; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

// All eigenvalues of a symmetric matrix, ascending (LAPACK dsyevd).
std::vector<double> symmetric_eigenvalues(const Matrix& m);

// Number of eigenvalues of a symmetric matrix strictly below x, by the
// inertia of the LDL^T factorization of (m - x I) (Sylvester's law).
std::size_t eigenvalues_below(const Matrix& m, double x);

// Count of eigenvalues with |lambda| < tol. Uses two inertia computations,
// never forms the spectrum; intended for matrices too large to diagonalize.
std::size_t near_zero_eigenvalue_count(const Matrix& m, double tol);

}  // namespace qtda
