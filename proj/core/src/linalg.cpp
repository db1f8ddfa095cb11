#include "qtda/matrix.hpp"

#include <lapacke.h>

#include <string>

#include "qtda/errors.hpp"

namespace qtda {

std::vector<double> symmetric_eigenvalues(const Matrix& m) {
  if (m.empty()) return {};
  if (m.rows != m.cols) throw numerical_error("eigenvalues: matrix not square");
  const lapack_int n = static_cast<lapack_int>(m.rows);
  std::vector<double> a = m.data;
  std::vector<double> w(m.rows);
  lapack_int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'U', n, a.data(), n, w.data());
  if (info != 0)
    throw numerical_error("dsyevd failed, info=" + std::to_string(info));
  return w;
}

std::size_t eigenvalues_below(const Matrix& m, double x) {
  if (m.empty()) return 0;
  if (m.rows != m.cols) throw numerical_error("inertia: matrix not square");
  const lapack_int n = static_cast<lapack_int>(m.rows);
  std::vector<double> a = m.data;
  for (std::size_t i = 0; i < m.rows; ++i) a[i * m.cols + i] -= x;
  std::vector<lapack_int> ipiv(m.rows);
  lapack_int info = LAPACKE_dsytrf(LAPACK_ROW_MAJOR, 'U', n, a.data(), n, ipiv.data());
  if (info < 0)
    throw numerical_error("dsytrf failed, info=" + std::to_string(info));

  // Walk the block-diagonal D of the Bunch-Kaufman factorization and count
  // negative eigenvalues. 2x2 blocks are flagged by ipiv[k] < 0.
  std::size_t below = 0;
  std::size_t k = 0;
  while (k < m.rows) {
    if (ipiv[k] > 0) {
      if (a[k * m.cols + k] < 0.0) ++below;
      ++k;
    } else {
      // 2x2 block [d1 e; e d2]: eigenvalue signs from trace/determinant.
      const double d1 = a[k * m.cols + k];
      const double d2 = a[(k + 1) * m.cols + (k + 1)];
      const double e = a[k * m.cols + (k + 1)];
      const double det = d1 * d2 - e * e;
      if (det < 0.0) {
        ++below;  // one negative, one positive
      } else if (d1 + d2 < 0.0) {
        below += 2;
      }
      k += 2;
    }
  }
  return below;
}

std::size_t near_zero_eigenvalue_count(const Matrix& m, double tol) {
  const std::size_t lo = eigenvalues_below(m, -tol);
  const std::size_t hi = eigenvalues_below(m, tol);
  return hi - lo;
}

}  // namespace qtda
