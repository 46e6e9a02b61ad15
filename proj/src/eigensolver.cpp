#include "eigensolver.hpp"

#include <lapacke.h>

#include <algorithm>
#include <string>
#include <vector>

#include "rabipat/errors.hpp"

namespace rabipat::detail {

RealEigenpairs lowest_symmetric(Eigen::MatrixXd a, int k) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  k = std::clamp(k, 1, static_cast<int>(n));
  RealEigenpairs out;
  out.values.resize(n);
  out.vectors.resize(n, k);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, a.data(), n, 0.0, 0.0, 1, k,
                                         LAPACKE_dlamch('S'), &found, out.values.data(), out.vectors.data(), n,
                                         isuppz.data());
  if (info != 0 || found != k) {
    throw NumericalFailure("dsyevr failed (info=" + std::to_string(info) + ", found=" + std::to_string(found) +
                           ")");
  }
  out.values.conservativeResize(k);
  return out;
}

ComplexEigenpairs lowest_hermitian(CMatrix a, int k) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  k = std::clamp(k, 1, static_cast<int>(n));
  ComplexEigenpairs out;
  out.values.resize(n);
  out.vectors.resize(n, k);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_zheevr(
      LAPACK_COL_MAJOR, 'V', 'I', 'L', n, reinterpret_cast<lapack_complex_double*>(a.data()), n, 0.0, 0.0, 1, k,
      LAPACKE_dlamch('S'), &found, out.values.data(), reinterpret_cast<lapack_complex_double*>(out.vectors.data()),
      n, isuppz.data());
  if (info != 0 || found != k) {
    throw NumericalFailure("zheevr failed (info=" + std::to_string(info) + ", found=" + std::to_string(found) +
                           ")");
  }
  out.values.conservativeResize(k);
  return out;
}

}  // namespace rabipat::detail
