#pragma once

// Thin LAPACK wrappers: lowest k eigenpairs of dense symmetric / Hermitian
// matrices via the MRRR drivers (dsyevr / zheevr) with an index range.

#include <Eigen/Dense>

#include "rabipat/hilbert.hpp"

namespace rabipat::detail {

struct RealEigenpairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

struct ComplexEigenpairs {
  Eigen::VectorXd values;
  CMatrix vectors;
};

// Only the lower triangle of a is referenced; a is overwritten.
RealEigenpairs lowest_symmetric(Eigen::MatrixXd a, int k);
ComplexEigenpairs lowest_hermitian(CMatrix a, int k);

}  // namespace rabipat::detail
