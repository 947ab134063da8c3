#pragma once

#include "gdpm/linops.hpp"

namespace gdpm {

struct EigDecomposition {
  Vector eigenvalues;   // ascending
  Matrix eigenvectors;  // column i pairs with eigenvalues[i], orthonormal
};

/// Classical cyclic Jacobi eigensolver for a dense symmetric matrix.
/// Deliberately independent of the power-method/gradient machinery so it can
/// serve as a verification oracle for it.
EigDecomposition jacobi_eigensolve(Matrix a);

/// Eigen-decomposition of op via jacobi_eigensolve on its dense form.
/// Requires dim <= 2000; throws NumericalError if the backing is not
/// symmetric to machine precision.
EigDecomposition dense_eig_oracle(const SymmetricOperator& op);

}  // namespace gdpm
