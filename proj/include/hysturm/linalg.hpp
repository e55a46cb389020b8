#pragma once

#include <Eigen/Dense>
#include <complex>

namespace hysturm::linalg {

struct SymEig {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // column i pairs with values[i], ascending
};

struct ComplexEig {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;  // empty when eigenvectors were not requested
};

/// Dense symmetric eigensolve (LAPACK dsyevd), eigenvalues ascending.
SymEig sym_eig(const Eigen::MatrixXd& a, bool vectors = true);

/// Generalized symmetric-definite eigensolve A x = mu B x (LAPACK dsygvd).
/// Eigenvectors satisfy x^T B x = 1.
SymEig sym_gen_eig(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                   bool vectors = true);

/// General complex eigensolve (LAPACK zgeev). Used for the complex-symmetric
/// scaled problems; no conjugation semantics are attached to the vectors.
ComplexEig complex_eig(const Eigen::MatrixXcd& a, bool vectors);

}  // namespace hysturm::linalg
