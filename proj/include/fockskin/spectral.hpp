// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

#include "fockskin/operator.hpp"

namespace fockskin {

/// Eigendecomposition H = V diag(E) V^{-1} with unit-norm columns of V and
/// eigenvalues sorted ascending by real part, then imaginary part.
struct EigenSystem {
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd v;
  Eigen::MatrixXcd v_inv;
  double residual = 0.0;        // max_m ||H v_m - E_m v_m||_2
  double inverse_defect = 0.0;  // max_ij |V V^{-1} - I|
};

/// Thrown when the eigenvector matrix is numerically singular
/// (sigma_min < 1e3 * eps * sigma_max), i.e. H is defective to working
/// precision and the spectral decomposition does not exist.
class DefectiveMatrixError : public std::runtime_error {
 public:
  DefectiveMatrixError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Direct dense non-Hermitian diagonalization (LAPACK zgeev).
EigenSystem diagonalize(const Operator& h);

/// Gauge path: R^{-1} H R must be Hermitian up to a uniform imaginary
/// diagonal shift c (H = R M R^{-1} + ic). The Hermitian part is solved with
/// zheevd and the eigenvectors are mapped back as R phi_m / ||R phi_m||,
/// with V^{-1} assembled exactly from the unitary phi and diagonal R. The
/// returned eigenvalues carry an exactly-zero imaginary part when the
/// transformed matrix is Hermitian (real diagonal). Throws
/// std::invalid_argument when the transform fails the Hermiticity check.
EigenSystem diagonalize_gauge(const Operator& h, const Operator& r);

/// Eigenvalues only (no vectors), direct and gauge paths.
Eigen::VectorXcd eigenvalues_only(const Operator& h);
Eigen::VectorXcd eigenvalues_gauge(const Operator& h, const Operator& r);

/// sigma_max / sigma_min of a square matrix; +infinity when sigma_min = 0.
double condition_number(const Eigen::MatrixXcd& v);

/// Same ratio for a rectangular D x k matrix with k <= D (condition number
/// of a column subset).
double submatrix_condition_number(const Eigen::MatrixXcd& v);

/// ||exp(-i H t)||_2 evaluated through the eigendecomposition, with the
/// dominant decay factored out so large t neither overflows nor underflows
/// the intermediate matrix. Requires t >= 0.
double propagator_norm(const EigenSystem& eig, double t);

double spectral_radius(const Eigen::MatrixXcd& m);

/// sigma_max via power iteration on M^H M (deterministic start vector).
double operator_two_norm(const Eigen::MatrixXcd& m);

/// Singular values, descending (LAPACK zgesdd).
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m);

/// Eigenvalues of a Hermitian matrix, ascending (LAPACK zheevd). The input
/// is symmetrized before the solve.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m);

}  // namespace fockskin
