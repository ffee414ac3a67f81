// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "kreinlab/grid.hpp"

namespace kreinlab {

/// Square root with branch cut along [0, inf) and Im >= 0; boundary
/// values on the cut are the limits from the upper half-plane, so
/// sqrt_cut(x) = +sqrt(x) for x >= 0 and sqrt_cut(-a) = i sqrt(a) for
/// a > 0. Hence i*sqrt_cut(z - lambda) = -(lambda - z)^(1/2) for real
/// z < lambda.
std::complex<double> sqrt_cut(std::complex<double> z);

struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns
};

/// Dense symmetric eigendecomposition with a deterministic eigenvector
/// sign convention (first non-negligible component positive). The input
/// symmetry defect must not exceed 1e-8 relative.
EigenDecomposition eigh(const Eigen::MatrixXd& a);

/// The transverse operator L: a finite symmetric nonnegative matrix with
/// its eigendecomposition cached. min eigenvalue must be >= -1e-10.
class FiberOperator {
 public:
  explicit FiberOperator(Eigen::MatrixXd matrix);
  static FiberOperator from_eigenvalues(const std::vector<double>& eigenvalues);

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  const EigenDecomposition& eig() const { return eig_; }
  double min_eigenvalue() const { return min_eigenvalue_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  Eigen::MatrixXd matrix_;
  EigenDecomposition eig_;
  double min_eigenvalue_ = 0.0;
};

enum class Boundary { Neumann, Dirichlet };

/// Second-order 3-point half-line Laplacian on the cell-centered grid.
/// Left closure at the wall t = 0: Neumann uses the even mirror ghost
/// (diagonal 1/h^2), Dirichlet the odd mirror ghost (diagonal 3/h^2).
/// The right (truncation) node gets a zero-ghost Dirichlet closure for
/// both variants. Symmetric positive semidefinite.
Eigen::MatrixXd laplacian_half_line(const Grid& grid, Boundary boundary);

/// Kronecker sum kron(t1, I) + kron(I, t2); spectrum is the multiset of
/// pairwise eigenvalue sums.
Eigen::MatrixXd kron_sum(const Eigen::MatrixXd& t1, const Eigen::MatrixXd& t2);

/// H = (half-line Laplacian) (x) id + id (x) L on the grid (x) fiber
/// space, grid-major block layout.
struct TensorSumOperator {
  Eigen::MatrixXd matrix;
  Boundary half_line_part;
  FiberOperator fiber;
  Grid grid;
};

TensorSumOperator tensor_sum_operator(const Grid& grid, Boundary boundary,
                                      const FiberOperator& l);

/// Matrix functional calculus Q f(Lambda) Q^T. Throws NumericDomainError
/// naming the eigenvalue if f is non-finite there.
Eigen::MatrixXd apply_fn(const EigenDecomposition& e,
                         const std::function<double(double)>& f);
Eigen::MatrixXcd apply_fn_complex(
    const EigenDecomposition& e,
    const std::function<std::complex<double>(double)>& f);

/// Orthogonal projection onto eigenvectors with eigenvalue < alpha
/// (strict inequality).
Eigen::MatrixXd spectral_projection(const EigenDecomposition& e, double alpha);

/// (A - z)^(-1) through the eigendecomposition. Throws
/// SingularResolventError if z is within 1e-12 of an eigenvalue.
Eigen::MatrixXd resolvent(const EigenDecomposition& e, double z);
Eigen::MatrixXcd resolvent(const EigenDecomposition& e, std::complex<double> z);
Eigen::MatrixXd resolvent(const Eigen::MatrixXd& a, double z);
Eigen::MatrixXcd resolvent(const Eigen::MatrixXd& a, std::complex<double> z);

/// Operator 2-norm. Symmetric inputs go through an eigenvalues-only
/// solve, general ones through sqrt(lambda_max(M^T M)).
double spectral_norm(const Eigen::MatrixXd& m);

}  // namespace kreinlab
