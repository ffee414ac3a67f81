// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/operators.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace kreinlab {

std::complex<double> sqrt_cut(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() >= 0.0) {
    return {std::sqrt(z.real()), 0.0};
  }
  std::complex<double> w = std::sqrt(z);
  // Principal sqrt has Re >= 0; fold into the upper half-plane.
  if (w.imag() < 0.0) w = -w;
  return w;
}

namespace {

double symmetry_defect(const Eigen::MatrixXd& a) {
  const double scale = std::max(1.0, a.norm());
  return (a - a.transpose()).norm() / scale;
}

void fix_column_signs(Eigen::MatrixXd& q) {
  for (Eigen::Index c = 0; c < q.cols(); ++c) {
    const double thresh = 1e-12 * std::max(1.0, q.col(c).cwiseAbs().maxCoeff());
    for (Eigen::Index r = 0; r < q.rows(); ++r) {
      const double v = q(r, c);
      if (std::abs(v) > thresh) {
        if (v < 0.0) q.col(c) *= -1.0;
        break;
      }
    }
  }
}

}  // namespace

EigenDecomposition eigh(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) {
    throw InvalidArgumentError("eigh: matrix must be square");
  }
  if (symmetry_defect(a) > 1e-8) {
    throw InvalidArgumentError("eigh: matrix is not symmetric (defect > 1e-8)");
  }
  const Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericDomainError("eigh: eigensolver did not converge");
  }
  EigenDecomposition e;
  e.eigenvalues = solver.eigenvalues();
  e.eigenvectors = solver.eigenvectors();
  fix_column_signs(e.eigenvectors);
  return e;
}

FiberOperator::FiberOperator(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw InvalidArgumentError("FiberOperator: matrix must be square and nonempty");
  }
  const double scale = std::max(1.0, matrix_.norm());
  if ((matrix_ - matrix_.transpose()).norm() > 1e-12 * scale) {
    throw InvalidArgumentError("FiberOperator: symmetry defect exceeds 1e-12 relative");
  }
  eig_ = eigh(matrix_);
  min_eigenvalue_ = eig_.eigenvalues.minCoeff();
  if (min_eigenvalue_ < -1e-10) {
    throw InvalidArgumentError(
        "FiberOperator: operator must be nonnegative, min eigenvalue = " +
        std::to_string(min_eigenvalue_));
  }
}

FiberOperator FiberOperator::from_eigenvalues(const std::vector<double>& eigenvalues) {
  if (eigenvalues.empty()) {
    throw InvalidArgumentError("FiberOperator: eigenvalue list must be nonempty");
  }
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(
      eigenvalues.data(), static_cast<Eigen::Index>(eigenvalues.size()));
  return FiberOperator(Eigen::MatrixXd(d.asDiagonal()));
}

Eigen::MatrixXd laplacian_half_line(const Grid& grid, Boundary boundary) {
  const int n = grid.size();
  if (n < 2) {
    throw InvalidArgumentError("laplacian_half_line: grid must have >= 2 nodes");
  }
  const double inv_h2 = 1.0 / (grid.spacing * grid.spacing);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 2.0 * inv_h2;
    if (i > 0) a(i, i - 1) = -inv_h2;
    if (i + 1 < n) a(i, i + 1) = -inv_h2;
  }
  // Wall at t = 0 sits half a cell left of the first node: even mirror
  // ghost for Neumann, odd mirror ghost for Dirichlet.
  a(0, 0) = (boundary == Boundary::Neumann ? 1.0 : 3.0) * inv_h2;
  // Right truncation keeps the plain zero-ghost closure (2/h^2).
  return a;
}

Eigen::MatrixXd kron_sum(const Eigen::MatrixXd& t1, const Eigen::MatrixXd& t2) {
  const Eigen::Index n = t1.rows();
  const Eigen::Index m = t2.rows();
  if (t1.cols() != n || t2.cols() != m) {
    throw InvalidArgumentError("kron_sum: operands must be square");
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n * m, n * m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (t1(i, j) != 0.0) {
        for (Eigen::Index k = 0; k < m; ++k) out(i * m + k, j * m + k) += t1(i, j);
      }
    }
    out.block(i * m, i * m, m, m) += t2;
  }
  return out;
}

TensorSumOperator tensor_sum_operator(const Grid& grid, Boundary boundary,
                                      const FiberOperator& l) {
  TensorSumOperator op{kron_sum(laplacian_half_line(grid, boundary), l.matrix()),
                       boundary, l, grid};
  return op;
}

Eigen::MatrixXd apply_fn(const EigenDecomposition& e,
                         const std::function<double(double)>& f) {
  Eigen::VectorXd d(e.eigenvalues.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    const double v = f(e.eigenvalues[i]);
    if (!std::isfinite(v)) {
      throw NumericDomainError("apply_fn: f is non-finite at eigenvalue " +
                               std::to_string(e.eigenvalues[i]));
    }
    d[i] = v;
  }
  return e.eigenvectors * d.asDiagonal() * e.eigenvectors.transpose();
}

Eigen::MatrixXcd apply_fn_complex(
    const EigenDecomposition& e,
    const std::function<std::complex<double>(double)>& f) {
  Eigen::VectorXcd d(e.eigenvalues.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    const std::complex<double> v = f(e.eigenvalues[i]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericDomainError("apply_fn: f is non-finite at eigenvalue " +
                               std::to_string(e.eigenvalues[i]));
    }
    d[i] = v;
  }
  return e.eigenvectors * d.asDiagonal() *
         e.eigenvectors.transpose().cast<std::complex<double>>();
}

Eigen::MatrixXd spectral_projection(const EigenDecomposition& e, double alpha) {
  Eigen::VectorXd d(e.eigenvalues.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    d[i] = e.eigenvalues[i] < alpha ? 1.0 : 0.0;
  }
  return e.eigenvectors * d.asDiagonal() * e.eigenvectors.transpose();
}

namespace {

void require_off_spectrum(const EigenDecomposition& e, std::complex<double> z) {
  double dist = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < e.eigenvalues.size(); ++i) {
    dist = std::min(dist, std::abs(z - std::complex<double>(e.eigenvalues[i])));
  }
  if (dist <= 1e-12) {
    throw SingularResolventError("resolvent: z is within 1e-12 of the spectrum");
  }
}

}  // namespace

Eigen::MatrixXd resolvent(const EigenDecomposition& e, double z) {
  require_off_spectrum(e, z);
  Eigen::VectorXd d = (e.eigenvalues.array() - z).inverse();
  return e.eigenvectors * d.asDiagonal() * e.eigenvectors.transpose();
}

Eigen::MatrixXcd resolvent(const EigenDecomposition& e, std::complex<double> z) {
  require_off_spectrum(e, z);
  Eigen::VectorXcd d(e.eigenvalues.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    d[i] = 1.0 / (std::complex<double>(e.eigenvalues[i]) - z);
  }
  return e.eigenvectors * d.asDiagonal() *
         e.eigenvectors.transpose().cast<std::complex<double>>();
}

Eigen::MatrixXd resolvent(const Eigen::MatrixXd& a, double z) {
  return resolvent(eigh(a), z);
}

Eigen::MatrixXcd resolvent(const Eigen::MatrixXd& a, std::complex<double> z) {
  return resolvent(eigh(a), z);
}

double spectral_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() == m.cols() && symmetry_defect(m) <= 1e-12) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.transpose() * m,
                                                        Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

}  // namespace kreinlab
