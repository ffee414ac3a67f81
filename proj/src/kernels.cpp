// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/kernels.hpp"

#include <cmath>
#include <string>

namespace kreinlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_off_cut(const FiberOperator& l, std::complex<double> z,
                     const char* who) {
  if (z.imag() == 0.0 && z.real() >= l.min_eigenvalue()) {
    throw InvalidArgumentError(std::string(who) +
                               ": z must lie off [min sigma(L), infinity)");
  }
}

// diag values f(lambda_k) sandwiched into Q . Q^T.
Eigen::MatrixXcd sandwich(const FiberOperator& l, const Eigen::VectorXcd& d) {
  const Eigen::MatrixXcd q = l.eig().eigenvectors.cast<std::complex<double>>();
  return q * d.asDiagonal() * q.transpose();
}

}  // namespace

ThetaAlpha theta_to_alpha(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw InvalidArgumentError("theta must lie in (0,1)");
  }
  return ThetaAlpha{theta, 1.0 / theta - 1.0};
}

ThetaAlpha alpha_to_theta(double alpha) {
  if (!(alpha > 0.0)) {
    throw InvalidArgumentError("alpha must be > 0");
  }
  return ThetaAlpha{1.0 / (alpha + 1.0), alpha};
}

double resolvent_eigenvalue_map(double lambda) {
  if (!(lambda >= 0.0)) {
    throw InvalidArgumentError("resolvent_eigenvalue_map: lambda must be >= 0");
  }
  return 1.0 / (2.0 * (lambda + 1.0));
}

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + (x2 * x2) / 120.0;
  }
  return std::sin(x) / x;
}

SpectralKernel resolvent_diff_kernel(const FiberOperator& l,
                                     std::complex<double> z) {
  require_off_cut(l, z, "resolvent_diff_kernel");
  SpectralKernel k{l, z, 0.0, z.imag() == 0.0, nullptr};
  const Eigen::VectorXd lam = l.eig().eigenvalues;
  Eigen::VectorXcd roots(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) roots[i] = sqrt_cut(z - lam[i]);
  FiberOperator fiber = l;
  k.evaluate = [fiber, roots](double t, double tau) {
    const std::complex<double> i_unit(0.0, 1.0);
    Eigen::VectorXcd d(roots.size());
    for (Eigen::Index j = 0; j < roots.size(); ++j) {
      d[j] = i_unit * std::exp(i_unit * roots[j] * (t + tau)) / roots[j];
    }
    return sandwich(fiber, d);
  };
  return k;
}

SpectralKernel projection_diff_kernel(const FiberOperator& l, double alpha) {
  if (!(alpha > 0.0)) {
    throw InvalidArgumentError("projection_diff_kernel: alpha must be > 0");
  }
  SpectralKernel k{l, {0.0, 0.0}, alpha, true, nullptr};
  const Eigen::VectorXd lam = l.eig().eigenvalues;
  FiberOperator fiber = l;
  k.evaluate = [fiber, lam, alpha](double t, double tau) {
    Eigen::VectorXcd d(lam.size());
    for (Eigen::Index j = 0; j < lam.size(); ++j) {
      if (lam[j] < alpha) {
        const double freq = std::sqrt(alpha - lam[j]);
        d[j] = (2.0 / kPi) * freq * sinc(freq * (t + tau));
      } else {
        d[j] = 0.0;
      }
    }
    return sandwich(fiber, d);
  };
  return k;
}

Eigen::MatrixXcd solution_operator(const FiberOperator& l,
                                   std::complex<double> z, const Grid& grid) {
  require_off_cut(l, z, "solution_operator");
  const std::complex<double> i_unit(0.0, 1.0);
  const Eigen::VectorXd lam = l.eig().eigenvalues;
  const int n = grid.size();
  const int m = l.dim();
  Eigen::MatrixXcd s(n * m, m);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXcd d(lam.size());
    for (Eigen::Index j = 0; j < lam.size(); ++j) {
      d[j] = std::exp(i_unit * sqrt_cut(z - lam[j]) * grid.nodes[i]);
    }
    s.block(i * m, 0, m, m) = sandwich(l, d);
  }
  return s;
}

Eigen::MatrixXcd dtn_operator(const FiberOperator& l, std::complex<double> z) {
  require_off_cut(l, z, "dtn_operator");
  const std::complex<double> i_unit(0.0, 1.0);
  const Eigen::VectorXd lam = l.eig().eigenvalues;
  Eigen::VectorXcd d(lam.size());
  for (Eigen::Index j = 0; j < lam.size(); ++j) {
    d[j] = -i_unit * sqrt_cut(z - lam[j]);
  }
  return sandwich(l, d);
}

Eigen::MatrixXcd ntd_operator(const FiberOperator& l, std::complex<double> z) {
  require_off_cut(l, z, "ntd_operator");
  const std::complex<double> i_unit(0.0, 1.0);
  const Eigen::VectorXd lam = l.eig().eigenvalues;
  Eigen::VectorXcd d(lam.size());
  for (Eigen::Index j = 0; j < lam.size(); ++j) {
    d[j] = i_unit / sqrt_cut(z - lam[j]);
  }
  return sandwich(l, d);
}

NystromMatrix krein_assemble(const FiberOperator& l, std::complex<double> z,
                             const Grid& grid) {
  require_off_cut(l, z, "krein_assemble");
  const int n = grid.size();
  const int m = l.dim();
  const Eigen::MatrixXcd s = solution_operator(l, z, grid);
  const Eigen::MatrixXcd lam_inv = ntd_operator(l, z);
  // Quadrature adjoint: the right factor's block j carries w_j. The
  // solution blocks are complex symmetric (functions of a real symmetric
  // L), so conjugate(S(conj z))^T reduces to S(z)^T.
  Eigen::VectorXcd w(n * m);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < m; ++k) w[i * m + k] = grid.weights[i];
  }
  NystromMatrix out;
  out.convention = Convention::RightWeighted;
  out.grid = grid;
  out.fiber_dim = m;
  out.data = s * lam_inv * s.transpose() * w.asDiagonal();
  return out;
}

NystromMatrix hankel_k(const Grid& grid) {
  const int n = grid.size();
  NystromMatrix out;
  out.convention = Convention::Symmetrized;
  out.grid = grid;
  out.fiber_dim = 1;
  out.data.resize(n, n);
  for (int i = 0; i < n; ++i) {
    const double sw_i = std::sqrt(grid.weights[i]);
    for (int j = 0; j <= i; ++j) {
      const double v = sw_i * std::sqrt(grid.weights[j]) * (2.0 / kPi) *
                       sinc(grid.nodes[i] + grid.nodes[j]);
      out.data(i, j) = v;
      out.data(j, i) = v;
    }
  }
  return out;
}

NystromMatrix rank_one_b(const Grid& grid) {
  const int n = grid.size();
  Eigen::VectorXd psi(n);
  for (int i = 0; i < n; ++i) {
    psi[i] = std::sqrt(grid.weights[i]) * std::exp(-grid.nodes[i]);
  }
  NystromMatrix out;
  out.convention = Convention::Symmetrized;
  out.grid = grid;
  out.fiber_dim = 1;
  out.data = (psi * psi.transpose()).cast<std::complex<double>>();
  return out;
}

NystromMatrix separated_variables_operator(const FiberOperator& l, double z,
                                           const Grid& grid) {
  if (!(z < l.min_eigenvalue())) {
    throw InvalidArgumentError(
        "separated_variables_operator: z must be real and < min sigma(L)");
  }
  const Eigen::MatrixXd b = rank_one_b(grid).data.real();
  const Eigen::MatrixXd res =
      apply_fn(l.eig(), [z](double lam) { return 1.0 / (lam - z); });
  const int n = grid.size();
  const int m = l.dim();
  NystromMatrix out;
  out.convention = Convention::Symmetrized;
  out.grid = grid;
  out.fiber_dim = m;
  Eigen::MatrixXd data(n * m, n * m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      data.block(i * m, j * m, m, m) = b(i, j) * res;
    }
  }
  out.data = data.cast<std::complex<double>>();
  return out;
}

Grid scaled_grid_similarity(const Grid& grid, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw InvalidArgumentError("scaled_grid_similarity: c must be > 0");
  }
  Grid out;
  out.nodes = grid.nodes / c;
  out.spacing = grid.spacing / c;
  out.t_max = grid.t_max / c;
  out.weights = grid.weights / c;
  return out;
}

}  // namespace kreinlab
