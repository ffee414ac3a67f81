// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "kreinlab/errors.hpp"

namespace kreinlab {

/// Cell-centered discretization of the truncated half-line (0, t_max]:
/// nodes t_i = (i - 1/2) h for i = 1..n with h = t_max / n, so the grid
/// avoids t = 0 and both boundary closures of the finite-difference
/// Laplacians are second-order accurate at the same nodes. The midpoint
/// quadrature weights w_i = h sum to t_max exactly and integrate smooth
/// integrands over [0, t_max] to O(h^2).
struct Grid {
  Eigen::VectorXd nodes;
  double spacing = 0.0;
  double t_max = 0.0;
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

Grid make_uniform_grid(int n_points, double t_max);

/// Inner-product bookkeeping for Nystrom matrices.
///   Plain:         k(t_i, t_j)
///   RightWeighted: k(t_i, t_j) w_j            (acts on plain samples)
///   Symmetrized:   sqrt(w_i) k(t_i, t_j) sqrt(w_j)
enum class Convention { Plain, RightWeighted, Symmetrized };

/// m x m matrix-valued kernel sampled at one node pair.
using KernelFn = std::function<Eigen::MatrixXcd(double t, double tau)>;

/// Dense Nystrom discretization of an integral operator on the
/// grid (x) fiber space; block (i, j) has size m x m.
struct NystromMatrix {
  Eigen::MatrixXcd data;
  Convention convention = Convention::Symmetrized;
  Grid grid;
  int fiber_dim = 1;

  bool is_real(double tol = 1e-13) const;
  /// Real part, failing if any imaginary entry exceeds tol (relative).
  Eigen::MatrixXd real_checked(double tol = 1e-12) const;
  /// Exact diagonal similarity diag(w^(1/2)) (x) I between conventions.
  NystromMatrix to_convention(Convention target) const;
};

NystromMatrix discretize_kernel(const KernelFn& kernel, const Grid& grid,
                                int fiber_dim, Convention convention);

/// Quadrature inner product sum_i w_i <u_i, v_i> over fiber blocks,
/// conjugate-linear in the second argument.
std::complex<double> weighted_inner(const Eigen::VectorXcd& u,
                                    const Eigen::VectorXcd& v,
                                    const Grid& grid, int fiber_dim);
double weighted_inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                      const Grid& grid, int fiber_dim);

}  // namespace kreinlab
