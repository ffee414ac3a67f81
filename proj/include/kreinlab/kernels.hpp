// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include "kreinlab/operators.hpp"

namespace kreinlab {

/// Spectral window parameters kept as a pair so reports always carry
/// both: theta in (0, 1) and alpha = 1/theta - 1 > 0.
struct ThetaAlpha {
  double theta = 0.5;
  double alpha = 1.0;
};

ThetaAlpha theta_to_alpha(double theta);
ThetaAlpha alpha_to_theta(double alpha);

/// lambda >= 0  ->  1 / (2 (lambda + 1)), the eigenvalue of the
/// resolvent difference attached to the fiber value lambda.
double resolvent_eigenvalue_map(double lambda);

/// sin(x)/x with a degree-4 Taylor evaluation for |x| < 1e-4.
double sinc(double x);

/// Closed-form m x m matrix kernel (t, tau) -> value, carrying the fiber
/// operator and the spectral parameter it was built from.
struct SpectralKernel {
  FiberOperator fiber;
  std::complex<double> z{0.0, 0.0};
  double alpha = 0.0;
  bool real_valued = false;
  KernelFn evaluate;
};

/// Kernel of the resolvent difference at z off [min sigma(L), inf):
///   i exp(i sqrt(z-L) (t+tau)) (sqrt(z-L))^(-1),
/// which at z = -1 is exp(-(L+1)^(1/2)(t+tau)) (L+1)^(-1/2) exactly.
SpectralKernel resolvent_diff_kernel(const FiberOperator& l,
                                     std::complex<double> z);

/// Kernel of the spectral-projection difference at level alpha > 0:
///   (2/pi) 1_[0,alpha)(L) sin((alpha-L)^(1/2)(t+tau)) / (t+tau).
/// Fibers with lambda >= alpha contribute exactly zero blocks.
SpectralKernel projection_diff_kernel(const FiberOperator& l, double alpha);

/// Solution operator samples: row block i equals exp(i sqrt(z-L) t_i).
Eigen::MatrixXcd solution_operator(const FiberOperator& l,
                                   std::complex<double> z, const Grid& grid);

/// Dirichlet-to-Neumann operator Lambda(z) = -i sqrt(z-L), so that
/// Lambda(-1) = (L+1)^(1/2) is the outward normal derivative of the
/// decaying solution at the wall; ntd_operator is its exact inverse
/// i (sqrt(z-L))^(-1).
Eigen::MatrixXcd dtn_operator(const FiberOperator& l, std::complex<double> z);
Eigen::MatrixXcd ntd_operator(const FiberOperator& l, std::complex<double> z);

/// Resolvent difference assembled as S(z) Lambda(z)^(-1) S(conj z)^*,
/// with the adjoint taken in the quadrature inner product (the right
/// factor carries the weights). Equals the discretized
/// resolvent_diff_kernel in right-weighted convention.
NystromMatrix krein_assemble(const FiberOperator& l, std::complex<double> z,
                             const Grid& grid);

/// Symmetrized Nystrom matrix of (2/pi) sin(t+tau)/(t+tau).
NystromMatrix hankel_k(const Grid& grid);

/// Rank-one operator <., Psi0> Psi0 with Psi0(t) = exp(-t), symmetrized;
/// its single nonzero eigenvalue is the quadrature value of <Psi0, Psi0>.
NystromMatrix rank_one_b(const Grid& grid);

/// Separated form of the resolvent difference: rank_one_b (x) (L - z)^(-1)
/// for real z < min sigma(L); nonzero spectrum {<Psi0,Psi0>/(lambda_j - z)}.
NystromMatrix separated_variables_operator(const FiberOperator& l, double z,
                                           const Grid& grid);

/// Discrete change of variables: returns the grid {t_i / c} with weights
/// {w_i / c}; the symmetrized Nystrom matrix of (1/c) k((t+tau)/c) on the
/// original grid equals that of k(t+tau) on the scaled grid, entry for
/// entry.
Grid scaled_grid_similarity(const Grid& grid, double c);

}  // namespace kreinlab
