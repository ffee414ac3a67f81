// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/grid.hpp"

#include <cmath>
#include <string>
#include <type_traits>

namespace kreinlab {

Grid make_uniform_grid(int n_points, double t_max) {
  if (n_points < 2) {
    throw InvalidArgumentError("n_points must be >= 2, got " +
                               std::to_string(n_points));
  }
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw InvalidArgumentError("t_max must be a positive real, got " +
                               std::to_string(t_max));
  }
  Grid g;
  const double h = t_max / n_points;
  g.spacing = h;
  g.t_max = t_max;
  g.nodes.resize(n_points);
  for (int i = 0; i < n_points; ++i) g.nodes[i] = (i + 0.5) * h;
  g.weights = Eigen::VectorXd::Constant(n_points, h);
  return g;
}

bool NystromMatrix::is_real(double tol) const {
  const double scale = std::max(1.0, data.cwiseAbs().maxCoeff());
  return data.imag().cwiseAbs().maxCoeff() <= tol * scale;
}

Eigen::MatrixXd NystromMatrix::real_checked(double tol) const {
  if (!is_real(tol)) {
    throw NumericDomainError(
        "Nystrom matrix has non-negligible imaginary part");
  }
  return data.real();
}

NystromMatrix NystromMatrix::to_convention(Convention target) const {
  if (target == convention) return *this;
  const int n = grid.size();
  const int m = fiber_dim;
  Eigen::VectorXd left(n * m), right(n * m);
  auto fill = [&](Eigen::VectorXd& v, auto f) {
    for (int i = 0; i < n; ++i) {
      const double s = f(grid.weights[i]);
      for (int k = 0; k < m; ++k) v[i * m + k] = s;
    }
  };
  // Express both conventions relative to Plain = diag(l)^-1 K diag(r)^-1.
  auto scales = [&](Convention c, Eigen::VectorXd& l, Eigen::VectorXd& r) {
    switch (c) {
      case Convention::Plain:
        fill(l, [](double) { return 1.0; });
        fill(r, [](double) { return 1.0; });
        break;
      case Convention::RightWeighted:
        fill(l, [](double) { return 1.0; });
        fill(r, [](double w) { return w; });
        break;
      case Convention::Symmetrized:
        fill(l, [](double w) { return std::sqrt(w); });
        fill(r, [](double w) { return std::sqrt(w); });
        break;
    }
  };
  Eigen::VectorXd l_cur(n * m), r_cur(n * m), l_tgt(n * m), r_tgt(n * m);
  scales(convention, l_cur, r_cur);
  scales(target, l_tgt, r_tgt);
  NystromMatrix out;
  out.convention = target;
  out.grid = grid;
  out.fiber_dim = m;
  out.data = (l_tgt.cwiseQuotient(l_cur)).asDiagonal() * data *
             (r_tgt.cwiseQuotient(r_cur)).asDiagonal();
  return out;
}

NystromMatrix discretize_kernel(const KernelFn& kernel, const Grid& grid,
                                int fiber_dim, Convention convention) {
  if (fiber_dim < 1) {
    throw InvalidArgumentError("fiber_dim must be >= 1");
  }
  const int n = grid.size();
  const int m = fiber_dim;
  NystromMatrix out;
  out.convention = convention;
  out.grid = grid;
  out.fiber_dim = m;
  out.data.resize(n * m, n * m);
  for (int i = 0; i < n; ++i) {
    const double ti = grid.nodes[i];
    for (int j = 0; j < n; ++j) {
      const double tj = grid.nodes[j];
      Eigen::MatrixXcd block = kernel(ti, tj);
      if (block.rows() != m || block.cols() != m) {
        throw InvalidArgumentError("kernel block has wrong dimensions");
      }
      if (!block.allFinite()) {
        throw NumericDomainError("kernel returned a non-finite value at (t, tau) = (" +
                                 std::to_string(ti) + ", " + std::to_string(tj) + ")");
      }
      double scale = 1.0;
      switch (convention) {
        case Convention::Plain:
          break;
        case Convention::RightWeighted:
          scale = grid.weights[j];
          break;
        case Convention::Symmetrized:
          scale = std::sqrt(grid.weights[i]) * std::sqrt(grid.weights[j]);
          break;
      }
      out.data.block(i * m, j * m, m, m) = scale * block;
    }
  }
  return out;
}

namespace {

template <typename Scalar>
Scalar weighted_inner_impl(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& u,
                           const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& v,
                           const Grid& grid, int fiber_dim) {
  const int n = grid.size();
  if (fiber_dim < 1 || u.size() != v.size() ||
      u.size() != static_cast<Eigen::Index>(n) * fiber_dim) {
    throw InvalidArgumentError(
        "weighted_inner: vector lengths must equal n_points * fiber_dim");
  }
  Scalar acc{};
  for (int i = 0; i < n; ++i) {
    Scalar block{};
    for (int k = 0; k < fiber_dim; ++k) {
      const Eigen::Index idx = static_cast<Eigen::Index>(i) * fiber_dim + k;
      if constexpr (std::is_same_v<Scalar, std::complex<double>>) {
        block += u[idx] * std::conj(v[idx]);
      } else {
        block += u[idx] * v[idx];
      }
    }
    acc += grid.weights[i] * block;
  }
  return acc;
}

}  // namespace

std::complex<double> weighted_inner(const Eigen::VectorXcd& u,
                                    const Eigen::VectorXcd& v, const Grid& grid,
                                    int fiber_dim) {
  return weighted_inner_impl<std::complex<double>>(u, v, grid, fiber_dim);
}

double weighted_inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                      const Grid& grid, int fiber_dim) {
  return weighted_inner_impl<double>(u, v, grid, fiber_dim);
}

}  // namespace kreinlab
