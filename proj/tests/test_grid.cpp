// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "kreinlab/grid.hpp"

using namespace kreinlab;

namespace {

// Quadrature of exp(-2t) over the truncated half-line; exact value 1/2
// up to an exp(-2 t_max) tail.
double quad_error(int n, double t_max) {
  const Grid g = make_uniform_grid(n, t_max);
  double acc = 0.0;
  for (int i = 0; i < g.size(); ++i) acc += g.weights[i] * std::exp(-2.0 * g.nodes[i]);
  return std::abs(acc - 0.5);
}

}  // namespace

TEST_CASE("uniform grid: cell-centered nodes and midpoint weights") {
  const Grid g = make_uniform_grid(4, 4.0);
  CHECK(g.spacing == doctest::Approx(1.0));
  REQUIRE(g.size() == 4);
  CHECK(g.nodes[0] == doctest::Approx(0.5));
  CHECK(g.nodes[1] == doctest::Approx(1.5));
  CHECK(g.nodes[3] == doctest::Approx(3.5));
  CHECK(g.weights.sum() == doctest::Approx(4.0));

  const Grid g2 = make_uniform_grid(2, 1.0);
  CHECK(g2.nodes[0] == doctest::Approx(0.25));
  CHECK(g2.nodes[1] == doctest::Approx(0.75));
}

TEST_CASE("uniform grid: invariants at production size") {
  const Grid g = make_uniform_grid(800, 30.0);
  CHECK(std::abs(g.weights.sum() - 30.0) <= 2.0 * g.spacing);
  CHECK(std::abs(800 * g.spacing - 30.0) <= 2.0 * g.spacing);
  for (int i = 0; i < g.size(); ++i) {
    CHECK(g.nodes[i] > 0.0);
    CHECK(g.weights[i] > 0.0);
    if (i) CHECK(g.nodes[i] > g.nodes[i - 1]);
  }
}

TEST_CASE("uniform grid: rejects bad arguments") {
  CHECK_THROWS_AS(make_uniform_grid(1, 1.0), InvalidArgumentError);
  CHECK_THROWS_AS(make_uniform_grid(10, 0.0), InvalidArgumentError);
  CHECK_THROWS_AS(make_uniform_grid(10, -3.0), InvalidArgumentError);
}

TEST_CASE("quadrature of exp(-2t) converges at second order") {
  CHECK(quad_error(800, 30.0) <= 1e-3);
  const double ratio = quad_error(400, 30.0) / quad_error(800, 30.0);
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("discretize_kernel: zero kernel gives the zero matrix") {
  const Grid g = make_uniform_grid(5, 2.0);
  const auto zero = [](double, double) { return Eigen::MatrixXcd::Zero(2, 2); };
  const NystromMatrix k = discretize_kernel(zero, g, 2, Convention::Symmetrized);
  CHECK(k.data.norm() == 0.0);
}

TEST_CASE("discretize_kernel: gaussian entries carry the right weight") {
  const Grid g = make_uniform_grid(2, 1.0);
  const auto kernel = [](double t, double tau) {
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = std::exp(-(t - tau) * (t - tau));
    return m;
  };
  const NystromMatrix k = discretize_kernel(kernel, g, 1, Convention::RightWeighted);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double expect =
          std::exp(-std::pow(g.nodes[i] - g.nodes[j], 2)) * g.weights[j];
      CHECK(k.data(i, j).real() == doctest::Approx(expect).epsilon(1e-14));
    }
  }
}

TEST_CASE("discretize_kernel: applying exp(-(t+tau)) reproduces the integral") {
  // Oracle: int_0^inf exp(-(t+tau)) exp(-tau) dtau = exp(-t)/2.
  const Grid g = make_uniform_grid(800, 30.0);
  const auto kernel = [](double t, double tau) {
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = std::exp(-(t + tau));
    return m;
  };
  const NystromMatrix k = discretize_kernel(kernel, g, 1, Convention::RightWeighted);
  Eigen::VectorXcd psi(g.size());
  for (int i = 0; i < g.size(); ++i) psi[i] = std::exp(-g.nodes[i]);
  const Eigen::VectorXcd result = k.data * psi;
  for (int i = 0; i < g.size(); ++i) {
    CHECK(std::abs(result[i].real() - 0.5 * std::exp(-g.nodes[i])) <= 1e-3);
    CHECK(result[i].imag() == 0.0);
  }
}

TEST_CASE("discretize_kernel: non-finite kernel values are reported with coordinates") {
  const Grid g = make_uniform_grid(3, 3.0);
  const auto bad = [](double t, double tau) {
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = (t > 1.0 && tau > 1.0) ? std::nan("") : 1.0;
    return m;
  };
  CHECK_THROWS_AS(discretize_kernel(bad, g, 1, Convention::Plain),
                  NumericDomainError);
}

TEST_CASE("conventions: symmetrized and right-weighted are exactly similar") {
  const Grid g = make_uniform_grid(40, 8.0);
  const auto kernel = [](double t, double tau) {
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = std::exp(-(t + tau)) + 0.1 * std::cos(t) * std::cos(tau);
    return m;
  };
  const NystromMatrix sym = discretize_kernel(kernel, g, 1, Convention::Symmetrized);
  const NystromMatrix rw = discretize_kernel(kernel, g, 1, Convention::RightWeighted);

  // rw = diag(w^(-1/2)) sym diag(w^(1/2)), entry for entry.
  Eigen::VectorXd sqw = g.weights.cwiseSqrt();
  const Eigen::MatrixXcd conjugated =
      sqw.cwiseInverse().asDiagonal() * sym.data * sqw.asDiagonal();
  CHECK((conjugated - rw.data).norm() <= 1e-12 * rw.data.norm());

  // And conversion reproduces it.
  const NystromMatrix converted = sym.to_convention(Convention::RightWeighted);
  CHECK((converted.data - rw.data).norm() <= 1e-12 * rw.data.norm());

  // Similar matrices share spectra.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym.real_checked(),
                                                    Eigen::EigenvaluesOnly);
  Eigen::VectorXcd rw_eigs = rw.data.eigenvalues();
  Eigen::VectorXd rw_sorted(rw_eigs.size());
  for (Eigen::Index i = 0; i < rw_eigs.size(); ++i) rw_sorted[i] = rw_eigs[i].real();
  std::sort(rw_sorted.data(), rw_sorted.data() + rw_sorted.size());
  CHECK((es.eigenvalues() - rw_sorted).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("discretize_kernel: pointwise-symmetric kernel gives a symmetric matrix") {
  const Grid g = make_uniform_grid(30, 6.0);
  const auto kernel = [](double t, double tau) {
    Eigen::MatrixXcd m(2, 2);
    m << std::sin(t + tau), t * tau, t * tau, std::cos(t - tau);
    return m;
  };
  const NystromMatrix sym = discretize_kernel(kernel, g, 2, Convention::Symmetrized);
  CHECK((sym.data - sym.data.transpose()).norm() <= 1e-12 * sym.data.norm());
}

TEST_CASE("weighted_inner: norm of exp(-t) and orthogonal fiber blocks") {
  const Grid g = make_uniform_grid(800, 30.0);
  Eigen::VectorXd u(g.size());
  for (int i = 0; i < g.size(); ++i) u[i] = std::exp(-g.nodes[i]);
  CHECK(std::abs(weighted_inner(u, u, g, 1) - 0.5) <= 1e-3);

  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(g.size());
  CHECK(weighted_inner(zero, u, g, 1) == 0.0);

  // u in fiber 1, v in fiber 2.
  Eigen::VectorXd a = Eigen::VectorXd::Zero(2 * g.size());
  Eigen::VectorXd b = Eigen::VectorXd::Zero(2 * g.size());
  for (int i = 0; i < g.size(); ++i) {
    a[2 * i] = std::exp(-g.nodes[i]);
    b[2 * i + 1] = std::cos(g.nodes[i]);
  }
  CHECK(weighted_inner(a, b, g, 2) == 0.0);
}

TEST_CASE("weighted_inner: conjugate-linear in the second slot") {
  const Grid g = make_uniform_grid(4, 2.0);
  Eigen::VectorXcd u(4), v(4);
  for (int i = 0; i < 4; ++i) {
    u[i] = std::complex<double>(std::cos(g.nodes[i]), 0.3 * i);
    v[i] = std::complex<double>(0.5, std::sin(g.nodes[i]));
  }
  const std::complex<double> c(2.0, 1.0);
  const std::complex<double> base = weighted_inner(u, v, g, 1);
  CHECK(std::abs(weighted_inner(u, c * v, g, 1) - std::conj(c) * base) <= 1e-14);
  CHECK(std::abs(weighted_inner(c * u, v, g, 1) - c * base) <= 1e-14);
}

TEST_CASE("weighted_inner: length mismatch is rejected") {
  const Grid g = make_uniform_grid(4, 2.0);
  Eigen::VectorXd u = Eigen::VectorXd::Ones(4);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(5);
  CHECK_THROWS_AS(weighted_inner(u, v, g, 1), InvalidArgumentError);
  CHECK_THROWS_AS(weighted_inner(u, u, g, 2), InvalidArgumentError);
}
