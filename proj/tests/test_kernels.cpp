// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "kreinlab/kernels.hpp"

using namespace kreinlab;

namespace {

constexpr double kPi = 3.14159265358979323846;

Eigen::MatrixXd rotated_fiber(const std::vector<double>& eigenvalues,
                              std::uint64_t seed) {
  // Dense symmetric matrix with prescribed spectrum, through a random
  // orthogonal basis.
  const int m = static_cast<int>(eigenvalues.size());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = normal(rng);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  const Eigen::MatrixXd q = qr.householderQ();
  Eigen::VectorXd d(m);
  for (int i = 0; i < m; ++i) d[i] = eigenvalues[i];
  return q * d.asDiagonal() * q.transpose();
}

}  // namespace

TEST_CASE("theta/alpha maps: pinned values and exact round trips") {
  const ThetaAlpha half = theta_to_alpha(0.5);
  CHECK(half.alpha == doctest::Approx(1.0));
  const ThetaAlpha three = alpha_to_theta(3.0);
  CHECK(three.theta == doctest::Approx(0.25));
  CHECK(theta_to_alpha(three.theta).alpha == doctest::Approx(3.0).epsilon(1e-14));

  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> uni(0.01, 0.99);
  for (int k = 0; k < 50; ++k) {
    const ThetaAlpha ta = theta_to_alpha(uni(rng));
    CHECK(std::abs(ta.alpha * ta.theta + ta.theta - 1.0) <= 1e-14);
  }

  CHECK_THROWS_AS(theta_to_alpha(1.5), InvalidArgumentError);
  CHECK_THROWS_AS(theta_to_alpha(0.0), InvalidArgumentError);
  CHECK_THROWS_AS(alpha_to_theta(-1.0), InvalidArgumentError);
}

TEST_CASE("resolvent_eigenvalue_map: pinned values") {
  CHECK(resolvent_eigenvalue_map(0.0) == doctest::Approx(0.5));
  CHECK(resolvent_eigenvalue_map(1.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(resolvent_eigenvalue_map(-0.1), InvalidArgumentError);
}

TEST_CASE("sinc: smooth across the series threshold") {
  CHECK(sinc(0.0) == doctest::Approx(1.0));
  CHECK(sinc(0.5) == doctest::Approx(std::sin(0.5) / 0.5).epsilon(1e-15));
  CHECK(std::abs(sinc(1.0001e-4) - sinc(0.9999e-4)) <= 1e-12);
  CHECK(sinc(1e-6) < 1.0);
  CHECK(sinc(1e-6) > 1.0 - 1e-9);
}

TEST_CASE("resolvent_diff_kernel: scalar closed forms") {
  const FiberOperator l0 = FiberOperator::from_eigenvalues({0.0});
  const SpectralKernel k0 = resolvent_diff_kernel(l0, {-1.0, 0.0});
  for (double t : {0.3, 1.0, 4.5}) {
    for (double tau : {0.2, 2.0}) {
      CHECK(std::abs(k0.evaluate(t, tau)(0, 0) - std::exp(-(t + tau))) <= 1e-13);
    }
  }

  const FiberOperator l3 = FiberOperator::from_eigenvalues({3.0});
  const SpectralKernel k3 = resolvent_diff_kernel(l3, {-1.0, 0.0});
  CHECK(std::abs(k3.evaluate(1.0, 2.0)(0, 0) - std::exp(-2.0 * 3.0) / 2.0) <= 1e-13);
}

TEST_CASE("resolvent_diff_kernel: complex branch agrees with the real formula at z=-1") {
  // Two algebraic routes through the cut: i exp(i sqrt(z-L)s)(sqrt(z-L))^(-1)
  // against exp(-(L+1)^(1/2) s)(L+1)^(-1/2).
  const Eigen::MatrixXd lm = rotated_fiber({0.0, 1.0, 4.0}, 31);
  const FiberOperator l(lm);
  const SpectralKernel k = resolvent_diff_kernel(l, {-1.0, 0.0});
  for (double s : {0.4, 1.7, 6.2}) {
    const Eigen::MatrixXd direct = apply_fn(l.eig(), [&](double lam) {
      return std::exp(-std::sqrt(lam + 1.0) * s) / std::sqrt(lam + 1.0);
    });
    const Eigen::MatrixXcd via_cut = k.evaluate(0.25 * s, 0.75 * s);
    CHECK((via_cut.real() - direct).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK(via_cut.imag().cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("resolvent_diff_kernel: indicator test against the exact integral") {
  // Oracle: int_1^2 exp(-(t+tau)) dtau = exp(-t)(exp(-1) - exp(-2)).
  // Grid chosen so cell edges align with the indicator's endpoints.
  const Grid g = make_uniform_grid(750, 30.0);
  const FiberOperator l0 = FiberOperator::from_eigenvalues({0.0});
  const NystromMatrix k =
      discretize_kernel(resolvent_diff_kernel(l0, {-1.0, 0.0}).evaluate, g, 1,
                        Convention::RightWeighted);
  Eigen::VectorXcd psi(g.size());
  for (int i = 0; i < g.size(); ++i) {
    psi[i] = (g.nodes[i] >= 1.0 && g.nodes[i] <= 2.0) ? 1.0 : 0.0;
  }
  const Eigen::VectorXcd applied = k.data * psi;
  const double weight = std::exp(-1.0) - std::exp(-2.0);
  for (int i = 0; i < g.size(); i += 37) {
    CHECK(std::abs(applied[i].real() - std::exp(-g.nodes[i]) * weight) <= 1e-3);
  }
}

TEST_CASE("resolvent_diff_kernel: rejects z on the cut") {
  const FiberOperator l0 = FiberOperator::from_eigenvalues({0.0});
  CHECK_THROWS_AS(resolvent_diff_kernel(l0, {0.5, 0.0}), InvalidArgumentError);
  CHECK_NOTHROW(resolvent_diff_kernel(l0, {0.5, 1e-3}));
  CHECK_NOTHROW(resolvent_diff_kernel(l0, {-0.5, 0.0}));
}

TEST_CASE("projection_diff_kernel: Krein kernel and vanishing fibers") {
  const FiberOperator l0 = FiberOperator::from_eigenvalues({0.0});
  const SpectralKernel k = projection_diff_kernel(l0, 1.0);
  for (double t : {0.5, 2.0}) {
    for (double tau : {0.7, 5.5}) {
      CHECK(std::abs(k.evaluate(t, tau)(0, 0) -
                     (2.0 / kPi) * std::sin(t + tau) / (t + tau)) <= 1e-14);
    }
  }

  const FiberOperator l2 = FiberOperator::from_eigenvalues({2.0});
  const SpectralKernel kz = projection_diff_kernel(l2, 1.0);
  CHECK(kz.evaluate(1.0, 1.0)(0, 0) == std::complex<double>(0.0, 0.0));

  const FiberOperator lmix = FiberOperator::from_eigenvalues({0.0, 2.0});
  const Eigen::MatrixXcd block = projection_diff_kernel(lmix, 1.0).evaluate(1.0, 2.0);
  CHECK(std::abs(block(0, 0) - (2.0 / kPi) * std::sin(3.0) / 3.0) <= 1e-14);
  CHECK(std::abs(block(1, 1)) == 0.0);
  CHECK(std::abs(block(0, 1)) == 0.0);

  CHECK_THROWS_AS(projection_diff_kernel(l0, 0.0), InvalidArgumentError);
}

TEST_CASE("projection_diff_kernel: spectral zero blocks for a rotated fiber") {
  const Eigen::MatrixXd lm = rotated_fiber({0.3, 5.0}, 37);
  const FiberOperator l(lm);
  const SpectralKernel k = projection_diff_kernel(l, 1.0);
  const Eigen::MatrixXcd value = k.evaluate(1.1, 0.4);
  // In the fiber eigenbasis the lambda >= alpha entry vanishes exactly.
  const Eigen::MatrixXd q = l.eig().eigenvectors;
  const Eigen::MatrixXcd diag = q.transpose() * value * q;
  CHECK(std::abs(diag(1, 1)) <= 1e-16);
  CHECK(std::abs(diag(0, 1)) <= 1e-16);
  const double freq = std::sqrt(1.0 - 0.3);
  CHECK(std::abs(diag(0, 0) - (2.0 / kPi) * freq * sinc(freq * 1.5)) <= 1e-14);
}

TEST_CASE("solution_operator: exponential samples and the norm bound") {
  const Grid g = make_uniform_grid(800, 30.0);
  const FiberOperator l0 = FiberOperator::from_eigenvalues({0.0});
  const Eigen::MatrixXcd s0 = solution_operator(l0, {-1.0, 0.0}, g);
  for (int i = 0; i < g.size(); i += 113) {
    CHECK(std::abs(s0(i, 0) - std::exp(-g.nodes[i])) <= 1e-13);
  }

  const FiberOperator l3 = FiberOperator::from_eigenvalues({3.0});
  const Eigen::MatrixXcd s3 = solution_operator(l3, {-1.0, 0.0}, g);
  CHECK(std::abs(s3(5, 0) - std::exp(-2.0 * g.nodes[5])) <= 1e-13);

  // At lambda = 0 the continuum bound 1/2 is attained; the quadrature
  // value stays just below it.
  Eigen::VectorXcd unit = Eigen::VectorXcd::Ones(1);
  const Eigen::VectorXcd samples0 = s0 * unit;
  const double attained = weighted_inner(samples0, samples0, g, 1).real();
  CHECK(attained <= 0.5);
  CHECK(attained >= 0.49);

  // Quadrature norm bound ||S(-1) phi||^2 <= (1/2)||phi||^2 (1 + 1e-2).
  const Eigen::MatrixXd lm = rotated_fiber({0.0, 0.7, 2.5}, 41);
  const FiberOperator l(lm);
  const Eigen::MatrixXcd s = solution_operator(l, {-1.0, 0.0}, g);
  std::mt19937_64 rng(43);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXcd phi(3);
    for (int i = 0; i < 3; ++i) phi[i] = normal(rng);
    const Eigen::VectorXcd samples = s * phi;
    const double norm_sq = weighted_inner(samples, samples, g, 3).real();
    CHECK(norm_sq <= 0.5 * phi.squaredNorm() * (1.0 + 1e-2));
  }
}

TEST_CASE("dtn/ntd: pinned values and the exact inverse") {
  const FiberOperator l0 = FiberOperator::from_eigenvalues({0.0});
  CHECK(std::abs(dtn_operator(l0, {-1.0, 0.0})(0, 0) -
                 std::complex<double>(1.0, 0.0)) <= 1e-14);

  const FiberOperator l3 = FiberOperator::from_eigenvalues({3.0});
  CHECK(std::abs(dtn_operator(l3, {-1.0, 0.0})(0, 0) -
                 std::complex<double>(2.0, 0.0)) <= 1e-14);
  CHECK(std::abs(ntd_operator(l3, {-1.0, 0.0})(0, 0) -
                 std::complex<double>(0.5, 0.0)) <= 1e-14);

  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> uni(0.0, 5.0);
  for (int trial = 0; trial < 10; ++trial) {
    const FiberOperator l =
        FiberOperator::from_eigenvalues({uni(rng), uni(rng), uni(rng)});
    const Eigen::MatrixXcd prod =
        dtn_operator(l, {-2.0, 0.0}) * ntd_operator(l, {-2.0, 0.0});
    CHECK((prod - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("krein_assemble: explicit scalar entries") {
  const Grid g = make_uniform_grid(40, 10.0);
  const FiberOperator l0 = FiberOperator::from_eigenvalues({0.0});
  const NystromMatrix k0 = krein_assemble(l0, {-1.0, 0.0}, g);
  CHECK(k0.convention == Convention::RightWeighted);
  for (int i = 0; i < 40; i += 7) {
    for (int j = 0; j < 40; j += 11) {
      const double expect = std::exp(-(g.nodes[i] + g.nodes[j])) * g.weights[j];
      CHECK(std::abs(k0.data(i, j) - expect) <= 1e-14);
    }
  }

  const FiberOperator l1 = FiberOperator::from_eigenvalues({1.0});
  const NystromMatrix k1 = krein_assemble(l1, {-1.0, 0.0}, g);
  const double root2 = std::sqrt(2.0);
  const double expect =
      std::exp(-root2 * (g.nodes[3] + g.nodes[8])) * g.weights[8] / root2;
  CHECK(std::abs(k1.data(3, 8) - expect) <= 1e-14);
}

TEST_CASE("krein_assemble: equals the discretized kernel") {
  const Grid g = make_uniform_grid(60, 12.0);
  const Eigen::MatrixXd lm = rotated_fiber({0.0, 2.0}, 53);
  const FiberOperator l(lm);
  const std::complex<double> z(-1.5, 0.0);
  const NystromMatrix assembled = krein_assemble(l, z, g);
  const NystromMatrix kernel = discretize_kernel(
      resolvent_diff_kernel(l, z).evaluate, g, 2, Convention::RightWeighted);
  CHECK((assembled.data - kernel.data).norm() <= 1e-12 * kernel.data.norm());
}

TEST_CASE("krein_assemble: complex z off the cut agrees with the kernel") {
  const Grid g = make_uniform_grid(40, 10.0);
  const Eigen::MatrixXd lm = rotated_fiber({0.2, 1.7}, 59);
  const FiberOperator l(lm);
  const std::complex<double> z(0.5, 0.8);
  const NystromMatrix assembled = krein_assemble(l, z, g);
  const NystromMatrix kernel = discretize_kernel(
      resolvent_diff_kernel(l, z).evaluate, g, 2, Convention::RightWeighted);
  CHECK((assembled.data - kernel.data).norm() <= 1e-12 * kernel.data.norm());
  CHECK_FALSE(assembled.is_real());
}

TEST_CASE("krein_assemble: symmetrized form is symmetric PSD for real z") {
  const Grid g = make_uniform_grid(50, 10.0);
  const FiberOperator l = FiberOperator::from_eigenvalues({0.0, 1.0});
  const Eigen::MatrixXd sym =
      krein_assemble(l, {-1.25, 0.0}, g).to_convention(Convention::Symmetrized)
          .real_checked();
  CHECK((sym - sym.transpose()).norm() <= 1e-10 * sym.norm());
  const EigenDecomposition e = eigh(sym);
  CHECK(e.eigenvalues.minCoeff() >= -1e-10 * sym.norm());
}

TEST_CASE("hankel_k: diagonal entries, small-argument limit, spectrum bound") {
  const Grid g = make_uniform_grid(50, 10.0);
  const NystromMatrix k = hankel_k(g);
  for (int i = 0; i < 50; i += 9) {
    const double expect =
        (2.0 / kPi) * std::sin(2.0 * g.nodes[i]) / (2.0 * g.nodes[i]) * g.weights[i];
    CHECK(std::abs(k.data(i, i) - expect) <= 1e-14);
  }

  // Kernel value approaches 2/pi as t + tau -> 0.
  const Grid tiny = make_uniform_grid(10, 1e-6);
  const NystromMatrix kt = hankel_k(tiny);
  CHECK(kt.data(0, 0).real() / tiny.weights[0] == doctest::Approx(2.0 / kPi));

  const Grid big = make_uniform_grid(800, 80.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hankel_k(big).real_checked(),
                                                    Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues().minCoeff() >= -1.02);
  CHECK(es.eigenvalues().maxCoeff() <= 1.02);
}

TEST_CASE("hankel_k: band filling improves with matched refinement") {
  // Largest eigenvalue gap inside [-0.9, 0.9] shrinks and the fill
  // fraction grows as n and t_max double together.
  auto spectrum = [](int n, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        hankel_k(make_uniform_grid(n, t)).real_checked(),
        Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
  };
  auto biggest_gap = [](const std::vector<double>& ev) {
    double prev = -2.0, gap = 0.0;
    bool have_prev = false;
    for (double v : ev) {
      if (v < -0.9 || v > 0.9) continue;
      if (have_prev) gap = std::max(gap, v - prev);
      prev = v;
      have_prev = true;
    }
    return gap;
  };
  const auto small = spectrum(200, 20.0);
  const auto medium = spectrum(400, 40.0);
  const auto large = spectrum(800, 80.0);
  CHECK(biggest_gap(small) > biggest_gap(medium));
  CHECK(biggest_gap(medium) > biggest_gap(large));
}

TEST_CASE("projection kernel fiber blocks share the Hankel spectrum exactly") {
  // In the fiber eigenbasis, each lambda < alpha block of the
  // discretized projection-difference kernel is the Hankel matrix on the
  // grid scaled by the fiber frequency.
  const Grid g = make_uniform_grid(120, 24.0);
  const double alpha = 1.0;
  const std::vector<double> lams = {0.3, 5.0};
  const Eigen::MatrixXd lm = rotated_fiber(lams, 61);
  const FiberOperator l(lm);
  const NystromMatrix big = discretize_kernel(
      projection_diff_kernel(l, alpha).evaluate, g, 2, Convention::Symmetrized);

  const int n = g.size();
  const Eigen::MatrixXd q = l.eig().eigenvectors;
  for (int fiber = 0; fiber < 2; ++fiber) {
    Eigen::MatrixXd block(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Eigen::MatrixXd sub = big.data.block(2 * i, 2 * j, 2, 2).real();
        block(i, j) = q.col(fiber).dot(sub * q.col(fiber));
      }
    }
    if (l.eig().eigenvalues[fiber] >= alpha) {
      CHECK(block.cwiseAbs().maxCoeff() <= 1e-14);
      continue;
    }
    const double s = std::sqrt(alpha - l.eig().eigenvalues[fiber]);
    const Eigen::MatrixXd reference =
        hankel_k(scaled_grid_similarity(g, 1.0 / s)).real_checked();
    CHECK((block - reference).cwiseAbs().maxCoeff() <= 1e-13);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e1(block, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e2(reference,
                                                      Eigen::EigenvaluesOnly);
    CHECK((e1.eigenvalues() - e2.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("rank_one_b: eigenvalue, rank, and action on its own vector") {
  const Grid g = make_uniform_grid(800, 30.0);
  const NystromMatrix b = rank_one_b(g);
  const EigenDecomposition e = eigh(b.real_checked());
  CHECK(std::abs(e.eigenvalues.maxCoeff() - 0.5) <= 1e-3);
  // Rank one: every other eigenvalue is numerically zero.
  int big_count = 0;
  for (Eigen::Index i = 0; i < e.eigenvalues.size(); ++i) {
    if (std::abs(e.eigenvalues[i]) > 1e-10) ++big_count;
  }
  CHECK(big_count == 1);

  const Eigen::MatrixXd rw =
      b.to_convention(Convention::RightWeighted).real_checked();
  Eigen::VectorXd psi(g.size());
  for (int i = 0; i < g.size(); ++i) psi[i] = std::exp(-g.nodes[i]);
  const Eigen::VectorXd applied = rw * psi;
  for (int i = 0; i < g.size(); i += 97) {
    CHECK(std::abs(applied[i] - 0.5 * psi[i]) <= 1e-3);
  }
}

TEST_CASE("separated_variables_operator: mapped nonzero spectrum") {
  const Grid g = make_uniform_grid(300, 30.0);

  const FiberOperator l0 = FiberOperator::from_eigenvalues({0.0});
  EigenDecomposition e =
      eigh(separated_variables_operator(l0, -1.0, g).real_checked());
  CHECK(std::abs(e.eigenvalues.maxCoeff() - 0.5) <= 1e-3);

  const FiberOperator l11 = FiberOperator::from_eigenvalues({1.0, 1.0});
  e = eigh(separated_variables_operator(l11, -1.0, g).real_checked());
  const Eigen::Index n = e.eigenvalues.size();
  CHECK(std::abs(e.eigenvalues[n - 1] - 0.25) <= 1e-3);
  CHECK(std::abs(e.eigenvalues[n - 2] - 0.25) <= 1e-3);
  CHECK(std::abs(e.eigenvalues[n - 3]) <= 1e-10);

  const FiberOperator l3 = FiberOperator::from_eigenvalues({3.0});
  e = eigh(separated_variables_operator(l3, -2.0, g).real_checked());
  CHECK(std::abs(e.eigenvalues.maxCoeff() - 0.1) <= 1e-3);

  CHECK_THROWS_AS(separated_variables_operator(l3, 3.5, g), InvalidArgumentError);
}

TEST_CASE("scaled_grid_similarity: identity at c = 1") {
  const Grid g = make_uniform_grid(20, 5.0);
  const Grid same = scaled_grid_similarity(g, 1.0);
  CHECK((same.nodes - g.nodes).norm() == 0.0);
  CHECK((same.weights - g.weights).norm() == 0.0);
  CHECK_THROWS_AS(scaled_grid_similarity(g, 0.0), InvalidArgumentError);
}

TEST_CASE("scaled_grid_similarity: exact change of variables for the sin kernel") {
  // Fiber frequency s = sqrt(alpha - lambda); the projection fiber kernel
  // s k_H(s(t+tau)) on G equals the plain Hankel kernel on the grid
  // scaled by c = 1/s.
  const Grid g = make_uniform_grid(400, 40.0);
  const double alpha = 1.0, lambda = 0.3;
  const double s = std::sqrt(alpha - lambda);
  const auto fiber_kernel = [&](double t, double tau) {
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = (2.0 / kPi) * s * sinc(s * (t + tau));
    return m;
  };
  const NystromMatrix lhs = discretize_kernel(fiber_kernel, g, 1, Convention::Symmetrized);
  const Grid scaled = scaled_grid_similarity(g, 1.0 / s);
  const NystromMatrix rhs = hankel_k(scaled);
  CHECK((lhs.data - rhs.data).cwiseAbs().maxCoeff() <= 1e-15);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e1(lhs.real_checked(),
                                                    Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e2(rhs.real_checked(),
                                                    Eigen::EigenvaluesOnly);
  CHECK((e1.eigenvalues() - e2.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("scaled_grid_similarity: exact change of variables for the exp kernel") {
  const Grid g = make_uniform_grid(100, 20.0);
  const double c = 0.5;  // realizes the frequency-2 exponential kernel
  const auto lhs_kernel = [&](double t, double tau) {
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = (1.0 / c) * std::exp(-(t + tau) / c);
    return m;
  };
  const auto exp_kernel = [](double t, double tau) {
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = std::exp(-(t + tau));
    return m;
  };
  const NystromMatrix lhs = discretize_kernel(lhs_kernel, g, 1, Convention::Symmetrized);
  const NystromMatrix rhs = discretize_kernel(
      exp_kernel, scaled_grid_similarity(g, c), 1, Convention::Symmetrized);
  CHECK((lhs.data - rhs.data).cwiseAbs().maxCoeff() <= 1e-15);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e1(lhs.real_checked(),
                                                    Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e2(rhs.real_checked(),
                                                    Eigen::EigenvaluesOnly);
  CHECK((e1.eigenvalues() - e2.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-12);
}
