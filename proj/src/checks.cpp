// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "kreinlab/report.hpp"

namespace kreinlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join_doubles(const Eigen::VectorXd& v) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << format_double(v[i]);
  }
  return os.str();
}

void add_grid_params(CheckReport& r, const Grid& grid) {
  r.add_param("n_points", static_cast<double>(grid.size()));
  r.add_param("t_max", grid.t_max);
  r.add_param("spacing", grid.spacing);
}

void add_fiber_params(CheckReport& r, const FiberOperator& l) {
  r.add_param("fiber_eigenvalues", join_doubles(l.eig().eigenvalues));
}

void require_real_below_spectrum(const FiberOperator& l, double z,
                                 const char* who) {
  if (!(z < l.min_eigenvalue())) {
    throw InvalidArgumentError(std::string(who) +
                               ": z must be real and < min sigma(L)");
  }
}

std::vector<double> to_vector(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericDomainError("eigenvalue computation did not converge");
  }
  return solver.eigenvalues();
}

}  // namespace

void CheckReport::add_param(const std::string& key, const std::string& value) {
  parameters.emplace_back(key, value);
}

void CheckReport::add_param(const std::string& key, double value) {
  parameters.emplace_back(key, format_double(value));
}

void CheckReport::add_residual(const std::string& name, double value,
                               double tol) {
  residuals.push_back(ResidualEntry{name, value, tol});
}

void CheckReport::finalize() {
  passed = true;
  for (const auto& r : residuals) {
    if (!(r.value <= r.tolerance)) passed = false;
  }
  tolerance = residuals.empty() ? 0.0 : residuals.front().tolerance;
}

FiberOperator CheckParams::make_fiber() const {
  if (fiber_matrix) return FiberOperator(*fiber_matrix);
  return FiberOperator::from_eigenvalues(fiber_eigenvalues);
}

Grid CheckParams::make_grid() const { return make_uniform_grid(n_points, t_max); }

Eigen::MatrixXd fd_resolvent_difference(const FiberOperator& l,
                                        const Grid& grid, double z) {
  require_real_below_spectrum(l, z, "fd_resolvent_difference");
  const TensorSumOperator hn = tensor_sum_operator(grid, Boundary::Neumann, l);
  const TensorSumOperator hd = tensor_sum_operator(grid, Boundary::Dirichlet, l);
  return resolvent(eigh(hn.matrix), z) - resolvent(eigh(hd.matrix), z);
}

Eigen::MatrixXd fd_projection_difference(const FiberOperator& l,
                                         const Grid& grid, double alpha) {
  const TensorSumOperator hn = tensor_sum_operator(grid, Boundary::Neumann, l);
  const TensorSumOperator hd = tensor_sum_operator(grid, Boundary::Dirichlet, l);
  return spectral_projection(eigh(hn.matrix), alpha) -
         spectral_projection(eigh(hd.matrix), alpha);
}

CheckReport check_resolvent_kernel(const FiberOperator& l, const Grid& grid,
                                   double z) {
  const auto start = Clock::now();
  require_real_below_spectrum(l, z, "check_resolvent_kernel");
  CheckReport report;
  report.check_name = "resolvent-kernel";
  add_grid_params(report, grid);
  add_fiber_params(report, l);
  report.add_param("z", z);

  const Eigen::MatrixXd d = fd_resolvent_difference(l, grid, z);
  const Eigen::MatrixXd k =
      discretize_kernel(resolvent_diff_kernel(l, z).evaluate, grid, l.dim(),
                        Convention::RightWeighted)
          .real_checked();
  const double rel = spectral_norm(d - k) / spectral_norm(d);
  report.add_residual("fd_vs_kernel_rel", rel, 1e-2);
  report.finalize();
  report.elapsed_seconds = seconds_since(start);
  return report;
}

CheckReport check_krein_formula(const FiberOperator& l, const Grid& grid,
                                double z) {
  const auto start = Clock::now();
  require_real_below_spectrum(l, z, "check_krein_formula");
  CheckReport report;
  report.check_name = "krein-formula";
  add_grid_params(report, grid);
  add_fiber_params(report, l);
  report.add_param("z", z);

  const Eigen::MatrixXd assembled = krein_assemble(l, z, grid).real_checked();
  const Eigen::MatrixXd kernel =
      discretize_kernel(resolvent_diff_kernel(l, z).evaluate, grid, l.dim(),
                        Convention::RightWeighted)
          .real_checked();
  const double identity_rel = (assembled - kernel).norm() / kernel.norm();
  const Eigen::MatrixXd d = fd_resolvent_difference(l, grid, z);
  const double fd_rel = spectral_norm(d - assembled) / spectral_norm(d);
  report.add_residual("fd_vs_assembly_rel", fd_rel, 1e-2);
  report.add_residual("assembly_vs_kernel_rel", identity_rel, 1e-12);
  report.finalize();
  report.elapsed_seconds = seconds_since(start);
  return report;
}

CheckReport check_projection_kernel(const FiberOperator& l, const Grid& grid,
                                    const ThetaAlpha& ta,
                                    std::pair<double, double> subwindow) {
  const auto start = Clock::now();
  if (!(ta.alpha > 0.0)) {
    throw InvalidArgumentError("check_projection_kernel: alpha must be > 0");
  }
  if (!(subwindow.first > 0.0 && subwindow.first < subwindow.second &&
        subwindow.second <= grid.t_max)) {
    throw InvalidArgumentError(
        "check_projection_kernel: subwindow must satisfy 0 < lo < hi <= t_max");
  }
  CheckReport report;
  report.check_name = "projection-kernel";
  add_grid_params(report, grid);
  add_fiber_params(report, l);
  report.add_param("theta", ta.theta);
  report.add_param("alpha", ta.alpha);
  report.add_param("subwindow_lo", subwindow.first);
  report.add_param("subwindow_hi", subwindow.second);

  const int n = grid.size();
  const int m = l.dim();
  const TensorSumOperator hn = tensor_sum_operator(grid, Boundary::Neumann, l);
  const TensorSumOperator hd = tensor_sum_operator(grid, Boundary::Dirichlet, l);
  const EigenDecomposition en = eigh(hn.matrix);
  const EigenDecomposition ed = eigh(hd.matrix);
  const Eigen::MatrixXd p =
      spectral_projection(en, ta.alpha) - spectral_projection(ed, ta.alpha);

  std::vector<int> window_idx;
  for (int i = 0; i < n; ++i) {
    if (grid.nodes[i] >= subwindow.first && grid.nodes[i] <= subwindow.second) {
      window_idx.push_back(i);
    }
  }
  if (window_idx.empty()) {
    throw InvalidArgumentError("check_projection_kernel: subwindow contains no nodes");
  }

  const SpectralKernel kernel = projection_diff_kernel(l, ta.alpha);
  double sup = 0.0;
  for (int i : window_idx) {
    for (int j : window_idx) {
      const Eigen::MatrixXd expected =
          kernel.evaluate(grid.nodes[i], grid.nodes[j]).real();
      const double scale =
          std::sqrt(grid.weights[i]) * std::sqrt(grid.weights[j]);
      const Eigen::MatrixXd got = p.block(i * m, j * m, m, m) / scale;
      sup = std::max(sup, (got - expected).cwiseAbs().maxCoeff());
    }
  }
  report.add_residual("subwindow_sup_error", sup, 0.05);

  // Resolvent-side projections through the map theta = 1/(alpha+1):
  // identical eigenvectors, so the rule holds at matrix level.
  const Eigen::MatrixXd rn = resolvent(en, -1.0);
  const Eigen::MatrixXd rd = resolvent(ed, -1.0);
  const Eigen::MatrixXd p_resolvent = spectral_projection(eigh(rd), ta.theta) -
                                      spectral_projection(eigh(rn), ta.theta);
  const double rule = (p_resolvent - p).cwiseAbs().maxCoeff();
  report.add_residual("transformation_rule_max_abs", rule, 1e-10);

  report.finalize();
  report.elapsed_seconds = seconds_since(start);
  return report;
}

CheckReport check_resolvent_diff_spectrum(const FiberOperator& l,
                                          const Grid& grid, double z) {
  const auto start = Clock::now();
  require_real_below_spectrum(l, z, "check_resolvent_diff_spectrum");
  CheckReport report;
  report.check_name = "resolvent-spectrum";
  add_grid_params(report, grid);
  add_fiber_params(report, l);
  report.add_param("z", z);

  const int m = l.dim();
  const Eigen::MatrixXd d = fd_resolvent_difference(l, grid, z);
  Eigen::VectorXd evals = symmetric_eigenvalues(d);  // ascending

  // Mapped fiber eigenvalues <Psi0,Psi0> / (lambda_j - z), descending.
  std::vector<double> expected;
  for (Eigen::Index j = 0; j < m; ++j) {
    expected.push_back(0.5 / (l.eig().eigenvalues[j] - z));
  }
  std::sort(expected.begin(), expected.end(), std::greater<>());

  // Top m by magnitude; the difference is PSD here so these are the
  // largest eigenvalues.
  std::vector<double> actual(evals.data(), evals.data() + evals.size());
  std::sort(actual.begin(), actual.end(),
            [](double a, double b) { return std::abs(a) > std::abs(b); });
  double mapped_err = 0.0;
  for (int j = 0; j < m; ++j) {
    mapped_err = std::max(mapped_err, std::abs(actual[j] - expected[j]));
  }
  double rest = 0.0;
  for (std::size_t j = m; j < actual.size(); ++j) {
    rest = std::max(rest, std::abs(actual[j]));
  }
  report.add_residual("mapped_eigenvalue_error", mapped_err, 1e-3);
  report.add_residual("zero_cluster_max", rest, 1e-3);

  const Eigen::MatrixXd sep =
      separated_variables_operator(l, z, grid).real_checked();
  Eigen::VectorXd sep_evals = symmetric_eigenvalues(sep);
  const double sep_err = (evals - sep_evals).cwiseAbs().maxCoeff();
  report.add_residual("separated_spectrum_error", sep_err, 1e-3);

  report.spectra.emplace_back("fd_nonzero_descending",
                              std::vector<double>(actual.begin(), actual.begin() + m));
  report.spectra.emplace_back("mapped_expected", expected);
  report.finalize();
  report.elapsed_seconds = seconds_since(start);
  return report;
}

CheckReport check_projection_diff_spectrum(const FiberOperator& l,
                                           const Grid& grid,
                                           const ThetaAlpha& ta) {
  const auto start = Clock::now();
  if (!(ta.alpha > 0.0)) {
    throw InvalidArgumentError(
        "check_projection_diff_spectrum: alpha must be > 0");
  }
  CheckReport report;
  report.check_name = "projection-spectrum";
  add_grid_params(report, grid);
  add_fiber_params(report, l);
  report.add_param("theta", ta.theta);
  report.add_param("alpha", ta.alpha);

  const int n = grid.size();
  const Eigen::MatrixXd p = fd_projection_difference(l, grid, ta.alpha);
  const Eigen::VectorXd evals = symmetric_eigenvalues(p);

  int count_below = 0, count_above = 0;
  for (Eigen::Index j = 0; j < l.dim(); ++j) {
    (l.eig().eigenvalues[j] < ta.alpha ? count_below : count_above) += 1;
  }
  const char* branch = count_below == 0  ? "zero-operator"
                       : count_above == 0 ? "band"
                                          : "mixed";
  report.add_param("branch", branch);

  const double max_abs = evals.cwiseAbs().maxCoeff();
  report.add_residual("spectrum_bound_excess", std::max(0.0, max_abs - 1.0),
                      0.02);

  // Eigenvalues at exactly +/-1 are range/kernel intersection directions
  // of the two projections; they appear singly when the rank counts
  // differ and carry no pairing partner at finite truncation.
  double pairing = 0.0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (std::abs(evals[i]) > 0.1 && std::abs(evals[i]) < 1.0 - 1e-8) {
      pairing = std::max(pairing, (evals.array() + evals[i]).abs().minCoeff());
    }
  }
  report.add_residual("symmetry_pairing_defect", pairing, 0.05);

  if (count_below == 0) {
    report.add_residual("zero_operator_norm", max_abs, 1e-8);
  }
  if (count_above > 0) {
    const int zero_dim =
        static_cast<int>((evals.cwiseAbs().array() <= 1e-8).count());
    const double required = static_cast<double>(n) * count_above;
    report.add_residual("zero_cluster_deficit",
                        std::max(0.0, required - zero_dim), 0.5);
  }

  const std::vector<double> spectrum = to_vector(evals);
  report.add_param("fill_fraction", eigenvalue_fill_fraction(spectrum));
  report.spectra.emplace_back("projection_difference", spectrum);
  report.finalize();
  report.elapsed_seconds = seconds_since(start);
  return report;
}

CheckReport check_weidmann_pairing(const Eigen::MatrixXd& t1,
                                   const Eigen::MatrixXd& t2, double alpha,
                                   const Eigen::VectorXd& f1,
                                   const Eigen::VectorXd& g1,
                                   const Eigen::VectorXd& f2,
                                   const Eigen::VectorXd& g2) {
  const auto start = Clock::now();
  if (t1.rows() > 50 || t2.rows() > 50) {
    throw InvalidArgumentError(
        "check_weidmann_pairing: operands must be at most 50x50");
  }
  if (f1.size() != t1.rows() || g1.size() != t1.rows() ||
      f2.size() != t2.rows() || g2.size() != t2.rows()) {
    throw InvalidArgumentError("check_weidmann_pairing: dimension mismatch");
  }
  CheckReport report;
  report.check_name = "weidmann-pairing";
  report.add_param("dim_t1", static_cast<double>(t1.rows()));
  report.add_param("dim_t2", static_cast<double>(t2.rows()));
  report.add_param("alpha", alpha);

  // Left side through the assembled Kronecker sum.
  const EigenDecomposition e = eigh(kron_sum(t1, t2));
  const Eigen::MatrixXd p = spectral_projection(e, alpha);
  Eigen::VectorXd ff(t1.rows() * t2.rows()), gg(ff.size());
  for (Eigen::Index i = 0; i < t1.rows(); ++i) {
    for (Eigen::Index k = 0; k < t2.rows(); ++k) {
      ff[i * t2.rows() + k] = f1[i] * f2[k];
      gg[i * t2.rows() + k] = g1[i] * g2[k];
    }
  }
  const double lhs = gg.dot(p * ff);

  // Right side as the fiber sum over eigenpairs of t2.
  const EigenDecomposition e1 = eigh(t1);
  const EigenDecomposition e2 = eigh(t2);
  double rhs = 0.0;
  for (Eigen::Index j = 0; j < e2.eigenvalues.size(); ++j) {
    const double level = alpha - e2.eigenvalues[j];
    double inner1 = 0.0;
    for (Eigen::Index i = 0; i < e1.eigenvalues.size(); ++i) {
      if (e1.eigenvalues[i] < level) {
        inner1 += e1.eigenvectors.col(i).dot(f1) * e1.eigenvectors.col(i).dot(g1);
      }
    }
    rhs += inner1 * e2.eigenvectors.col(j).dot(f2) * e2.eigenvectors.col(j).dot(g2);
  }

  report.add_residual("pairing_abs_error", std::abs(lhs - rhs), 1e-10);
  report.finalize();
  report.elapsed_seconds = seconds_since(start);
  return report;
}

CheckReport check_weidmann_pairing_trials(std::uint64_t seed, int n_trials) {
  const auto start = Clock::now();
  if (n_trials < 1) {
    throw InvalidArgumentError("check_weidmann_pairing_trials: n_trials must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<int> dim1(2, 8), dim2(2, 6);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  auto random_psd = [&](int n) {
    Eigen::MatrixXd g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = normal(rng);
    return Eigen::MatrixXd(g.transpose() * g);
  };
  auto random_vec = [&](int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal(rng);
    return v;
  };

  double worst = 0.0;
  for (int trial = 0; trial < n_trials; ++trial) {
    const int n1 = dim1(rng), n2 = dim2(rng);
    const Eigen::MatrixXd t1 = random_psd(n1), t2 = random_psd(n2);
    const double max_sum = symmetric_eigenvalues(t1).maxCoeff() +
                           symmetric_eigenvalues(t2).maxCoeff();
    const double alpha = -0.5 + uni(rng) * (1.05 * max_sum + 0.5);
    const CheckReport one = check_weidmann_pairing(
        t1, t2, alpha, random_vec(n1), random_vec(n1), random_vec(n2),
        random_vec(n2));
    worst = std::max(worst, one.residuals.front().value);
  }

  CheckReport report;
  report.check_name = "weidmann-pairing";
  report.add_param("seed", static_cast<double>(seed));
  report.add_param("trials", static_cast<double>(n_trials));
  report.add_residual("max_pairing_abs_error", worst, 1e-10);
  report.finalize();
  report.elapsed_seconds = seconds_since(start);
  return report;
}

CheckReport check_boundary_bounds(const FiberOperator& l, const Grid& grid,
                                  int n_samples, std::uint64_t seed) {
  const auto start = Clock::now();
  if (n_samples < 1) {
    throw InvalidArgumentError("check_boundary_bounds: n_samples must be >= 1");
  }
  CheckReport report;
  report.check_name = "boundary-bounds";
  add_grid_params(report, grid);
  add_fiber_params(report, l);
  report.add_param("seed", static_cast<double>(seed));
  report.add_param("samples", static_cast<double>(n_samples));

  const int n = grid.size();
  const int m = l.dim();
  const double eps_h = 10.0 * grid.spacing;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto random_vec = [&](int len) {
    Eigen::VectorXd v(len);
    for (int i = 0; i < len; ++i) v[i] = normal(rng);
    return v;
  };

  // Quadrature Gram matrix of the solution operator at z = -1:
  // M = sum_i w_i exp(-2 (L+1)^(1/2) t_i), so ||S(-1)phi||^2 = phi^T M phi.
  const Eigen::MatrixXd gram = apply_fn(l.eig(), [&](double lam) {
    const double c = std::sqrt(lam + 1.0);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      acc += grid.weights[i] * std::exp(-2.0 * c * grid.nodes[i]);
    }
    return acc;
  });
  double ratio_solution = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    const Eigen::VectorXd phi = random_vec(m);
    ratio_solution = std::max(
        ratio_solution, phi.dot(gram * phi) / (0.5 * phi.squaredNorm()));
  }
  report.add_residual("solution_norm_ratio_max", ratio_solution, 1.0 + eps_h);

  // Trace bound for band-limited samples u(t) = sum_k mode_k(t) phi_k.
  const int n_modes = 5;
  double ratio_trace = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, m);  // row i = u(t_i)
    for (int k = 1; k <= n_modes; ++k) {
      const double omega = k * kPi / grid.t_max;
      const double a = normal(rng), b = normal(rng);
      Eigen::VectorXd phi = random_vec(m);
      phi.normalize();
      for (int i = 0; i < n; ++i) {
        const double mode =
            a * std::cos(omega * grid.nodes[i]) + b * std::sin(omega * grid.nodes[i]);
        u.row(i) += mode * phi.transpose();
      }
    }
    const double trace_sq = u.row(0).squaredNorm();
    double norm_sq = 0.0, deriv_sq = 0.0, form_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      norm_sq += grid.weights[i] * u.row(i).squaredNorm();
      form_sq += grid.weights[i] * u.row(i).dot(u.row(i) * l.matrix().transpose());
    }
    for (int i = 0; i + 1 < n; ++i) {
      deriv_sq += grid.spacing *
                  ((u.row(i + 1) - u.row(i)) / grid.spacing).squaredNorm();
    }
    ratio_trace = std::max(
        ratio_trace, trace_sq / (4.0 * (norm_sq + deriv_sq + form_sq)));
  }
  report.add_residual("trace_bound_ratio_max", ratio_trace, 1.0 + eps_h);

  report.finalize();
  report.elapsed_seconds = seconds_since(start);
  return report;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "resolvent-kernel",   "krein-formula",       "projection-kernel",
      "resolvent-spectrum", "projection-spectrum", "weidmann-pairing",
      "boundary-bounds"};
  return names;
}

CheckReport run_check(const std::string& check_name, const CheckParams& p) {
  auto theta_alpha = [&]() {
    if (p.theta) return theta_to_alpha(*p.theta);
    if (p.alpha) return alpha_to_theta(*p.alpha);
    throw InvalidArgumentError("check '" + check_name +
                               "' requires theta or alpha");
  };
  auto z_value = [&]() {
    if (!p.z) {
      throw InvalidArgumentError("check '" + check_name + "' requires z");
    }
    return *p.z;
  };

  if (check_name == "resolvent-kernel") {
    return check_resolvent_kernel(p.make_fiber(), p.make_grid(), z_value());
  }
  if (check_name == "krein-formula") {
    return check_krein_formula(p.make_fiber(), p.make_grid(), z_value());
  }
  if (check_name == "projection-kernel") {
    const Grid grid = p.make_grid();
    const auto window =
        p.subwindow ? *p.subwindow : std::make_pair(0.5, grid.t_max / 6.0);
    return check_projection_kernel(p.make_fiber(), grid, theta_alpha(), window);
  }
  if (check_name == "resolvent-spectrum") {
    return check_resolvent_diff_spectrum(p.make_fiber(), p.make_grid(), z_value());
  }
  if (check_name == "projection-spectrum") {
    return check_projection_diff_spectrum(p.make_fiber(), p.make_grid(),
                                          theta_alpha());
  }
  if (check_name == "weidmann-pairing") {
    return check_weidmann_pairing_trials(p.seed, p.n_samples);
  }
  if (check_name == "boundary-bounds") {
    return check_boundary_bounds(p.make_fiber(), p.make_grid(), p.n_samples,
                                 p.seed);
  }
  throw InvalidArgumentError("unknown check: " + check_name);
}

SweepResult run_sweep(const std::string& check_name, const CheckParams& base,
                      const std::string& parameter_name,
                      const std::vector<double>& schedule) {
  if (schedule.size() < 2) {
    throw InvalidArgumentError(
        "run_sweep: schedule needs at least two rows (slope undefined)");
  }
  if (parameter_name != "n_points" && parameter_name != "t_max") {
    throw InvalidArgumentError("run_sweep: parameter must be n_points or t_max");
  }

  SweepResult sweep;
  sweep.check_name = check_name;
  sweep.parameter_name = parameter_name;
  for (double value : schedule) {
    CheckParams p = base;
    if (parameter_name == "n_points") {
      p.n_points = static_cast<int>(std::lround(value));
    } else {
      // t_max refinement at fixed spacing.
      p.t_max = value;
      p.n_points = static_cast<int>(
          std::lround(base.n_points * value / base.t_max));
    }
    const CheckReport report = run_check(check_name, p);
    if (report.residuals.empty()) {
      throw NumericDomainError("run_sweep: check produced no residuals");
    }
    sweep.rows.push_back(SweepRow{value, report.residuals.front().value});
  }
  std::sort(sweep.rows.begin(), sweep.rows.end(),
            [](const SweepRow& a, const SweepRow& b) {
              return a.parameter < b.parameter;
            });

  // Least-squares slope of log(residual) against log(parameter).
  const int k = static_cast<int>(sweep.rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& row : sweep.rows) {
    if (!(row.residual > 0.0) || !std::isfinite(row.residual)) {
      throw NumericDomainError("run_sweep: nonpositive residual, slope undefined");
    }
    const double x = std::log(row.parameter), y = std::log(row.residual);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  sweep.observed_order = (k * sxy - sx * sy) / (k * sxx - sx * sx);

  if (check_name == "resolvent-kernel" && parameter_name == "n_points") {
    sweep.expected_band = std::make_pair(-2.5, -1.5);
  } else if (check_name == "projection-kernel" && parameter_name == "t_max") {
    sweep.expected_band = std::make_pair(-1.5, -0.5);
  }
  sweep.passed = !sweep.expected_band ||
                 (sweep.observed_order >= sweep.expected_band->first &&
                  sweep.observed_order <= sweep.expected_band->second);
  return sweep;
}

double eigenvalue_fill_fraction(const std::vector<double>& eigenvalues) {
  if (eigenvalues.empty()) return 0.0;
  int covered = 0, total = 0;
  for (int k = -20; k <= 20; ++k) {
    const double mesh = 0.05 * k;
    ++total;
    for (double ev : eigenvalues) {
      if (std::abs(ev - mesh) <= 0.05) {
        ++covered;
        break;
      }
    }
  }
  return static_cast<double>(covered) / total;
}

}  // namespace kreinlab
