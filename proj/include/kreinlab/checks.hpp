// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kreinlab/kernels.hpp"

namespace kreinlab {

struct ResidualEntry {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
};

/// Structured result of one verification run. passed is true iff every
/// residual is within its own tolerance; the report-level tolerance is
/// the primary (first) residual's.
struct CheckReport {
  std::string check_name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ResidualEntry> residuals;
  std::vector<std::pair<std::string, std::vector<double>>> spectra;
  bool passed = false;
  double tolerance = 0.0;
  double elapsed_seconds = 0.0;

  void add_param(const std::string& key, const std::string& value);
  void add_param(const std::string& key, double value);
  void add_residual(const std::string& name, double value, double tolerance);
  void finalize();
};

struct SweepRow {
  double parameter = 0.0;
  double residual = 0.0;
};

/// Residual rows over a refinement schedule plus the log-log
/// least-squares slope.
struct SweepResult {
  std::string check_name;
  std::string parameter_name;  // "n_points" or "t_max"
  std::vector<SweepRow> rows;  // sorted by parameter
  double observed_order = 0.0;
  std::optional<std::pair<double, double>> expected_band;
  bool passed = false;
};

/// Parameter bag shared by the named checks and the sweep driver.
struct CheckParams {
  int n_points = 800;
  double t_max = 30.0;
  std::vector<double> fiber_eigenvalues = {0.0};
  std::optional<Eigen::MatrixXd> fiber_matrix;
  std::optional<double> z;
  std::optional<double> theta;
  std::optional<double> alpha;
  std::optional<std::pair<double, double>> subwindow;
  std::uint64_t seed = 1;
  int n_samples = 100;

  FiberOperator make_fiber() const;
  Grid make_grid() const;
};

/// (H_N - z)^(-1) - (H_D - z)^(-1) of the finite-difference Kronecker
/// sums, through their eigendecompositions. Real z < min sigma(L).
Eigen::MatrixXd fd_resolvent_difference(const FiberOperator& l,
                                        const Grid& grid, double z);

/// 1_(-inf,alpha)(H_N) - 1_(-inf,alpha)(H_D) of the finite-difference
/// Kronecker sums.
Eigen::MatrixXd fd_projection_difference(const FiberOperator& l,
                                         const Grid& grid, double alpha);

/// FD resolvent difference against the discretized closed-form kernel,
/// relative spectral norm. Real z < min sigma(L).
CheckReport check_resolvent_kernel(const FiberOperator& l, const Grid& grid,
                                   double z);

/// FD resolvent difference against the S Lambda^(-1) S* assembly, plus
/// the exact assembly-vs-kernel identity at 1e-12.
CheckReport check_krein_formula(const FiberOperator& l, const Grid& grid,
                                double z);

/// FD projection difference, rescaled to kernel units, against the
/// closed-form projection kernel on a compact subwindow; also the exact
/// resolvent-side / operator-side transformation rule.
CheckReport check_projection_kernel(const FiberOperator& l, const Grid& grid,
                                    const ThetaAlpha& ta,
                                    std::pair<double, double> subwindow);

/// Nonzero spectrum of the FD resolvent difference against the mapped
/// fiber eigenvalues (with multiplicity) and against the separated form.
CheckReport check_resolvent_diff_spectrum(const FiberOperator& l,
                                          const Grid& grid, double z);

/// Spectral dichotomy of the FD projection difference: norm bound, zero
/// operator / zero cluster branches, symmetry pairing, fill metric.
CheckReport check_projection_diff_spectrum(const FiberOperator& l,
                                           const Grid& grid,
                                           const ThetaAlpha& ta);

/// Pairing identity for spectral projections of a Kronecker sum:
/// <1_(-inf,alpha)(T1 (+) T2)(f1 (x) f2), g1 (x) g2> equals the fiber sum
/// over eigenpairs of T2.
CheckReport check_weidmann_pairing(const Eigen::MatrixXd& t1,
                                   const Eigen::MatrixXd& t2, double alpha,
                                   const Eigen::VectorXd& f1,
                                   const Eigen::VectorXd& g1,
                                   const Eigen::VectorXd& f2,
                                   const Eigen::VectorXd& g2);

/// Seeded random instances of the pairing identity; reports the worst
/// absolute error.
CheckReport check_weidmann_pairing_trials(std::uint64_t seed, int n_trials);

/// Trace bound |u(t_1)|^2 <= 4 (1+eps_h) (||u||^2 + ||u'||^2 + ||L^(1/2)u||^2)
/// for seeded band-limited u, and the solution-operator norm bound
/// ||S(-1)phi||^2 <= (1/2)(1+eps_h)||phi||^2, with eps_h = 10 h.
CheckReport check_boundary_bounds(const FiberOperator& l, const Grid& grid,
                                  int n_samples, std::uint64_t seed);

/// All check names known to run_check / run_sweep.
const std::vector<std::string>& check_names();

CheckReport run_check(const std::string& check_name, const CheckParams& p);

/// Runs the named check across the schedule (n_points at fixed t_max, or
/// t_max at fixed spacing) and fits the log-log slope of the primary
/// residual.
SweepResult run_sweep(const std::string& check_name, const CheckParams& base,
                      const std::string& parameter_name,
                      const std::vector<double>& schedule);

/// Fill metric: fraction of a uniform 0.05-mesh of [-1, 1] within 0.05
/// of some eigenvalue.
double eigenvalue_fill_fraction(const std::vector<double>& eigenvalues);

}  // namespace kreinlab
