// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kreinlab/checks.hpp"

namespace kreinlab {

struct SweepSpec {
  std::string parameter;  // "n_points" or "t_max"
  std::vector<double> values;
};

/// One reproducible run: grid, fiber, spectral parameter, check name,
/// optional sweep schedule, seed and output destination.
struct RunConfig {
  CheckParams params;
  std::string check;
  std::optional<SweepSpec> sweep;
  std::string dump_what;  // kernel | spectrum | projection-kernel | hankel
  std::string out_path;   // empty -> stdout
  std::string format = "json";

  /// Validates cross-field rules (exactly one of z/theta/alpha as the
  /// check requires, ranges, nonnegative fiber). Throws
  /// InvalidArgumentError naming the offending key.
  void validate_for_check() const;
  void validate_for_dump() const;
};

/// Accepts canonical JSON or a flat key=value text ('#' comments).
/// Flat keys: check, n, tmax, fiber, fiber_matrix, z, theta, alpha,
/// seed, samples, sweep_param, sweep_values, subwindow, what, out, format.
RunConfig parse_config(const std::string& text);

/// Canonical JSON serialization; parse(canonical_json(c)) round-trips.
std::string canonical_json(const RunConfig& config, int indent = 2);

/// CSV for the object named by config.dump_what: kernel and
/// projection-kernel emit (t, tau, fiber_row, fiber_col, value_re,
/// value_im) rows; spectrum emits the FD difference eigenvalues (z ->
/// resolvent difference, theta/alpha -> projection difference); hankel
/// emits the eigenvalues of the discretized sin-kernel operator.
std::string run_dump(const RunConfig& config);

}  // namespace kreinlab
