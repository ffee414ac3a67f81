// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "kreinlab/checks.hpp"

namespace kreinlab {

/// JSON with stable key order: check_name, parameters, residuals,
/// spectra, passed, tolerance, elapsed_seconds.
std::string check_report_to_json(const CheckReport& report, int indent = 2);

std::string sweep_result_to_json(const SweepResult& sweep, int indent = 2);

/// CSV rows "parameter,residual" with a header, plus a trailing
/// observed-order comment row is *not* emitted: the order lives in JSON.
std::string sweep_result_to_csv(const SweepResult& sweep);

/// Kernel dump: columns t,tau,fiber_row,fiber_col,value_re,value_im.
std::string kernel_to_csv(const SpectralKernel& kernel, const Grid& grid);

/// One eigenvalue per row under an "eigenvalue" header.
std::string spectrum_to_csv(const std::vector<double>& eigenvalues);

/// Locale-independent shortest round-trip formatting.
std::string format_double(double x);

}  // namespace kreinlab
