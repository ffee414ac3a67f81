// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/report.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

namespace kreinlab {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

namespace {

ordered_json residuals_json(const CheckReport& report) {
  ordered_json residuals = ordered_json::object();
  for (const auto& r : report.residuals) residuals[r.name] = r.value;
  return residuals;
}

}  // namespace

std::string check_report_to_json(const CheckReport& report, int indent) {
  ordered_json j;
  j["check_name"] = report.check_name;
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : report.parameters) params[key] = value;
  j["parameters"] = params;
  j["residuals"] = residuals_json(report);
  ordered_json spectra = ordered_json::object();
  for (const auto& [name, values] : report.spectra) spectra[name] = values;
  j["spectra"] = spectra;
  j["passed"] = report.passed;
  j["tolerance"] = report.tolerance;
  j["elapsed_seconds"] = report.elapsed_seconds;
  return j.dump(indent) + "\n";
}

std::string sweep_result_to_json(const SweepResult& sweep, int indent) {
  ordered_json j;
  j["check_name"] = sweep.check_name;
  j["parameter"] = sweep.parameter_name;
  ordered_json rows = ordered_json::array();
  for (const auto& row : sweep.rows) {
    rows.push_back(ordered_json{{"parameter", row.parameter},
                                {"residual", row.residual}});
  }
  j["rows"] = rows;
  j["observed_order"] = sweep.observed_order;
  if (sweep.expected_band) {
    j["expected_band"] =
        ordered_json::array({sweep.expected_band->first, sweep.expected_band->second});
  } else {
    j["expected_band"] = nullptr;
  }
  j["passed"] = sweep.passed;
  return j.dump(indent) + "\n";
}

std::string sweep_result_to_csv(const SweepResult& sweep) {
  std::string out = "parameter,residual\n";
  for (const auto& row : sweep.rows) {
    out += format_double(row.parameter);
    out += ",";
    out += format_double(row.residual);
    out += "\n";
  }
  return out;
}

std::string kernel_to_csv(const SpectralKernel& kernel, const Grid& grid) {
  const int n = grid.size();
  const int m = kernel.fiber.dim();
  std::string out = "t,tau,fiber_row,fiber_col,value_re,value_im\n";
  out.reserve(static_cast<std::size_t>(n) * n * m * m * 40 + 64);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Eigen::MatrixXcd block = kernel.evaluate(grid.nodes[i], grid.nodes[j]);
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
          out += format_double(grid.nodes[i]);
          out += ",";
          out += format_double(grid.nodes[j]);
          out += ",";
          out += std::to_string(r);
          out += ",";
          out += std::to_string(c);
          out += ",";
          out += format_double(block(r, c).real());
          out += ",";
          out += format_double(block(r, c).imag());
          out += "\n";
        }
      }
    }
  }
  return out;
}

std::string spectrum_to_csv(const std::vector<double>& eigenvalues) {
  std::string out = "eigenvalue\n";
  for (double ev : eigenvalues) {
    out += format_double(ev);
    out += "\n";
  }
  return out;
}

}  // namespace kreinlab
