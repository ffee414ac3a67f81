// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "kreinlab/report.hpp"

namespace kreinlab {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw InvalidArgumentError("config key '" + key + "' has a malformed number: '" +
                               text + "'");
  }
}

std::vector<double> parse_number_list(const std::string& key, const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    values.push_back(parse_number(key, item));
  }
  if (values.empty()) {
    throw InvalidArgumentError("config key '" + key + "' needs at least one value");
  }
  return values;
}

Eigen::MatrixXd matrix_from_row_major(const std::string& key,
                                      const std::vector<double>& entries) {
  const int dim = static_cast<int>(std::lround(std::sqrt(double(entries.size()))));
  if (dim < 1 || static_cast<std::size_t>(dim) * dim != entries.size()) {
    throw InvalidArgumentError("config key '" + key +
                               "' must hold a square row-major matrix");
  }
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = entries[i * dim + j];
  return m;
}

void apply_flat_key(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "check") {
    c.check = value;
  } else if (key == "n" || key == "n_points") {
    c.params.n_points = static_cast<int>(std::lround(parse_number(key, value)));
  } else if (key == "tmax" || key == "t_max") {
    c.params.t_max = parse_number(key, value);
  } else if (key == "fiber") {
    c.params.fiber_eigenvalues = parse_number_list(key, value);
    c.params.fiber_matrix.reset();
  } else if (key == "fiber_matrix") {
    c.params.fiber_matrix = matrix_from_row_major(key, parse_number_list(key, value));
  } else if (key == "z") {
    c.params.z = parse_number(key, value);
  } else if (key == "theta") {
    c.params.theta = parse_number(key, value);
  } else if (key == "alpha") {
    c.params.alpha = parse_number(key, value);
  } else if (key == "seed") {
    c.params.seed = static_cast<std::uint64_t>(std::llround(parse_number(key, value)));
  } else if (key == "samples") {
    c.params.n_samples = static_cast<int>(std::lround(parse_number(key, value)));
  } else if (key == "subwindow") {
    const auto values = parse_number_list(key, value);
    if (values.size() != 2) {
      throw InvalidArgumentError("config key 'subwindow' needs exactly two values");
    }
    c.params.subwindow = std::make_pair(values[0], values[1]);
  } else if (key == "sweep_param") {
    if (!c.sweep) c.sweep = SweepSpec{};
    c.sweep->parameter = value;
  } else if (key == "sweep_values") {
    if (!c.sweep) c.sweep = SweepSpec{};
    c.sweep->values = parse_number_list(key, value);
  } else if (key == "what") {
    c.dump_what = value;
  } else if (key == "out") {
    c.out_path = value;
  } else if (key == "format") {
    c.format = value;
  } else {
    throw InvalidArgumentError("unknown config key '" + key + "'");
  }
}

RunConfig parse_flat(const std::string& text) {
  RunConfig c;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgumentError("config line is not 'key = value': '" + line + "'");
    }
    apply_flat_key(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return c;
}

RunConfig parse_json_config_impl(const ordered_json& j);

RunConfig parse_json_config(const std::string& text) {
  try {
    return parse_json_config_impl(ordered_json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(std::string("config is not valid JSON: ") + e.what());
  }
}

RunConfig parse_json_config_impl(const ordered_json& j) {
  RunConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "check") {
      c.check = value.get<std::string>();
    } else if (key == "grid") {
      if (value.contains("n_points")) c.params.n_points = value["n_points"].get<int>();
      if (value.contains("t_max")) c.params.t_max = value["t_max"].get<double>();
      for (const auto& [gk, gv] : value.items()) {
        (void)gv;
        if (gk != "n_points" && gk != "t_max") {
          throw InvalidArgumentError("unknown config key 'grid." + gk + "'");
        }
      }
    } else if (key == "fiber") {
      if (value.contains("eigenvalues")) {
        c.params.fiber_eigenvalues = value["eigenvalues"].get<std::vector<double>>();
        c.params.fiber_matrix.reset();
      } else if (value.contains("matrix")) {
        c.params.fiber_matrix = matrix_from_row_major(
            "fiber.matrix", value["matrix"].get<std::vector<double>>());
      } else {
        throw InvalidArgumentError("config key 'fiber' needs eigenvalues or matrix");
      }
    } else if (key == "parameter") {
      for (const auto& [pk, pv] : value.items()) {
        if (pk == "z") c.params.z = pv.get<double>();
        else if (pk == "theta") c.params.theta = pv.get<double>();
        else if (pk == "alpha") c.params.alpha = pv.get<double>();
        else throw InvalidArgumentError("unknown config key 'parameter." + pk + "'");
      }
    } else if (key == "subwindow") {
      const auto values = value.get<std::vector<double>>();
      if (values.size() != 2) {
        throw InvalidArgumentError("config key 'subwindow' needs exactly two values");
      }
      c.params.subwindow = std::make_pair(values[0], values[1]);
    } else if (key == "sweep") {
      SweepSpec spec;
      if (value.contains("parameter")) spec.parameter = value["parameter"].get<std::string>();
      if (value.contains("values")) spec.values = value["values"].get<std::vector<double>>();
      c.sweep = spec;
    } else if (key == "seed") {
      c.params.seed = value.get<std::uint64_t>();
    } else if (key == "samples") {
      c.params.n_samples = value.get<int>();
    } else if (key == "what") {
      c.dump_what = value.get<std::string>();
    } else if (key == "output") {
      if (value.contains("path")) c.out_path = value["path"].get<std::string>();
      if (value.contains("format")) c.format = value["format"].get<std::string>();
    } else {
      throw InvalidArgumentError("unknown config key '" + key + "'");
    }
  }
  return c;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  const std::string trimmed = trim(text);
  if (trimmed.empty()) {
    throw InvalidArgumentError("config is empty");
  }
  if (trimmed.front() == '{') return parse_json_config(trimmed);
  return parse_flat(trimmed);
}

std::string canonical_json(const RunConfig& config, int indent) {
  ordered_json j;
  if (!config.check.empty()) j["check"] = config.check;
  j["grid"] = ordered_json{{"n_points", config.params.n_points},
                           {"t_max", config.params.t_max}};
  if (config.params.fiber_matrix) {
    const Eigen::MatrixXd& m = *config.params.fiber_matrix;
    std::vector<double> entries;
    entries.reserve(m.size());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index k = 0; k < m.cols(); ++k) entries.push_back(m(i, k));
    j["fiber"] = ordered_json{{"matrix", entries}};
  } else {
    j["fiber"] = ordered_json{{"eigenvalues", config.params.fiber_eigenvalues}};
  }
  ordered_json parameter = ordered_json::object();
  if (config.params.z) parameter["z"] = *config.params.z;
  if (config.params.theta) parameter["theta"] = *config.params.theta;
  if (config.params.alpha) parameter["alpha"] = *config.params.alpha;
  if (!parameter.empty()) j["parameter"] = parameter;
  if (config.params.subwindow) {
    j["subwindow"] = ordered_json::array(
        {config.params.subwindow->first, config.params.subwindow->second});
  }
  if (config.sweep) {
    j["sweep"] = ordered_json{{"parameter", config.sweep->parameter},
                              {"values", config.sweep->values}};
  }
  j["seed"] = config.params.seed;
  j["samples"] = config.params.n_samples;
  if (!config.dump_what.empty()) j["what"] = config.dump_what;
  j["output"] = ordered_json{{"path", config.out_path}, {"format", config.format}};
  return j.dump(indent) + "\n";
}

namespace {

void require_parameter(const RunConfig& c, bool needs_z, bool needs_level) {
  const bool has_z = c.params.z.has_value();
  const bool has_theta = c.params.theta.has_value();
  const bool has_alpha = c.params.alpha.has_value();
  if (needs_z) {
    if (!has_z) throw InvalidArgumentError("check '" + c.check + "' requires z");
    if (has_theta || has_alpha) {
      throw InvalidArgumentError("check '" + c.check +
                                 "' takes z only; remove theta/alpha");
    }
  } else if (needs_level) {
    if (has_z) {
      throw InvalidArgumentError("check '" + c.check +
                                 "' takes theta or alpha; remove z");
    }
    if (has_theta == has_alpha) {
      throw InvalidArgumentError("check '" + c.check +
                                 "' requires exactly one of theta, alpha");
    }
  } else if (has_z || has_theta || has_alpha) {
    throw InvalidArgumentError("check '" + c.check +
                               "' takes no spectral parameter; remove z/theta/alpha");
  }
}

void validate_common(const RunConfig& c) {
  if (c.params.n_points < 2) {
    throw InvalidArgumentError("grid.n_points must be >= 2");
  }
  if (!(c.params.t_max > 0.0)) {
    throw InvalidArgumentError("grid.t_max must be > 0");
  }
  if (!c.params.fiber_matrix) {
    for (double ev : c.params.fiber_eigenvalues) {
      if (!(ev >= 0.0)) {
        throw InvalidArgumentError("fiber eigenvalues must be >= 0");
      }
    }
  }
  if (c.params.theta && !(*c.params.theta > 0.0 && *c.params.theta < 1.0)) {
    throw InvalidArgumentError("theta must lie in (0,1)");
  }
  if (c.params.alpha && !(*c.params.alpha > 0.0)) {
    throw InvalidArgumentError("alpha must be > 0");
  }
  if (c.params.n_samples < 1) {
    throw InvalidArgumentError("samples must be >= 1");
  }
  if (c.format != "json" && c.format != "csv") {
    throw InvalidArgumentError("format must be json or csv");
  }
}

}  // namespace

void RunConfig::validate_for_check() const {
  validate_common(*this);
  const auto& names = check_names();
  if (std::find(names.begin(), names.end(), check) == names.end()) {
    throw InvalidArgumentError("unknown check: '" + check + "'");
  }
  if (check == "resolvent-kernel" || check == "krein-formula" ||
      check == "resolvent-spectrum") {
    require_parameter(*this, true, false);
  } else if (check == "projection-kernel" || check == "projection-spectrum") {
    require_parameter(*this, false, true);
  } else {
    require_parameter(*this, false, false);
  }
}

void RunConfig::validate_for_dump() const {
  validate_common(*this);
  if (dump_what == "kernel") {
    if (!params.z) throw InvalidArgumentError("dump kernel requires z");
  } else if (dump_what == "projection-kernel") {
    if (params.theta.has_value() == params.alpha.has_value()) {
      throw InvalidArgumentError(
          "dump projection-kernel requires exactly one of theta, alpha");
    }
  } else if (dump_what == "spectrum") {
    const bool has_level = params.theta.has_value() || params.alpha.has_value();
    if (params.z.has_value() == has_level) {
      throw InvalidArgumentError(
          "dump spectrum requires z (resolvent difference) or theta/alpha "
          "(projection difference)");
    }
  } else if (dump_what == "hankel") {
    // grid only
  } else {
    throw InvalidArgumentError("unknown dump target '" + dump_what +
                               "' (kernel, spectrum, projection-kernel, hankel)");
  }
}

std::string run_dump(const RunConfig& config) {
  config.validate_for_dump();
  const Grid grid = config.params.make_grid();
  if (config.dump_what == "hankel") {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        hankel_k(grid).real_checked(), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = solver.eigenvalues();
    return spectrum_to_csv({ev.data(), ev.data() + ev.size()});
  }
  const FiberOperator l = config.params.make_fiber();
  if (config.dump_what == "kernel") {
    return kernel_to_csv(resolvent_diff_kernel(l, *config.params.z), grid);
  }
  if (config.dump_what == "projection-kernel") {
    const ThetaAlpha ta = config.params.theta ? theta_to_alpha(*config.params.theta)
                                              : alpha_to_theta(*config.params.alpha);
    return kernel_to_csv(projection_diff_kernel(l, ta.alpha), grid);
  }
  // spectrum
  Eigen::MatrixXd diff;
  if (config.params.z) {
    diff = fd_resolvent_difference(l, grid, *config.params.z);
  } else {
    const ThetaAlpha ta = config.params.theta ? theta_to_alpha(*config.params.theta)
                                              : alpha_to_theta(*config.params.alpha);
    diff = fd_projection_difference(l, grid, ta.alpha);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(diff, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  return spectrum_to_csv({ev.data(), ev.data() + ev.size()});
}

}  // namespace kreinlab
