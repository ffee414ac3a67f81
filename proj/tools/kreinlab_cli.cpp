// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Builds a run configuration from an optional
// config file plus flag overrides, hands it to the kreinlab C API, and
// writes the JSON/CSV outputs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kreinlab/capi.h"

namespace {

using ordered_json = nlohmann::ordered_json;

struct Flags {
  std::string config_path;
  std::string check;
  std::string fiber;
  std::string fiber_matrix;
  std::optional<double> z, theta, alpha, tmax;
  std::optional<int> n, samples;
  std::optional<long long> seed;
  std::string subwindow;
  std::string sweep_param;
  std::string sweep_values;
  std::string what;
  std::string out;
  std::string format;
};

void add_common_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "Config file (JSON or key=value)");
  cmd->add_option("--check", f.check, "Check name");
  cmd->add_option("--fiber", f.fiber, "Fiber eigenvalues, comma separated");
  cmd->add_option("--fiber-matrix", f.fiber_matrix,
                  "Fiber matrix, row-major comma separated");
  cmd->add_option("--z", f.z, "Spectral point z");
  cmd->add_option("--theta", f.theta, "Resolvent-side level theta in (0,1)");
  cmd->add_option("--alpha", f.alpha, "Operator-side level alpha > 0");
  cmd->add_option("--n", f.n, "Number of grid points");
  cmd->add_option("--tmax", f.tmax, "Half-line truncation T");
  cmd->add_option("--seed", f.seed, "Random seed");
  cmd->add_option("--samples", f.samples, "Number of random samples");
  cmd->add_option("--subwindow", f.subwindow, "Comparison box 'lo,hi'");
  cmd->add_option("--out", f.out, "Output file (stdout when absent)");
  cmd->add_option("--format", f.format, "json or csv");
}

std::vector<double> split_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

// Merge flag values over the config file, key by key. JSON files are
// merged structurally; flat files get override lines appended (the flat
// parser applies them last).
std::string build_config_text(const Flags& f) {
  std::string file_text;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) {
      throw std::runtime_error("cannot open config file: " + f.config_path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    file_text = buf.str();
  }

  const auto first = file_text.find_first_not_of(" \t\r\n");
  const bool json_file = first != std::string::npos && file_text[first] == '{';

  if (json_file) {
    ordered_json j = ordered_json::parse(file_text);
    if (!f.check.empty()) j["check"] = f.check;
    if (f.n) j["grid"]["n_points"] = *f.n;
    if (f.tmax) j["grid"]["t_max"] = *f.tmax;
    if (!f.fiber.empty()) j["fiber"] = ordered_json{{"eigenvalues", split_doubles(f.fiber)}};
    if (!f.fiber_matrix.empty()) {
      j["fiber"] = ordered_json{{"matrix", split_doubles(f.fiber_matrix)}};
    }
    if (f.z) j["parameter"]["z"] = *f.z;
    if (f.theta) j["parameter"]["theta"] = *f.theta;
    if (f.alpha) j["parameter"]["alpha"] = *f.alpha;
    if (!f.subwindow.empty()) j["subwindow"] = split_doubles(f.subwindow);
    if (!f.sweep_param.empty()) j["sweep"]["parameter"] = f.sweep_param;
    if (!f.sweep_values.empty()) j["sweep"]["values"] = split_doubles(f.sweep_values);
    if (f.seed) j["seed"] = *f.seed;
    if (f.samples) j["samples"] = *f.samples;
    if (!f.what.empty()) j["what"] = f.what;
    if (!f.out.empty()) j["output"]["path"] = f.out;
    if (!f.format.empty()) j["output"]["format"] = f.format;
    return j.dump(2);
  }

  std::string text = file_text;
  if (!text.empty() && text.back() != '\n') text += "\n";
  auto append = [&text](const std::string& key, const std::string& value) {
    if (!value.empty()) text += key + " = " + value + "\n";
  };
  append("check", f.check);
  if (f.n) append("n", std::to_string(*f.n));
  if (f.tmax) append("tmax", std::to_string(*f.tmax));
  append("fiber", f.fiber);
  append("fiber_matrix", f.fiber_matrix);
  auto append_num = [&text](const std::string& key, std::optional<double> v) {
    if (v) {
      std::ostringstream os;
      os.precision(17);
      os << *v;
      text += key + " = " + os.str() + "\n";
    }
  };
  append_num("z", f.z);
  append_num("theta", f.theta);
  append_num("alpha", f.alpha);
  append("subwindow", f.subwindow);
  append("sweep_param", f.sweep_param);
  append("sweep_values", f.sweep_values);
  if (f.seed) append("seed", std::to_string(*f.seed));
  if (f.samples) append("samples", std::to_string(*f.samples));
  append("what", f.what);
  append("out", f.out);
  append("format", f.format);
  return text;
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  out << content;
  return 0;
}

// Residual table for verify's csv format, derived from the JSON report.
std::string report_csv(const std::string& report_json) {
  const ordered_json j = ordered_json::parse(report_json);
  std::string out = "residual,value\n";
  for (const auto& [name, value] : j["residuals"].items()) {
    out += name + "," + value.dump() + "\n";
  }
  return out;
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { klab_string_free(ptr); }
};

int run_verify(klab_session* session, const Flags& flags) {
  const std::string config = build_config_text(flags);
  OwnedString report;
  const klab_status status = klab_verify(session, config.c_str(), &report.ptr);
  if (status == KLAB_BAD_CONFIG || status == KLAB_NUMERIC_ERROR) {
    std::cerr << "error: " << klab_last_error(session) << "\n";
    return status;
  }
  const std::string text = flags.format == "csv" ? report_csv(report.ptr)
                                                 : std::string(report.ptr);
  const int io = write_output(flags.out, text);
  if (io != 0) return io;
  if (!flags.out.empty()) {
    const ordered_json j = ordered_json::parse(std::string(report.ptr));
    std::cerr << j["check_name"].get<std::string>() << ": "
              << (status == KLAB_OK ? "PASS" : "FAIL") << " -> " << flags.out
              << "\n";
  }
  return status;
}

int run_sweep_cmd(klab_session* session, const Flags& flags) {
  const std::string config = build_config_text(flags);
  OwnedString report, rows;
  const klab_status status =
      klab_sweep(session, config.c_str(), &report.ptr, &rows.ptr);
  if (status == KLAB_BAD_CONFIG || status == KLAB_NUMERIC_ERROR) {
    std::cerr << "error: " << klab_last_error(session) << "\n";
    return status;
  }
  const std::string text =
      flags.format == "csv" ? std::string(rows.ptr) : std::string(report.ptr);
  const int io = write_output(flags.out, text);
  if (io != 0) return io;
  if (!flags.out.empty()) {
    const ordered_json j = ordered_json::parse(std::string(report.ptr));
    std::cerr << "sweep " << j["check_name"].get<std::string>()
              << ": observed order " << j["observed_order"].dump() << ", "
              << (status == KLAB_OK ? "PASS" : "FAIL") << " -> " << flags.out
              << "\n";
  }
  return status;
}

int run_dump_cmd(klab_session* session, const Flags& flags) {
  const std::string config = build_config_text(flags);
  OwnedString csv;
  const klab_status status = klab_dump(session, config.c_str(), &csv.ptr);
  if (status != KLAB_OK) {
    std::cerr << "error: " << klab_last_error(session) << "\n";
    return status;
  }
  return write_output(flags.out, csv.ptr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for half-line Neumann/Dirichlet operator "
               "differences, Krein-type resolvent formulas and Hankel spectra"};
  app.require_subcommand(1);

  Flags verify_flags, sweep_flags, dump_flags;
  CLI::App* verify = app.add_subcommand("verify", "Run one check");
  add_common_flags(verify, verify_flags);
  CLI::App* sweep = app.add_subcommand("sweep", "Run a refinement sweep");
  add_common_flags(sweep, sweep_flags);
  sweep->add_option("--param", sweep_flags.sweep_param,
                    "Refinement parameter: n_points or t_max");
  sweep->add_option("--values", sweep_flags.sweep_values,
                    "Comma-separated schedule");
  CLI::App* dump = app.add_subcommand("dump", "Emit kernels or spectra as CSV");
  add_common_flags(dump, dump_flags);
  dump->add_option("--what", dump_flags.what,
                   "kernel | spectrum | projection-kernel | hankel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  klab_session* session = klab_session_new();
  int code = 2;
  try {
    if (verify->parsed()) code = run_verify(session, verify_flags);
    else if (sweep->parsed()) code = run_sweep_cmd(session, sweep_flags);
    else if (dump->parsed()) code = run_dump_cmd(session, dump_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  }
  klab_session_free(session);
  return code;
}
