// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/capi.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "kreinlab/config.hpp"
#include "kreinlab/report.hpp"

struct klab_session {
  std::string last_error;
};

namespace {

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
klab_status guarded(klab_session* session, Fn&& fn) {
  if (!session) return KLAB_BAD_CONFIG;
  session->last_error.clear();
  try {
    return fn();
  } catch (const kreinlab::InvalidArgumentError& e) {
    session->last_error = e.what();
    return KLAB_BAD_CONFIG;
  } catch (const kreinlab::NumericDomainError& e) {
    session->last_error = e.what();
    return KLAB_NUMERIC_ERROR;
  } catch (const std::exception& e) {
    session->last_error = e.what();
    return KLAB_NUMERIC_ERROR;
  }
}

}  // namespace

extern "C" {

klab_session* klab_session_new(void) { return new klab_session(); }

void klab_session_free(klab_session* session) { delete session; }

const char* klab_last_error(const klab_session* session) {
  return session ? session->last_error.c_str() : "null session";
}

klab_status klab_verify(klab_session* session, const char* config_text,
                        char** report_json) {
  return guarded(session, [&]() -> klab_status {
    if (!config_text || !report_json) {
      throw kreinlab::InvalidArgumentError("null argument");
    }
    const kreinlab::RunConfig config = kreinlab::parse_config(config_text);
    config.validate_for_check();
    const kreinlab::CheckReport report =
        kreinlab::run_check(config.check, config.params);
    *report_json = copy_out(kreinlab::check_report_to_json(report));
    return report.passed ? KLAB_OK : KLAB_CHECK_FAILED;
  });
}

klab_status klab_sweep(klab_session* session, const char* config_text,
                       char** report_json, char** rows_csv) {
  return guarded(session, [&]() -> klab_status {
    if (!config_text || !report_json || !rows_csv) {
      throw kreinlab::InvalidArgumentError("null argument");
    }
    const kreinlab::RunConfig config = kreinlab::parse_config(config_text);
    config.validate_for_check();
    if (!config.sweep || config.sweep->parameter.empty()) {
      throw kreinlab::InvalidArgumentError(
          "sweep requires sweep_param and sweep_values");
    }
    const kreinlab::SweepResult sweep =
        kreinlab::run_sweep(config.check, config.params,
                            config.sweep->parameter, config.sweep->values);
    *report_json = copy_out(kreinlab::sweep_result_to_json(sweep));
    *rows_csv = copy_out(kreinlab::sweep_result_to_csv(sweep));
    return sweep.passed ? KLAB_OK : KLAB_CHECK_FAILED;
  });
}

klab_status klab_dump(klab_session* session, const char* config_text,
                      char** csv) {
  return guarded(session, [&]() -> klab_status {
    if (!config_text || !csv) {
      throw kreinlab::InvalidArgumentError("null argument");
    }
    const kreinlab::RunConfig config = kreinlab::parse_config(config_text);
    *csv = copy_out(kreinlab::run_dump(config));
    return KLAB_OK;
  });
}

void klab_string_free(char* s) { std::free(s); }

const char* klab_version(void) { return "0.1.0"; }

}  // extern "C"
