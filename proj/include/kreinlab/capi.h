/* Copyright (c) the kreinlab contributors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API of the kreinlab shared library. All inputs and outputs are
 * strings: configurations are JSON (or flat key=value text), reports are
 * JSON, tabular data is CSV. Returned strings are owned by the caller
 * and must be released with klab_string_free. A session carries the last
 * error message; sessions are not thread-safe, use one per thread.
 */

#ifndef KREINLAB_CAPI_H
#define KREINLAB_CAPI_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KLAB_API __declspec(dllexport)
#else
#define KLAB_API __attribute__((visibility("default")))
#endif

/* Mirrors the CLI exit codes. */
typedef enum klab_status {
  KLAB_OK = 0,
  KLAB_CHECK_FAILED = 1,
  KLAB_BAD_CONFIG = 2,
  KLAB_NUMERIC_ERROR = 3
} klab_status;

typedef struct klab_session klab_session;

KLAB_API klab_session* klab_session_new(void);
KLAB_API void klab_session_free(klab_session* session);

/* Message for the most recent failing call on this session; empty string
 * if the last call succeeded. The pointer stays valid until the next
 * call on the session. */
KLAB_API const char* klab_last_error(const klab_session* session);

/* Runs the check named in the configuration. *report_json receives the
 * CheckReport. Returns KLAB_OK when the check passed, KLAB_CHECK_FAILED
 * when it ran but failed (the report is still produced). */
KLAB_API klab_status klab_verify(klab_session* session,
                                 const char* config_text,
                                 char** report_json);

/* Runs the sweep described in the configuration. *report_json receives
 * the sweep summary, *rows_csv the (parameter, residual) rows. Returns
 * KLAB_OK when the observed order lies in the check's declared band. */
KLAB_API klab_status klab_sweep(klab_session* session,
                                const char* config_text,
                                char** report_json, char** rows_csv);

/* Emits the object selected by the configuration's "what" field
 * (kernel | spectrum | projection-kernel | hankel) as CSV. */
KLAB_API klab_status klab_dump(klab_session* session,
                               const char* config_text, char** csv);

KLAB_API void klab_string_free(char* s);

KLAB_API const char* klab_version(void);

#ifdef __cplusplus
}
#endif

#endif /* KREINLAB_CAPI_H */
