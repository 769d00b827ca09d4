// Copyright 2026 The qdsqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the quasi-deterministic secure communication simulator.
 *
 * Objects are opaque handles created and destroyed through this API. Every
 * fallible call returns a qdsqc_status; on failure a description of the last
 * error on the calling thread is available from qdsqc_last_error(). Strings
 * returned through `char**` out-parameters are owned by the caller and must
 * be released with qdsqc_string_free(). */
#ifndef QDSQC_QDSQC_H_
#define QDSQC_QDSQC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(QDSQC_BUILDING_LIBRARY)
#define QDSQC_API __attribute__((visibility("default")))
#else
#define QDSQC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qdsqc_status {
  QDSQC_OK = 0,
  QDSQC_ERR_INVALID_ARGUMENT = 1,
  QDSQC_ERR_NOT_NORMALIZED = 2,
  QDSQC_ERR_ANGLE_OUT_OF_RANGE = 3,
  QDSQC_ERR_DEGENERATE_PROJECTION = 4,
  QDSQC_ERR_EMPTY_CHECK_SET = 5,
  QDSQC_ERR_PAD_SHORTFALL = 6,
  QDSQC_ERR_LEDGER_MODE_MISMATCH = 7,
  QDSQC_ERR_UNKNOWN_KEY = 8,
  QDSQC_ERR_IO = 9,
  QDSQC_ERR_INTERNAL = 10
} qdsqc_status;

typedef enum qdsqc_session_status {
  QDSQC_SESSION_DELIVERED = 0,
  QDSQC_SESSION_ABORTED_EVE_DETECTED = 1,
  QDSQC_SESSION_ABORTED_PAD_SHORTFALL = 2
} qdsqc_session_status;

typedef struct qdsqc_config qdsqc_config;
typedef struct qdsqc_session qdsqc_session;
typedef struct qdsqc_case_report qdsqc_case_report;

QDSQC_API const char* qdsqc_version(void);
QDSQC_API const char* qdsqc_status_string(qdsqc_status status);
/* Message of the most recent failure on this thread; empty after success. */
QDSQC_API const char* qdsqc_last_error(void);
QDSQC_API void qdsqc_string_free(char* s);

/* Configuration: a flat key/value store. Keys follow the config file format
 * documented in the README; later assignments replace earlier ones. */
QDSQC_API qdsqc_status qdsqc_config_create(qdsqc_config** out);
QDSQC_API void qdsqc_config_destroy(qdsqc_config* config);
QDSQC_API qdsqc_status qdsqc_config_set(qdsqc_config* config, const char* key, const char* value);
QDSQC_API qdsqc_status qdsqc_config_load_file(qdsqc_config* config, const char* path);
QDSQC_API qdsqc_status qdsqc_config_parse_text(qdsqc_config* config, const char* text);
/* Copies the value of `key` into *out (caller frees). QDSQC_ERR_UNKNOWN_KEY
 * if the key was never set. */
QDSQC_API qdsqc_status qdsqc_config_get(const qdsqc_config* config, const char* key, char** out);
/* Number of accepted keys and the i-th key name (static storage). */
QDSQC_API size_t qdsqc_config_key_count(void);
QDSQC_API const char* qdsqc_config_key_name(size_t index);

/* Runs one session. The message comes from the `message` key when set and
 * is otherwise generated from the seed. */
QDSQC_API qdsqc_status qdsqc_session_run(const qdsqc_config* config, qdsqc_session** out);
QDSQC_API void qdsqc_session_destroy(qdsqc_session* session);
QDSQC_API qdsqc_session_status qdsqc_session_status_of(const qdsqc_session* session);
QDSQC_API double qdsqc_session_check_error(const qdsqc_session* session);
QDSQC_API size_t qdsqc_session_message_bits(const qdsqc_session* session);
/* Hamming distance between sent and delivered message; SIZE_MAX if aborted. */
QDSQC_API size_t qdsqc_session_bit_errors(const qdsqc_session* session);
QDSQC_API qdsqc_status qdsqc_session_transcript_json(const qdsqc_session* session, char** out);
/* Measured efficiency; fails unless the session delivered. */
QDSQC_API qdsqc_status qdsqc_session_eta(const qdsqc_session* session, double* out);

/* Concurrence sweep over the `grid`, `rounds` and `seed` keys. */
QDSQC_API qdsqc_status qdsqc_sweep_csv(const qdsqc_config* config, char** out);
/* Oracle vs Monte Carlo attack table over `grid`, `strategies`, `trials`,
 * `eve_angle` and `seed`. */
QDSQC_API qdsqc_status qdsqc_attack_csv(const qdsqc_config* config, char** out);

/* Case i / ii experiment; uses `case_mode`, `n`, `concurrence_r`,
 * `concurrence_d`, the adversary keys and `seed`. */
QDSQC_API qdsqc_status qdsqc_case_run(const qdsqc_config* config, qdsqc_case_report** out);
QDSQC_API void qdsqc_case_destroy(qdsqc_case_report* report);
QDSQC_API int qdsqc_case_aborted(const qdsqc_case_report* report);
QDSQC_API qdsqc_status qdsqc_case_json(const qdsqc_case_report* report, char** out);

/* Closed forms. */
QDSQC_API double qdsqc_pd_theory(double concurrence);
QDSQC_API double qdsqc_eta_theory(double concurrence);
/* basis: 'R' or 'D'; strategy: ideal, uniform, always_r, always_d,
 * fixed_angle (with fixed_angle_deg). Full interception for all but ideal. */
QDSQC_API qdsqc_status qdsqc_attack_error_oracle(double concurrence, const char* strategy,
                                                 double fixed_angle_deg, char basis, double* out);

#ifdef __cplusplus
}
#endif

#endif  // QDSQC_QDSQC_H_
