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

#include "qdsqc/qdsqc.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "qdsqc/analysis.hpp"
#include "qdsqc/config.hpp"
#include "qdsqc/errors.hpp"
#include "qdsqc/protocol.hpp"
#include "qdsqc/transcript_json.hpp"

struct qdsqc_config {
  qdsqc::ConfigStore store;
};

struct qdsqc_session {
  qdsqc::SessionConfig config;
  qdsqc::SessionResult result;
};

struct qdsqc_case_report {
  qdsqc::CaseReport report;
};

namespace {

thread_local std::string g_last_error;

qdsqc_status to_status(qdsqc::ErrorCode code) {
  using qdsqc::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return QDSQC_ERR_INVALID_ARGUMENT;
    case ErrorCode::kNotNormalized: return QDSQC_ERR_NOT_NORMALIZED;
    case ErrorCode::kAngleOutOfRange: return QDSQC_ERR_ANGLE_OUT_OF_RANGE;
    case ErrorCode::kDegenerateProjection: return QDSQC_ERR_DEGENERATE_PROJECTION;
    case ErrorCode::kEmptyCheckSet: return QDSQC_ERR_EMPTY_CHECK_SET;
    case ErrorCode::kPadShortfall: return QDSQC_ERR_PAD_SHORTFALL;
    case ErrorCode::kLedgerModeMismatch: return QDSQC_ERR_LEDGER_MODE_MISMATCH;
    case ErrorCode::kUnknownKey: return QDSQC_ERR_UNKNOWN_KEY;
    case ErrorCode::kIo: return QDSQC_ERR_IO;
  }
  return QDSQC_ERR_INTERNAL;
}

qdsqc_status fail(qdsqc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
qdsqc_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return QDSQC_OK;
  } catch (const qdsqc::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QDSQC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QDSQC_ERR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

#define QDSQC_REQUIRE(cond, what)                              \
  do {                                                         \
    if (!(cond)) return fail(QDSQC_ERR_INVALID_ARGUMENT, what); \
  } while (0)

}  // namespace

extern "C" {

const char* qdsqc_version(void) { return "0.1.0"; }

const char* qdsqc_status_string(qdsqc_status status) {
  switch (status) {
    case QDSQC_OK: return "ok";
    case QDSQC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QDSQC_ERR_NOT_NORMALIZED: return "state not normalized";
    case QDSQC_ERR_ANGLE_OUT_OF_RANGE: return "angle out of range";
    case QDSQC_ERR_DEGENERATE_PROJECTION: return "degenerate projection";
    case QDSQC_ERR_EMPTY_CHECK_SET: return "empty check set";
    case QDSQC_ERR_PAD_SHORTFALL: return "pad shortfall";
    case QDSQC_ERR_LEDGER_MODE_MISMATCH: return "ledger mode mismatch";
    case QDSQC_ERR_UNKNOWN_KEY: return "unknown key";
    case QDSQC_ERR_IO: return "i/o error";
    case QDSQC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qdsqc_last_error(void) { return g_last_error.c_str(); }

void qdsqc_string_free(char* s) { std::free(s); }

qdsqc_status qdsqc_config_create(qdsqc_config** out) {
  QDSQC_REQUIRE(out != nullptr, "null out pointer");
  return guarded([&] { *out = new qdsqc_config(); });
}

void qdsqc_config_destroy(qdsqc_config* config) { delete config; }

qdsqc_status qdsqc_config_set(qdsqc_config* config, const char* key, const char* value) {
  QDSQC_REQUIRE(config && key && value, "null argument");
  return guarded([&] { config->store.set(key, value); });
}

qdsqc_status qdsqc_config_load_file(qdsqc_config* config, const char* path) {
  QDSQC_REQUIRE(config && path, "null argument");
  return guarded([&] { config->store.load_file(path); });
}

qdsqc_status qdsqc_config_parse_text(qdsqc_config* config, const char* text) {
  QDSQC_REQUIRE(config && text, "null argument");
  return guarded([&] { config->store.parse_text(text); });
}

qdsqc_status qdsqc_config_get(const qdsqc_config* config, const char* key, char** out) {
  QDSQC_REQUIRE(config && key && out, "null argument");
  const auto value = config->store.get(key);
  if (!value) return fail(QDSQC_ERR_UNKNOWN_KEY, std::string("key not set: ") + key);
  return guarded([&] { *out = copy_out(*value); });
}

size_t qdsqc_config_key_count(void) { return qdsqc::ConfigStore::known_keys().size(); }

const char* qdsqc_config_key_name(size_t index) {
  const auto& keys = qdsqc::ConfigStore::known_keys();
  return index < keys.size() ? keys[index].c_str() : nullptr;
}

qdsqc_status qdsqc_session_run(const qdsqc_config* config, qdsqc_session** out) {
  QDSQC_REQUIRE(config && out, "null argument");
  return guarded([&] {
    const qdsqc::RunSpec spec = config->store.resolve();
    auto session = std::make_unique<qdsqc_session>();
    session->config = spec.session;
    const qdsqc::BitVector message =
        spec.message ? *spec.message : qdsqc::generate_message(spec.session.n, spec.session.seed);
    session->result = qdsqc::run_session(session->config, message);
    *out = session.release();
  });
}

void qdsqc_session_destroy(qdsqc_session* session) { delete session; }

qdsqc_session_status qdsqc_session_status_of(const qdsqc_session* session) {
  switch (session->result.outcome.status) {
    case qdsqc::SessionStatus::kDelivered: return QDSQC_SESSION_DELIVERED;
    case qdsqc::SessionStatus::kAbortedEveDetected: return QDSQC_SESSION_ABORTED_EVE_DETECTED;
    case qdsqc::SessionStatus::kAbortedPadShortfall: return QDSQC_SESSION_ABORTED_PAD_SHORTFALL;
  }
  return QDSQC_SESSION_ABORTED_EVE_DETECTED;
}

double qdsqc_session_check_error(const qdsqc_session* session) {
  return session->result.outcome.observed_check_error;
}

size_t qdsqc_session_message_bits(const qdsqc_session* session) {
  return session->result.transcript.n;
}

size_t qdsqc_session_bit_errors(const qdsqc_session* session) {
  const auto& r = session->result;
  if (r.outcome.status != qdsqc::SessionStatus::kDelivered) {
    return std::numeric_limits<size_t>::max();
  }
  size_t errors = 0;
  for (size_t i = 0; i < r.transcript.n; ++i) errors += r.outcome.message_out[i] != r.transcript.N[i];
  return errors;
}

qdsqc_status qdsqc_session_transcript_json(const qdsqc_session* session, char** out) {
  QDSQC_REQUIRE(session && out, "null argument");
  return guarded([&] { *out = copy_out(qdsqc::session_to_json(session->config, session->result)); });
}

qdsqc_status qdsqc_session_eta(const qdsqc_session* session, double* out) {
  QDSQC_REQUIRE(session && out, "null argument");
  return guarded([&] { *out = qdsqc::eta_measured(session->result); });
}

qdsqc_status qdsqc_sweep_csv(const qdsqc_config* config, char** out) {
  QDSQC_REQUIRE(config && out, "null argument");
  return guarded([&] {
    const qdsqc::RunSpec spec = config->store.resolve();
    const auto rows = qdsqc::sweep(spec.grid, spec.rounds, spec.session.seed);
    *out = copy_out(qdsqc::sweep_csv(rows));
  });
}

qdsqc_status qdsqc_attack_csv(const qdsqc_config* config, char** out) {
  QDSQC_REQUIRE(config && out, "null argument");
  return guarded([&] {
    const qdsqc::RunSpec spec = config->store.resolve();
    std::vector<qdsqc::NamedStrategy> strategies;
    for (const auto& name : spec.strategies) {
      strategies.push_back(*qdsqc::strategy_by_name(name, spec.session.adversary.fixed_angle_deg));
    }
    const auto rows = qdsqc::attack_study(spec.grid, strategies, spec.trials, spec.session.seed);
    *out = copy_out(qdsqc::attack_csv(rows));
  });
}

qdsqc_status qdsqc_case_run(const qdsqc_config* config, qdsqc_case_report** out) {
  QDSQC_REQUIRE(config && out, "null argument");
  return guarded([&] {
    const qdsqc::RunSpec spec = config->store.resolve();
    auto report = std::make_unique<qdsqc_case_report>();
    report->report = qdsqc::run_case(spec.session);
    *out = report.release();
  });
}

void qdsqc_case_destroy(qdsqc_case_report* report) { delete report; }

int qdsqc_case_aborted(const qdsqc_case_report* report) { return report->report.aborted ? 1 : 0; }

qdsqc_status qdsqc_case_json(const qdsqc_case_report* report, char** out) {
  QDSQC_REQUIRE(report && out, "null argument");
  return guarded([&] { *out = copy_out(qdsqc::case_report_to_json(report->report)); });
}

double qdsqc_pd_theory(double concurrence) {
  try {
    return qdsqc::pd_theory(concurrence);
  } catch (const qdsqc::Error& e) {
    g_last_error = e.what();
    return std::numeric_limits<double>::quiet_NaN();
  }
}

double qdsqc_eta_theory(double concurrence) {
  try {
    return qdsqc::eta_theory(concurrence);
  } catch (const qdsqc::Error& e) {
    g_last_error = e.what();
    return std::numeric_limits<double>::quiet_NaN();
  }
}

qdsqc_status qdsqc_attack_error_oracle(double concurrence, const char* strategy,
                                       double fixed_angle_deg, char basis, double* out) {
  QDSQC_REQUIRE(strategy && out, "null argument");
  QDSQC_REQUIRE(basis == 'R' || basis == 'D', "basis must be 'R' or 'D'");
  const auto named = qdsqc::strategy_by_name(strategy, fixed_angle_deg);
  if (!named) return fail(QDSQC_ERR_INVALID_ARGUMENT, std::string("unknown strategy: ") + strategy);
  return guarded([&] {
    *out = qdsqc::attack_error_oracle(concurrence, named->model,
                                      basis == 'R' ? qdsqc::Basis::kR : qdsqc::Basis::kD);
  });
}

}  // extern "C"
