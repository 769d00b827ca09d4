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

// Command-line front end. Talks to the simulator only through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdsqc/qdsqc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAborted = 2;

struct ConfigDeleter {
  void operator()(qdsqc_config* c) const { qdsqc_config_destroy(c); }
};
struct SessionDeleter {
  void operator()(qdsqc_session* s) const { qdsqc_session_destroy(s); }
};
struct CaseDeleter {
  void operator()(qdsqc_case_report* r) const { qdsqc_case_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { qdsqc_string_free(s); }
};
using ConfigPtr = std::unique_ptr<qdsqc_config, ConfigDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Thrown for anything that should end the process with the usage exit code.
struct UsageError {
  std::string message;
};

void check(qdsqc_status status, const std::string& context) {
  if (status != QDSQC_OK) {
    throw UsageError{context + ": " + qdsqc_status_string(status) + ": " + qdsqc_last_error()};
  }
}

std::string flag_name(std::string key) {
  for (auto& ch : key) {
    if (ch == '_') ch = '-';
  }
  return "--" + key;
}

// One optional string per config key; every key is a flag on every
// subcommand, so anything a file can say a flag can override.
struct FlagValues {
  std::optional<std::string> config_path;
  std::map<std::string, std::optional<std::string>> values;
};

void add_key_flags(CLI::App* cmd, FlagValues& flags) {
  cmd->add_option("--config", flags.config_path, "key = value configuration file");
  for (size_t i = 0; i < qdsqc_config_key_count(); ++i) {
    const std::string key = qdsqc_config_key_name(i);
    auto& slot = flags.values[key];
    std::string names = flag_name(key);
    if (key == "output") names = "-o," + names;
    if (key == "case_mode") names += ",--mode";
    cmd->add_option(names, slot, "config key '" + key + "'");
  }
}

ConfigPtr build_config(const FlagValues& flags) {
  qdsqc_config* raw = nullptr;
  check(qdsqc_config_create(&raw), "config");
  ConfigPtr config(raw);
  if (const char* env_seed = std::getenv("QDSQC_SEED"); env_seed != nullptr && *env_seed != '\0') {
    check(qdsqc_config_set(config.get(), "seed", env_seed), "QDSQC_SEED");
  }
  if (flags.config_path) check(qdsqc_config_load_file(config.get(), flags.config_path->c_str()), "config file");
  for (const auto& [key, value] : flags.values) {
    if (value) check(qdsqc_config_set(config.get(), key.c_str(), value->c_str()), flag_name(key));
  }
  return config;
}

std::optional<std::string> config_value(const qdsqc_config* config, const char* key) {
  char* raw = nullptr;
  if (qdsqc_config_get(config, key, &raw) != QDSQC_OK) return std::nullopt;
  OwnedString owned(raw);
  return std::string(owned.get());
}

void require_format(const qdsqc_config* config, const std::string& supported) {
  const auto format = config_value(config, "format");
  if (format && *format != supported) {
    throw UsageError{"format '" + *format + "' not supported here (use " + supported + ")"};
  }
}

void emit(const qdsqc_config* config, const char* text) {
  const auto output = config_value(config, "output");
  if (!output || output->empty() || *output == "-") {
    std::fwrite(text, 1, std::char_traits<char>::length(text), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(*output, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw UsageError{"cannot write " + *output};
}

int cmd_run(const FlagValues& flags) {
  const ConfigPtr config = build_config(flags);
  require_format(config.get(), "json");
  qdsqc_session* raw = nullptr;
  check(qdsqc_session_run(config.get(), &raw), "run");
  std::unique_ptr<qdsqc_session, SessionDeleter> session(raw);
  char* json = nullptr;
  check(qdsqc_session_transcript_json(session.get(), &json), "transcript");
  OwnedString owned(json);
  emit(config.get(), owned.get());

  const auto status = qdsqc_session_status_of(session.get());
  if (status == QDSQC_SESSION_DELIVERED) {
    std::fprintf(stderr, "delivered %zu bits, %zu bit errors, check error %.6f\n",
                 qdsqc_session_message_bits(session.get()), qdsqc_session_bit_errors(session.get()),
                 qdsqc_session_check_error(session.get()));
    return kExitOk;
  }
  std::fprintf(stderr, "aborted (%s), check error %.6f\n",
               status == QDSQC_SESSION_ABORTED_EVE_DETECTED ? "eavesdropper detected" : "pad shortfall",
               qdsqc_session_check_error(session.get()));
  return kExitAborted;
}

int cmd_sweep(const FlagValues& flags) {
  const ConfigPtr config = build_config(flags);
  require_format(config.get(), "csv");
  char* csv = nullptr;
  check(qdsqc_sweep_csv(config.get(), &csv), "sweep");
  OwnedString owned(csv);
  emit(config.get(), owned.get());
  return kExitOk;
}

int cmd_attack(const FlagValues& flags) {
  const ConfigPtr config = build_config(flags);
  require_format(config.get(), "csv");
  char* csv = nullptr;
  check(qdsqc_attack_csv(config.get(), &csv), "attack");
  OwnedString owned(csv);
  emit(config.get(), owned.get());
  return kExitOk;
}

int cmd_case(const FlagValues& flags) {
  const ConfigPtr config = build_config(flags);
  require_format(config.get(), "json");
  const auto mode = config_value(config.get(), "case_mode");
  if (!mode || *mode == "plain") throw UsageError{"case needs --mode i or --mode ii"};
  qdsqc_case_report* raw = nullptr;
  check(qdsqc_case_run(config.get(), &raw), "case");
  std::unique_ptr<qdsqc_case_report, CaseDeleter> report(raw);
  char* json = nullptr;
  check(qdsqc_case_json(report.get(), &json), "case report");
  OwnedString owned(json);
  emit(config.get(), owned.get());
  return qdsqc_case_aborted(report.get()) ? kExitAborted : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-deterministic secure quantum communication simulator"};
  app.set_version_flag("--version", std::string(qdsqc_version()));
  app.require_subcommand(1);

  FlagValues run_flags, sweep_flags, attack_flags, case_flags;
  auto* run = app.add_subcommand("run", "Run one session and write its transcript as JSON");
  auto* sweep = app.add_subcommand("sweep", "Concurrence sweep, CSV");
  auto* attack = app.add_subcommand("attack", "Intercept-resend error: oracle vs Monte Carlo, CSV");
  auto* case_cmd = app.add_subcommand("case", "Reduced-entanglement case i / ii experiment, JSON");
  add_key_flags(run, run_flags);
  add_key_flags(sweep, sweep_flags);
  add_key_flags(attack, attack_flags);
  add_key_flags(case_cmd, case_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(run_flags);
    if (sweep->parsed()) return cmd_sweep(sweep_flags);
    if (attack->parsed()) return cmd_attack(attack_flags);
    if (case_cmd->parsed()) return cmd_case(case_flags);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "qdsqc: %s\n", e.message.c_str());
    return kExitUsage;
  }
  return kExitUsage;
}
