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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdsqc/adversary.hpp"
#include "qdsqc/protocol.hpp"

namespace qdsqc {

// Probability that D-basis outcomes disagree: 0.5(1 - C).
double pd_theory(double c);

// Error rate among all sifted bits, half of which are D: 0.5 * pd_theory.
double sifted_error_theory(double c);

// Qubit efficiency c/(q + b) with c = 1 - 0.5 P_d, q = 1, b = 2.
double eta_theory(double c);

// kStandard: basis, pad and flip-mask bits. kDetailed additionally charges both
// basis announcements and the check values with their positions.
enum class LedgerMode : std::uint8_t { kStandard, kDetailed };

// Correct delivered bits per transmitted pair, divided by one plus the
// classical bits per pair. Only the paper-convention ledger is accepted.
double eta_measured(const SessionResult& session, LedgerMode mode = LedgerMode::kStandard);

struct SweepRow {
  double concurrence = 0.0;
  double pd_theory = 0.0;
  double pd_est = 0.0;
  double sifted_err_theory = 0.0;
  double sifted_err_est = 0.0;
  double eta_theory = 0.0;
  double eta_est = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  // Sample sizes behind the estimates; not part of the CSV.
  std::uint64_t d_sifted = 0;
  std::uint64_t sifted = 0;
  std::uint64_t message_bits = 0;
};

inline constexpr const char* kSweepCsvHeader =
    "concurrence,pd_theory,pd_est,sifted_err_theory,sifted_err_est,eta_theory,eta_est,trials,seed";

// One honest session of `rounds_per_point` message bits per grid point, with
// aborts disabled so every point yields estimates. Point i is seeded with
// derive_seed(master_seed, i).
std::vector<SweepRow> sweep(std::span<const double> grid, std::size_t rounds_per_point,
                            std::uint64_t master_seed);

std::string sweep_csv(std::span<const SweepRow> rows);

// A named adversary for attack studies; "ideal" maps to the identity channel.
struct NamedStrategy {
  std::string name;
  AdversaryModel model;
};

// Accepts ideal, uniform, always_r, always_d, fixed_angle.
std::optional<NamedStrategy> strategy_by_name(std::string_view name, double fixed_angle_deg = 0.0);

struct AttackRow {
  double concurrence = 0.0;
  std::string strategy;
  Basis basis = Basis::kR;
  double error_oracle = 0.0;
  double error_mc = 0.0;
  std::uint64_t trials = 0;
};

inline constexpr const char* kAttackCsvHeader =
    "concurrence,strategy,basis,error_oracle,error_mc,trials";

// Monte Carlo over `trials` sifted rounds in the given basis, with both
// parties measuring in that basis after the channel.
double attack_error_mc(double c, const AdversaryModel& model, Basis basis, std::size_t trials,
                       std::uint64_t seed);

// Rows ordered by (grid, strategy, basis R then D).
std::vector<AttackRow> attack_study(std::span<const double> grid,
                                    std::span<const NamedStrategy> strategies,
                                    std::size_t trials, std::uint64_t master_seed);

std::string attack_csv(std::span<const AttackRow> rows);

struct CaseReport {
  CaseMode mode = CaseMode::kCaseI;
  std::size_t n = 0;
  double c_r = 1.0;
  double c_d = 1.0;
  std::uint64_t seed = 0;
  bool aborted = false;
  std::string abort_reason;
  std::uint64_t pairs_consumed = 0;
  std::uint64_t sifted_bits = 0;
  std::uint64_t error_free_bits = 0;
  std::uint64_t delivered_error_count = 0;
  std::uint64_t check_bits = 0;
  double check_error = 0.0;
  // Case II only.
  std::optional<double> d_check_error;
  std::uint64_t d_check_bits = 0;
};

// Sifted-bit generation under reduced entanglement. Pairs are produced until
// config.n bits are kept: every sifted bit in case i, only R-sifted bits in
// case ii (D-sifted bits are all spent on checking). Uses config.case_mode,
// config.prep, config.adversary, config.check_fraction, the thresholds and
// config.seed.
CaseReport run_case(const SessionConfig& config);

CaseReport run_case_i(std::size_t n, double c_r, std::uint64_t seed,
                      const AdversaryModel& adversary = AdversaryModel::ideal());

CaseReport run_case_ii(std::size_t n, double c_r, double c_d, std::uint64_t seed,
                       const AdversaryModel& adversary = AdversaryModel::ideal());

const char* case_mode_name(CaseMode mode) noexcept;

}  // namespace qdsqc
