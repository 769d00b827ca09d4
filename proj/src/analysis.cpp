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

#include "qdsqc/analysis.hpp"

#include <cmath>

#include <fmt/format.h>

#include "qdsqc/errors.hpp"
#include "qdsqc/random.hpp"

namespace qdsqc {
namespace {

constexpr std::uint64_t kCaseCheckStream = 0x43415345;  // "CASE"
constexpr std::uint64_t kAttackStream = 0x41544b;       // "ATK"

void require_unit(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("concurrence {} outside [0, 1]", c));
  }
}

double mismatch_rate(const BitVector& P, const BitVector& Q, const PositionList& ranks) {
  if (ranks.empty()) return 0.0;
  std::size_t m = 0;
  for (std::size_t j : ranks) m += P[j] != Q[j];
  return static_cast<double>(m) / static_cast<double>(ranks.size());
}

}  // namespace

double pd_theory(double c) {
  require_unit(c);
  return 0.5 * (1.0 - c);
}

double sifted_error_theory(double c) { return 0.5 * pd_theory(c); }

double eta_theory(double c) {
  require_unit(c);
  return (3.0 + c) / 12.0;
}

double eta_measured(const SessionResult& session, LedgerMode mode) {
  if (mode != LedgerMode::kStandard) {
    throw Error(ErrorCode::kLedgerModeMismatch,
                "efficiency is defined on the standard ledger only");
  }
  if (session.outcome.status != SessionStatus::kDelivered) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("session {}, no efficiency", status_name(session.outcome.status)));
  }
  const Transcript& t = session.transcript;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < t.n; ++i) correct += session.outcome.message_out[i] == t.N[i];
  const double c = static_cast<double>(correct) / static_cast<double>(t.rounds_total());
  return c / (1.0 + classical_ledger(t));
}

std::vector<SweepRow> sweep(std::span<const double> grid, std::size_t rounds_per_point,
                            std::uint64_t master_seed) {
  if (grid.empty()) throw Error(ErrorCode::kInvalidArgument, "empty concurrence grid");
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SweepRow row;
    row.concurrence = grid[i];
    row.seed = derive_seed(master_seed, i);
    row.pd_theory = pd_theory(row.concurrence);
    row.sifted_err_theory = sifted_error_theory(row.concurrence);
    row.eta_theory = eta_theory(row.concurrence);

    SessionConfig config;
    config.n = rounds_per_point;
    config.prep = PrepPolicy::uniform(row.concurrence);
    config.abort_threshold = 1.0;
    config.seed = row.seed;
    const auto session = run_session(config, generate_message(config.n, row.seed));
    const Transcript& t = session.transcript;

    PositionList all_ranks(t.P.size());
    PositionList d_ranks;
    std::size_t rank = 0;
    for (const auto& r : t.rounds) {
      if (!r.sifted()) continue;
      all_ranks[rank] = rank;
      if (r.alice_basis == Basis::kD) d_ranks.push_back(rank);
      ++rank;
    }
    row.pd_est = mismatch_rate(t.P, t.Q, d_ranks);
    row.sifted_err_est = mismatch_rate(t.P, t.Q, all_ranks);
    row.eta_est = eta_measured(session);
    row.trials = t.rounds_total();
    row.d_sifted = d_ranks.size();
    row.sifted = all_ranks.size();
    row.message_bits = t.n;
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = kSweepCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += fmt::format("{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{},{}\n", r.concurrence,
                       r.pd_theory, r.pd_est, r.sifted_err_theory, r.sifted_err_est,
                       r.eta_theory, r.eta_est, r.trials, r.seed);
  }
  return out;
}

std::optional<NamedStrategy> strategy_by_name(std::string_view name, double fixed_angle_deg) {
  if (name == "ideal") return NamedStrategy{"ideal", AdversaryModel::ideal()};
  const auto strategy = parse_strategy(name);
  if (!strategy) return std::nullopt;
  return NamedStrategy{std::string(name),
                       AdversaryModel::intercept_resend(1.0, *strategy, fixed_angle_deg)};
}

double attack_error_mc(double c, const AdversaryModel& model, Basis basis, std::size_t trials,
                       std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::kInvalidArgument, "attack study needs trials > 0");
  model.validate();
  const TwoQubitState state = prepare_with_concurrence(c);
  RandomStream eve(seed, 1);
  RandomStream alice(seed, 2);
  RandomStream bob(seed, 3);
  std::size_t mismatches = 0;
  for (std::size_t k = 0; k < trials; ++k) {
    const auto channel = transmit(state, model, eve);
    const auto a = measure(channel.state, Qubit::kAlice, basis, alice.uniform());
    const auto b = measure(a.post_state, Qubit::kBob, basis, bob.uniform());
    mismatches += a.outcome != b.outcome;
  }
  return static_cast<double>(mismatches) / static_cast<double>(trials);
}

std::vector<AttackRow> attack_study(std::span<const double> grid,
                                    std::span<const NamedStrategy> strategies,
                                    std::size_t trials, std::uint64_t master_seed) {
  if (grid.empty()) throw Error(ErrorCode::kInvalidArgument, "empty concurrence grid");
  if (strategies.empty()) throw Error(ErrorCode::kInvalidArgument, "no strategies given");
  std::vector<AttackRow> rows;
  std::uint64_t point = 0;
  for (double c : grid) {
    require_unit(c);
    for (const auto& s : strategies) {
      for (Basis basis : {Basis::kR, Basis::kD}) {
        AttackRow row;
        row.concurrence = c;
        row.strategy = s.name;
        row.basis = basis;
        row.trials = trials;
        row.error_oracle = attack_error_oracle(c, s.model, basis);
        row.error_mc = attack_error_mc(c, s.model, basis, trials,
                                       derive_seed(master_seed ^ kAttackStream, point++));
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string attack_csv(std::span<const AttackRow> rows) {
  std::string out = kAttackCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += fmt::format("{:.6f},{},{},{:.6f},{:.6f},{}\n", r.concurrence, r.strategy,
                       basis_letter(r.basis), r.error_oracle, r.error_mc, r.trials);
  }
  return out;
}

const char* case_mode_name(CaseMode mode) noexcept {
  switch (mode) {
    case CaseMode::kPlain: return "plain";
    case CaseMode::kCaseI: return "i";
    case CaseMode::kCaseII: return "ii";
  }
  return "?";
}

CaseReport run_case(const SessionConfig& config) {
  config.validate();
  if (config.case_mode == CaseMode::kPlain) {
    throw Error(ErrorCode::kInvalidArgument, "case run needs case mode i or ii");
  }
  const bool case_ii = config.case_mode == CaseMode::kCaseII;
  CaseReport report;
  report.mode = config.case_mode;
  report.n = config.n;
  report.c_r = config.prep.c_r;
  report.c_d = config.prep.c_d;
  report.seed = config.seed;

  // Collect until n kept bits exist. Kept ranks index P/Q; in case ii the
  // D-sifted ranks go to the D check instead.
  PairSource source(config.prep, config.adversary, config.seed);
  BitVector P;
  BitVector Q;
  PositionList kept;
  PositionList d_ranks;
  while (kept.size() < config.n) {
    const RoundRecord r = source.play(report.pairs_consumed++);
    if (!r.sifted()) continue;
    if (case_ii && r.alice_basis == Basis::kD) {
      d_ranks.push_back(P.size());
    } else {
      kept.push_back(P.size());
    }
    P.push_back(r.alice_bit);
    Q.push_back(r.bob_bit);
  }
  report.sifted_bits = P.size();

  const auto k = static_cast<std::size_t>(
      std::lround(config.check_fraction * static_cast<double>(kept.size())));
  RandomStream check_stream(config.seed, kCaseCheckStream);
  PositionList check;
  for (std::size_t idx : check_stream.sample_without_replacement(kept.size(), k)) {
    check.push_back(kept[idx]);
  }
  report.check_bits = check.size();
  report.check_error = error_check(P, Q, check);
  const double threshold = config.effective_abort_threshold();
  if (report.check_error > threshold) {
    report.aborted = true;
    report.abort_reason = fmt::format("check error {:.6f} exceeds threshold {:.6f}",
                                      report.check_error, threshold);
  }
  if (case_ii) {
    report.d_check_bits = d_ranks.size();
    report.d_check_error = error_check(P, Q, d_ranks);
    const double d_threshold = config.effective_d_abort_threshold();
    if (!report.aborted && *report.d_check_error > d_threshold) {
      report.aborted = true;
      report.abort_reason = fmt::format("D-basis check error {:.6f} exceeds threshold {:.6f}",
                                        *report.d_check_error, d_threshold);
    }
  }
  if (!report.aborted) {
    for (std::size_t j : kept) {
      if (P[j] == Q[j]) {
        ++report.error_free_bits;
      } else {
        ++report.delivered_error_count;
      }
    }
  }
  return report;
}

CaseReport run_case_i(std::size_t n, double c_r, std::uint64_t seed,
                      const AdversaryModel& adversary) {
  SessionConfig config;
  config.n = n;
  config.prep = PrepPolicy::per_basis(c_r, 1.0);
  config.case_mode = CaseMode::kCaseI;
  config.adversary = adversary;
  config.seed = seed;
  return run_case(config);
}

CaseReport run_case_ii(std::size_t n, double c_r, double c_d, std::uint64_t seed,
                       const AdversaryModel& adversary) {
  SessionConfig config;
  config.n = n;
  config.prep = PrepPolicy::per_basis(c_r, c_d);
  config.case_mode = CaseMode::kCaseII;
  config.adversary = adversary;
  config.seed = seed;
  return run_case(config);
}

}  // namespace qdsqc
