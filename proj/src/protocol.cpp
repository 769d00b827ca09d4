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

#include "qdsqc/protocol.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "qdsqc/errors.hpp"

namespace qdsqc {
namespace {

enum StreamId : std::uint64_t {
  kMessageStream = 1,
  kAliceBasisStream,
  kBobBasisStream,
  kEveStream,
  kAliceMeasStream,
  kBobMeasStream,
  kCheckStream,
};

void require_bits(std::span<const Bit> bits, const char* what) {
  for (Bit b : bits) {
    if (b > 1) throw Error(ErrorCode::kInvalidArgument, fmt::format("{} holds a non-bit value", what));
  }
}

void require_concurrence(double c, const char* what) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("{} = {} outside [0, 1]", what, c));
  }
}

std::uint64_t ceil_log2(std::uint64_t x) noexcept {
  return x <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(x - 1));
}

// Which sifted ranks are checked, which carry message bits, and which
// message positions travel through the pad.
struct SiftPlan {
  PositionList check_ranks;
  PositionList d_check_ranks;
  PositionList message_ranks;
  PositionList pad_positions;
  PositionList available_ranks;
};

SiftPlan plan_sifted_ranks(const SessionConfig& config, const std::vector<Basis>& rank_basis,
                           const SiftResult& sifted) {
  SiftPlan plan;
  const bool case_ii = config.case_mode == CaseMode::kCaseII;
  PositionList population;
  for (std::size_t j = 0; j < rank_basis.size(); ++j) {
    if (case_ii && rank_basis[j] == Basis::kD) {
      plan.d_check_ranks.push_back(j);
    } else {
      population.push_back(j);
    }
  }

  const auto k = static_cast<std::size_t>(
      std::lround(config.check_fraction * static_cast<double>(population.size())));
  if (k == 0) {
    throw Error(ErrorCode::kEmptyCheckSet,
                fmt::format("check fraction {} of {} sifted bits selects nothing",
                            config.check_fraction, population.size()));
  }
  if (case_ii && plan.d_check_ranks.empty()) {
    throw Error(ErrorCode::kEmptyCheckSet, "no D-sifted bits available for checking");
  }
  // A fresh stream per selection: the check set depends only on the final
  // sifted population, not on how many top-up passes preceded it.
  RandomStream check_stream(config.seed, kCheckStream);
  for (std::size_t idx : check_stream.sample_without_replacement(population.size(), k)) {
    plan.check_ranks.push_back(population[idx]);
  }

  std::vector<bool> usable(rank_basis.size(), true);
  for (std::size_t j : plan.d_check_ranks) usable[j] = false;
  if (config.exclude_check_bits_from_message) {
    for (std::size_t j : plan.check_ranks) usable[j] = false;
  }

  plan.pad_positions = sifted.discarded_positions;
  for (std::size_t j = 0; j < sifted.sifted_positions.size(); ++j) {
    if (usable[j]) {
      plan.message_ranks.push_back(j);
    } else {
      plan.pad_positions.push_back(sifted.sifted_positions[j]);
    }
  }
  std::sort(plan.pad_positions.begin(), plan.pad_positions.end());
  for (std::size_t j = 0; j < usable.size(); ++j) {
    if (usable[j]) plan.available_ranks.push_back(j);
  }
  return plan;
}

BitVector gather(std::span<const Bit> bits, std::span<const std::size_t> idx) {
  BitVector out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(bits[i]);
  return out;
}

}  // namespace

void SessionConfig::validate() const {
  if (n < 8) throw Error(ErrorCode::kInvalidArgument, fmt::format("n = {} below minimum 8", n));
  require_concurrence(prep.c, "concurrence");
  require_concurrence(prep.c_r, "concurrence_r");
  require_concurrence(prep.c_d, "concurrence_d");
  if (!(check_fraction > 0.0 && check_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("check fraction {} outside (0, 1)", check_fraction));
  }
  for (const auto& t : {abort_threshold, d_abort_threshold}) {
    if (t && !(*t > 0.0 && *t <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, fmt::format("abort threshold {} outside (0, 1]", *t));
    }
  }
  adversary.validate();
  switch (case_mode) {
    case CaseMode::kPlain:
      break;
    case CaseMode::kCaseI:
      if (prep.kind != PrepPolicy::Kind::kPerBasis || prep.c_d != 1.0 || !(prep.c_r > 0.0)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "case i needs per-basis preparation with 0 < C_R <= 1 and C_D = 1");
      }
      break;
    case CaseMode::kCaseII:
      if (prep.kind != PrepPolicy::Kind::kPerBasis || !(prep.c_r > 0.0) ||
          !(prep.c_d > 0.0 && prep.c_d < 1.0)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "case ii needs per-basis preparation with 0 < C_R <= 1 and 0 < C_D < 1");
      }
      break;
  }
}

double SessionConfig::honest_check_error() const noexcept {
  // R-sifted rounds never disagree; D-sifted rounds disagree with
  // probability 0.5(1 - C_D), and half of the sifted rounds are D.
  if (case_mode == CaseMode::kCaseII) return 0.0;
  const double c_d = prep.kind == PrepPolicy::Kind::kUniform ? prep.c : prep.c_d;
  return 0.25 * (1.0 - c_d);
}

double SessionConfig::effective_abort_threshold() const noexcept {
  if (abort_threshold) return *abort_threshold;
  return 0.5 * (honest_check_error() + 0.25);
}

double SessionConfig::effective_d_abort_threshold() const noexcept {
  if (d_abort_threshold) return *d_abort_threshold;
  return 0.5 * (0.5 * (1.0 - prep.c_d) + 0.5);
}

const char* status_name(SessionStatus status) noexcept {
  switch (status) {
    case SessionStatus::kDelivered: return "delivered";
    case SessionStatus::kAbortedEveDetected: return "aborted_eve_detected";
    case SessionStatus::kAbortedPadShortfall: return "aborted_pad_shortfall";
  }
  return "?";
}

PairSource::PairSource(const PrepPolicy& prep, const AdversaryModel& adversary,
                       std::uint64_t seed)
    : adversary_(adversary),
      r_state_(prepare_with_concurrence(prep.concurrence_for(Basis::kR))),
      d_state_(prepare_with_concurrence(prep.concurrence_for(Basis::kD))),
      alice_basis_(seed, kAliceBasisStream),
      bob_basis_(seed, kBobBasisStream),
      eve_(seed, kEveStream),
      alice_meas_(seed, kAliceMeasStream),
      bob_meas_(seed, kBobMeasStream) {}

RoundRecord PairSource::play(std::size_t index) {
  RoundRecord rec;
  rec.index = index;
  rec.alice_basis = alice_basis_.bit() ? Basis::kD : Basis::kR;
  rec.bob_basis = bob_basis_.bit() ? Basis::kD : Basis::kR;
  const TwoQubitState& prepared = rec.alice_basis == Basis::kR ? r_state_ : d_state_;
  auto channel = transmit(prepared, adversary_, eve_);
  rec.eve = channel.eve;
  const auto alice = measure(channel.state, Qubit::kAlice, rec.alice_basis, alice_meas_.uniform());
  const auto bob = measure(alice.post_state, Qubit::kBob, rec.bob_basis, bob_meas_.uniform());
  rec.alice_bit = alice.outcome;
  rec.bob_bit = bob.outcome;
  return rec;
}

BitVector generate_message(std::size_t n, std::uint64_t seed) {
  RandomStream stream(seed, kMessageStream);
  BitVector bits(n);
  for (auto& b : bits) b = stream.bit() ? 1 : 0;
  return bits;
}

SiftResult sift(std::span<const RoundRecord> rounds, std::span<const Bit> message) {
  SiftResult out;
  const std::size_t n = message.size();
  for (const auto& r : rounds) {
    const bool in_message = r.index < n;
    if (r.sifted()) {
      if (in_message) out.sifted_positions.push_back(r.index);
      out.P.push_back(r.alice_bit);
      out.Q.push_back(r.bob_bit);
    } else if (in_message) {
      out.discarded_positions.push_back(r.index);
      out.A.push_back(message[r.index]);
    }
  }
  return out;
}

double error_check(std::span<const Bit> P, std::span<const Bit> Q,
                   std::span<const std::size_t> check_positions) {
  if (check_positions.empty()) throw Error(ErrorCode::kEmptyCheckSet, "empty check set");
  std::size_t mismatches = 0;
  for (std::size_t j : check_positions) {
    if (j >= P.size() || j >= Q.size()) {
      throw Error(ErrorCode::kInvalidArgument, fmt::format("check rank {} out of range", j));
    }
    mismatches += P[j] != Q[j];
  }
  return static_cast<double>(mismatches) / static_cast<double>(check_positions.size());
}

BitVector make_pad(std::span<const Bit> A, std::span<const Bit> P_available) {
  if (P_available.size() < A.size()) {
    throw Error(ErrorCode::kPadShortfall,
                fmt::format("{} pad bits needed, {} sifted bits available", A.size(),
                            P_available.size()));
  }
  BitVector G(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) G[i] = A[i] ^ P_available[i];
  return G;
}

BitVector recover_pad(std::span<const Bit> G, std::span<const Bit> Q_available) {
  if (Q_available.size() < G.size()) {
    throw Error(ErrorCode::kInvalidArgument, "fewer sifted bits than pad bits");
  }
  BitVector A(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) A[i] = G[i] ^ Q_available[i];
  return A;
}

PositionList flip_correction(std::span<const Bit> N, std::span<const Bit> P,
                             std::span<const std::size_t> sifted_positions,
                             std::span<const std::size_t> ranks) {
  PositionList flips;
  for (std::size_t j : ranks) {
    if (j >= sifted_positions.size() || j >= P.size() || sifted_positions[j] >= N.size()) {
      throw Error(ErrorCode::kInvalidArgument, fmt::format("rank {} is not a message rank", j));
    }
    if (P[j] != N[sifted_positions[j]]) flips.push_back(j);
  }
  return flips;
}

PositionList flip_correction(std::span<const Bit> N, std::span<const Bit> P,
                             std::span<const std::size_t> sifted_positions) {
  PositionList all(std::min(sifted_positions.size(), P.size()));
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  return flip_correction(N, P, sifted_positions, all);
}

BitVector assemble(std::size_t n, std::span<const Bit> Q, std::span<const std::size_t> flip_positions,
                   std::span<const Bit> A_recovered, std::span<const std::size_t> pad_positions,
                   std::span<const std::size_t> sifted_positions,
                   std::span<const std::size_t> message_ranks) {
  if (A_recovered.size() != pad_positions.size()) {
    throw Error(ErrorCode::kInvalidArgument, "pad bits and pad positions differ in length");
  }
  std::vector<bool> flip(Q.size(), false);
  for (std::size_t j : flip_positions) flip.at(j) = true;
  BitVector out(n, 0);
  std::vector<bool> filled(n, false);
  for (std::size_t j : message_ranks) {
    const std::size_t pos = sifted_positions[j];
    out.at(pos) = Q[j] ^ (flip[j] ? 1 : 0);
    filled[pos] = true;
  }
  for (std::size_t i = 0; i < pad_positions.size(); ++i) {
    out.at(pad_positions[i]) = A_recovered[i];
    filled[pad_positions[i]] = true;
  }
  if (std::find(filled.begin(), filled.end(), false) != filled.end()) {
    throw Error(ErrorCode::kInvalidArgument, "message and pad positions do not cover the message");
  }
  return out;
}

double classical_ledger(const Transcript& t) {
  if (!t.delivered) {
    throw Error(ErrorCode::kInvalidArgument, "ledger is only defined for delivered sessions");
  }
  const auto& l = t.ledger;
  return static_cast<double>(l.basis + l.pad + l.flips) / static_cast<double>(t.rounds_total());
}

SessionResult run_session(const SessionConfig& config, std::span<const Bit> message) {
  config.validate();
  if (message.size() != config.n) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("message has {} bits, config expects {}", message.size(), config.n));
  }
  require_bits(message, "message");

  const std::size_t n = config.n;
  SessionResult result;
  Transcript& t = result.transcript;
  SessionOutcome& outcome = result.outcome;
  t.n = n;
  t.N.assign(message.begin(), message.end());

  PairSource source(config.prep, config.adversary, config.seed);
  t.rounds.reserve(n + n / 8);
  std::vector<Basis> rank_basis;
  for (std::size_t i = 0; i < n; ++i) {
    t.rounds.push_back(source.play(i));
    t.N1.push_back(t.rounds.back().bob_bit);
    if (t.rounds.back().sifted()) rank_basis.push_back(t.rounds.back().alice_basis);
  }

  // Steps 4-5 plus top-up: extra pairs carry no message position and only
  // add sifted bits until the pad can cover every non-carried position.
  const std::size_t cap = 4 * n;
  SiftResult sifted;
  SiftPlan plan;
  for (;;) {
    sifted = sift(t.rounds, t.N);
    plan = plan_sifted_ranks(config, rank_basis, sifted);
    if (plan.available_ranks.size() >= plan.pad_positions.size()) break;
    if (!config.top_up || t.extra_rounds >= cap) {
      t.sifted_positions = std::move(sifted.sifted_positions);
      t.discarded_positions = std::move(sifted.discarded_positions);
      t.P = std::move(sifted.P);
      t.Q = std::move(sifted.Q);
      t.d = t.discarded_positions.size();
      t.pad_positions = std::move(plan.pad_positions);
      t.check_positions = std::move(plan.check_ranks);
      t.d_check_positions = std::move(plan.d_check_ranks);
      t.A = gather(t.N, t.pad_positions);
      t.ledger.basis = t.rounds_total();
      t.detailed_ledger.basis = 2 * t.rounds_total();
      t.abort_reason = fmt::format("pad needs {} sifted bits, {} available after {} extra rounds",
                                   t.pad_positions.size(), plan.available_ranks.size(),
                                   t.extra_rounds);
      outcome.status = SessionStatus::kAbortedPadShortfall;
      return result;
    }
    std::size_t deficit = plan.pad_positions.size() - plan.available_ranks.size();
    while (deficit > 0 && t.extra_rounds < cap) {
      t.rounds.push_back(source.play(n + t.extra_rounds));
      ++t.extra_rounds;
      const auto& r = t.rounds.back();
      if (!r.sifted()) continue;
      rank_basis.push_back(r.alice_basis);
      if (!(config.case_mode == CaseMode::kCaseII && r.alice_basis == Basis::kD)) --deficit;
    }
  }

  t.sifted_positions = std::move(sifted.sifted_positions);
  t.discarded_positions = std::move(sifted.discarded_positions);
  t.P = std::move(sifted.P);
  t.Q = std::move(sifted.Q);
  t.d = t.discarded_positions.size();
  t.check_positions = std::move(plan.check_ranks);
  t.d_check_positions = std::move(plan.d_check_ranks);
  t.message_ranks = std::move(plan.message_ranks);
  t.pad_positions = std::move(plan.pad_positions);
  t.A = gather(t.N, t.pad_positions);

  const std::size_t checked = t.check_positions.size() + t.d_check_positions.size();
  t.ledger.basis = t.rounds_total();
  t.ledger.check = checked;
  t.detailed_ledger.basis = 2 * t.rounds_total();
  t.detailed_ledger.check = checked * (1 + ceil_log2(t.Q.size()));

  // Steps 6-8: public comparison of the check subset.
  outcome.observed_check_error = error_check(t.P, t.Q, t.check_positions);
  if (config.case_mode == CaseMode::kCaseII) {
    outcome.d_check_error = error_check(t.P, t.Q, t.d_check_positions);
  }
  const double threshold = config.effective_abort_threshold();
  if (outcome.observed_check_error > threshold) {
    outcome.status = SessionStatus::kAbortedEveDetected;
    t.abort_reason = fmt::format("check error {:.6f} exceeds threshold {:.6f}",
                                 outcome.observed_check_error, threshold);
    return result;
  }
  if (outcome.d_check_error && *outcome.d_check_error > config.effective_d_abort_threshold()) {
    outcome.status = SessionStatus::kAbortedEveDetected;
    t.abort_reason = fmt::format("D-basis check error {:.6f} exceeds threshold {:.6f}",
                                 *outcome.d_check_error, config.effective_d_abort_threshold());
    return result;
  }

  // Step 8-9: pad over the lowest usable ranks, Bob strips it with Q.
  t.pad_ranks.assign(plan.available_ranks.begin(),
                     plan.available_ranks.begin() + static_cast<std::ptrdiff_t>(t.A.size()));
  t.G = make_pad(t.A, gather(t.P, t.pad_ranks));
  const BitVector recovered = recover_pad(t.G, gather(t.Q, t.pad_ranks));

  // Step 10: flip mask for message-carrying sifted bits.
  t.flip_positions = flip_correction(t.N, t.P, t.sifted_positions, t.message_ranks);
  t.ledger.pad = t.G.size();
  t.ledger.flips = t.message_ranks.size();
  t.detailed_ledger.pad = t.G.size();
  t.detailed_ledger.flips = t.message_ranks.size();

  outcome.message_out = assemble(n, t.Q, t.flip_positions, recovered, t.pad_positions,
                                 t.sifted_positions, t.message_ranks);
  outcome.status = SessionStatus::kDelivered;
  t.delivered = outcome.message_out;
  return result;
}

}  // namespace qdsqc
