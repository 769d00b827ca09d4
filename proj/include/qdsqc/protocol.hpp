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
#include "qdsqc/random.hpp"
#include "qdsqc/statevector.hpp"

namespace qdsqc {

using BitVector = std::vector<Bit>;
using PositionList = std::vector<std::size_t>;

// Concurrence Alice uses when preparing a pair. PerBasis means she picks her
// measurement basis first and prepares with the concurrence assigned to it.
struct PrepPolicy {
  enum class Kind : std::uint8_t { kUniform, kPerBasis };

  Kind kind = Kind::kUniform;
  double c = 1.0;
  double c_r = 1.0;
  double c_d = 1.0;

  static PrepPolicy uniform(double c) { return {Kind::kUniform, c, c, c}; }
  static PrepPolicy per_basis(double c_r, double c_d) { return {Kind::kPerBasis, c_r, c_r, c_d}; }

  double concurrence_for(Basis alice_basis) const noexcept {
    if (kind == Kind::kUniform) return c;
    return alice_basis == Basis::kR ? c_r : c_d;
  }
};

enum class CaseMode : std::uint8_t { kPlain, kCaseI, kCaseII };

struct SessionConfig {
  std::size_t n = 1000;
  PrepPolicy prep = PrepPolicy::uniform(1.0);
  double check_fraction = 0.25;
  // Unset means the midpoint between the honest check error and 0.25.
  std::optional<double> abort_threshold;
  // Case II only: bound on the D-sifted check error. Unset means the
  // midpoint between 0.5(1 - C_D) and 0.5.
  std::optional<double> d_abort_threshold;
  AdversaryModel adversary;
  std::uint64_t seed = 0;
  bool exclude_check_bits_from_message = false;
  CaseMode case_mode = CaseMode::kPlain;
  bool top_up = true;

  void validate() const;

  // Expected check error on an honest channel for this preparation policy
  // and case mode.
  double honest_check_error() const noexcept;
  double effective_abort_threshold() const noexcept;
  double effective_d_abort_threshold() const noexcept;
};

struct RoundRecord {
  // Message position for the first n rounds; n + k for the k-th top-up round.
  std::size_t index = 0;
  Basis alice_basis = Basis::kR;
  Basis bob_basis = Basis::kR;
  Bit alice_bit = 0;
  Bit bob_bit = 0;
  std::optional<EveAction> eve;

  bool sifted() const noexcept { return alice_basis == bob_basis; }
};

// Bits exchanged over the classical channel, by category.
struct ClassicalLedger {
  std::uint64_t basis = 0;
  std::uint64_t check = 0;
  std::uint64_t pad = 0;
  std::uint64_t flips = 0;
};

enum class SessionStatus : std::uint8_t { kDelivered, kAbortedEveDetected, kAbortedPadShortfall };

const char* status_name(SessionStatus status) noexcept;

struct Transcript {
  std::size_t n = 0;
  BitVector N;
  BitVector N1;
  std::vector<RoundRecord> rounds;
  // Sifted message positions; P and Q extend past them with top-up ranks.
  PositionList sifted_positions;
  PositionList discarded_positions;
  BitVector P;
  BitVector Q;
  // Message positions delivered through the pad, ascending. Equal to
  // discarded_positions unless some sifted ranks cannot carry message bits.
  PositionList pad_positions;
  BitVector A;
  std::size_t d = 0;
  BitVector G;
  // Ranks into P/Q. In Case II these are the R-sifted checks; the D-sifted
  // ranks, all of which are checked, are listed separately.
  PositionList check_positions;
  PositionList d_check_positions;
  // Sifted ranks whose bit carries the message at sifted_positions[rank].
  PositionList message_ranks;
  // Ranks paired with A, in pad order.
  PositionList pad_ranks;
  PositionList flip_positions;
  ClassicalLedger ledger;
  ClassicalLedger detailed_ledger;
  std::size_t extra_rounds = 0;
  std::optional<BitVector> delivered;
  std::string abort_reason;

  std::size_t rounds_total() const noexcept { return n + extra_rounds; }
};

struct SessionOutcome {
  SessionStatus status = SessionStatus::kDelivered;
  BitVector message_out;
  double observed_check_error = 0.0;
  std::optional<double> d_check_error;
};

struct SessionResult {
  Transcript transcript;
  SessionOutcome outcome;
};

// Prepares, transmits and measures entangled pairs. Alice's basis, Bob's
// basis, Eve and the two measurements each draw from their own stream, so a
// change of adversary leaves both parties' basis choices untouched.
class PairSource {
 public:
  PairSource(const PrepPolicy& prep, const AdversaryModel& adversary, std::uint64_t seed);

  RoundRecord play(std::size_t index);

 private:
  AdversaryModel adversary_;
  TwoQubitState r_state_;
  TwoQubitState d_state_;
  RandomStream alice_basis_;
  RandomStream bob_basis_;
  RandomStream eve_;
  RandomStream alice_meas_;
  RandomStream bob_meas_;
};

// Message bits from the session seed, for runs that do not supply one.
BitVector generate_message(std::size_t n, std::uint64_t seed);

struct SiftResult {
  PositionList sifted_positions;
  PositionList discarded_positions;
  BitVector P;
  BitVector Q;
  BitVector A;
};

// Rounds with index >= message.size() are top-up rounds: when sifted they
// extend P and Q, otherwise they are dropped.
SiftResult sift(std::span<const RoundRecord> rounds, std::span<const Bit> message);

// Fraction of mismatches between P and Q over the given ranks.
double error_check(std::span<const Bit> P, std::span<const Bit> Q,
                   std::span<const std::size_t> check_positions);

// G[i] = A[i] ^ P_available[i].
BitVector make_pad(std::span<const Bit> A, std::span<const Bit> P_available);

// A'[i] = G[i] ^ Q_available[i].
BitVector recover_pad(std::span<const Bit> G, std::span<const Bit> Q_available);

// Ranks j in `ranks` with P[j] != N[sifted_positions[j]].
PositionList flip_correction(std::span<const Bit> N, std::span<const Bit> P,
                             std::span<const std::size_t> sifted_positions,
                             std::span<const std::size_t> ranks);

// All ranks j < sifted_positions.size().
PositionList flip_correction(std::span<const Bit> N, std::span<const Bit> P,
                             std::span<const std::size_t> sifted_positions);

// Bob's reconstruction: Q with flips at message ranks, A' at pad positions.
BitVector assemble(std::size_t n, std::span<const Bit> Q, std::span<const std::size_t> flip_positions,
                   std::span<const Bit> A_recovered, std::span<const std::size_t> pad_positions,
                   std::span<const std::size_t> sifted_positions,
                   std::span<const std::size_t> message_ranks);

// Classical bits per transmitted qubit under the convention that charges
// one basis bit per round, one bit per pad element and one flip-mask bit
// per message-carrying sifted bit.
double classical_ledger(const Transcript& transcript);

// Runs the full exchange for `message` (size config.n).
SessionResult run_session(const SessionConfig& config, std::span<const Bit> message);

}  // namespace qdsqc
