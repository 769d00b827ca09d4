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

#include "qdsqc/transcript_json.hpp"

#include "json.hpp"

namespace qdsqc {
namespace {

using Json = nlohmann::ordered_json;

Json ledger_json(const ClassicalLedger& l) {
  return Json{{"basis", l.basis}, {"check", l.check}, {"pad", l.pad}, {"flips", l.flips}};
}

Json adversary_json(const AdversaryModel& a) {
  Json j;
  j["kind"] = a.kind == AdversaryKind::kIdeal ? "ideal" : "intercept_resend";
  if (a.kind == AdversaryKind::kInterceptResend) {
    j["intercept_probability"] = a.intercept_probability;
    j["strategy"] = std::string(strategy_name(a.strategy));
    if (a.strategy == BasisStrategy::kFixedAngle) j["fixed_angle_deg"] = a.fixed_angle_deg;
  }
  return j;
}

Json config_json(const SessionConfig& c) {
  Json j;
  j["n"] = c.n;
  if (c.prep.kind == PrepPolicy::Kind::kUniform) {
    j["prep_policy"] = "uniform";
    j["concurrence"] = c.prep.c;
  } else {
    j["prep_policy"] = "per_basis";
    j["concurrence_r"] = c.prep.c_r;
    j["concurrence_d"] = c.prep.c_d;
  }
  j["check_fraction"] = c.check_fraction;
  j["abort_threshold"] = c.effective_abort_threshold();
  if (c.case_mode == CaseMode::kCaseII) j["d_abort_threshold"] = c.effective_d_abort_threshold();
  j["adversary"] = adversary_json(c.adversary);
  j["seed"] = c.seed;
  j["exclude_check_bits_from_message"] = c.exclude_check_bits_from_message;
  j["case_mode"] = case_mode_name(c.case_mode);
  j["top_up"] = c.top_up;
  return j;
}

Json rounds_json(const std::vector<RoundRecord>& rounds) {
  std::string alice_bases, bob_bases, alice_bits, bob_bits, eve_bases, eve_bits;
  for (const auto& r : rounds) {
    alice_bases += basis_letter(r.alice_basis);
    bob_bases += basis_letter(r.bob_basis);
    alice_bits += static_cast<char>('0' + r.alice_bit);
    bob_bits += static_cast<char>('0' + r.bob_bit);
    if (r.eve) {
      eve_bases += r.eve->basis ? basis_letter(*r.eve->basis) : 'A';
      eve_bits += static_cast<char>('0' + r.eve->bit);
    } else {
      eve_bases += '-';
      eve_bits += '-';
    }
  }
  return Json{{"count", rounds.size()},     {"alice_bases", alice_bases}, {"bob_bases", bob_bases},
              {"alice_bits", alice_bits},   {"bob_bits", bob_bits},       {"eve_bases", eve_bases},
              {"eve_bits", eve_bits}};
}

Json exchange(int step, const char* channel, const char* from, const char* to, const char* item,
              std::uint64_t bits) {
  return Json{{"step", step}, {"channel", channel}, {"from", from},
              {"to", to},     {"item", item},       {"size", bits}};
}

}  // namespace

std::string bits_to_string(std::span<const Bit> bits) {
  std::string s;
  s.reserve(bits.size());
  for (Bit b : bits) s += static_cast<char>('0' + b);
  return s;
}

std::string session_to_json(const SessionConfig& config, const SessionResult& result) {
  const Transcript& t = result.transcript;
  const SessionOutcome& o = result.outcome;

  Json outcome;
  outcome["status"] = status_name(o.status);
  outcome["observed_check_error"] = o.observed_check_error;
  if (o.d_check_error) outcome["d_check_error"] = *o.d_check_error;
  if (o.status == SessionStatus::kDelivered) {
    std::size_t errors = 0;
    for (std::size_t i = 0; i < t.n; ++i) errors += o.message_out[i] != t.N[i];
    outcome["message_out"] = bits_to_string(o.message_out);
    outcome["bit_errors"] = errors;
  } else {
    outcome["message_out"] = nullptr;
  }

  Json tr;
  tr["n"] = t.n;
  tr["N"] = bits_to_string(t.N);
  tr["N1"] = bits_to_string(t.N1);
  tr["rounds"] = rounds_json(t.rounds);
  tr["extra_rounds"] = t.extra_rounds;
  tr["sifted_positions"] = t.sifted_positions;
  tr["discarded_positions"] = t.discarded_positions;
  tr["P"] = bits_to_string(t.P);
  tr["Q"] = bits_to_string(t.Q);
  tr["pad_positions"] = t.pad_positions;
  tr["A"] = bits_to_string(t.A);
  tr["d"] = t.d;
  tr["G"] = bits_to_string(t.G);
  tr["check_positions"] = t.check_positions;
  if (config.case_mode == CaseMode::kCaseII) tr["d_check_positions"] = t.d_check_positions;
  tr["message_ranks"] = t.message_ranks;
  tr["pad_ranks"] = t.pad_ranks;
  tr["flip_positions"] = t.flip_positions;
  tr["classical_bits_sent"] = ledger_json(t.ledger);
  tr["classical_bits_sent_detailed"] = ledger_json(t.detailed_ledger);
  if (t.delivered) {
    tr["b_per_qubit"] = classical_ledger(t);
    tr["delivered"] = bits_to_string(*t.delivered);
  } else {
    tr["delivered"] = Json{{"abort", t.abort_reason}};
  }

  Json exchanges = Json::array();
  exchanges.push_back(exchange(2, "quantum", "alice", "bob", "entangled_pair_qubits", t.rounds_total()));
  exchanges.push_back(exchange(4, "classical", "alice", "bob", "bases", t.rounds_total()));
  exchanges.push_back(exchange(4, "classical", "bob", "alice", "bases", t.rounds_total()));
  const std::uint64_t checked = t.check_positions.size() + t.d_check_positions.size();
  exchanges.push_back(exchange(6, "classical", "bob", "alice", "check_bits_with_positions", checked));
  if (t.delivered) {
    exchanges.push_back(exchange(8, "classical", "alice", "bob", "pad_G", t.G.size()));
    exchanges.push_back(exchange(10, "classical", "alice", "bob", "flip_mask", t.message_ranks.size()));
  }

  Json doc;
  doc["format"] = "qdsqc-session/1";
  doc["config"] = config_json(config);
  doc["outcome"] = std::move(outcome);
  doc["transcript"] = std::move(tr);
  doc["exchanges"] = std::move(exchanges);
  return doc.dump(2) + "\n";
}

std::string case_report_to_json(const CaseReport& r) {
  Json j;
  j["format"] = "qdsqc-case/1";
  j["mode"] = case_mode_name(r.mode);
  j["n"] = r.n;
  j["concurrence_r"] = r.c_r;
  j["concurrence_d"] = r.c_d;
  j["seed"] = r.seed;
  j["status"] = r.aborted ? "aborted_eve_detected" : "completed";
  if (r.aborted) j["abort_reason"] = r.abort_reason;
  j["pairs_consumed"] = r.pairs_consumed;
  j["sifted_bits"] = r.sifted_bits;
  j["error_free_bits"] = r.error_free_bits;
  j["delivered_error_count"] = r.delivered_error_count;
  j["check_bits"] = r.check_bits;
  j["check_error"] = r.check_error;
  if (r.d_check_error) {
    j["d_check_bits"] = r.d_check_bits;
    j["d_check_error"] = *r.d_check_error;
  }
  return j.dump(2) + "\n";
}

}  // namespace qdsqc
