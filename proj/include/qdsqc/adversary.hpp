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

#include <optional>
#include <string_view>

#include "qdsqc/random.hpp"
#include "qdsqc/statevector.hpp"

namespace qdsqc {

enum class AdversaryKind : std::uint8_t { kIdeal, kInterceptResend };

// How Eve picks her measurement axis when she intercepts.
enum class BasisStrategy : std::uint8_t { kUniformRD, kAlwaysR, kAlwaysD, kFixedAngle };

struct AdversaryModel {
  AdversaryKind kind = AdversaryKind::kIdeal;
  double intercept_probability = 1.0;
  BasisStrategy strategy = BasisStrategy::kUniformRD;
  double fixed_angle_deg = 0.0;

  static AdversaryModel ideal() { return {}; }
  static AdversaryModel intercept_resend(double probability = 1.0,
                                         BasisStrategy strategy = BasisStrategy::kUniformRD,
                                         double fixed_angle_deg = 0.0) {
    return {AdversaryKind::kInterceptResend, probability, strategy, fixed_angle_deg};
  }

  // Throws InvalidArgument for an out-of-range probability or angle.
  void validate() const;
};

std::string_view strategy_name(BasisStrategy strategy) noexcept;
std::optional<BasisStrategy> parse_strategy(std::string_view name) noexcept;

// What Eve did to one pair. `basis` is empty for FixedAngle axes other than
// 0 or 45 degrees.
struct EveAction {
  MeasurementAxis axis;
  std::optional<Basis> basis;
  Bit bit = 0;
};

struct TransmitResult {
  TwoQubitState state;
  std::optional<EveAction> eve;
};

// Passes Bob's qubit through the channel. Intercept-resend is modelled as a
// projective measurement of qubit 2: resending the measured eigenstate leaves
// the pair in exactly the collapsed state.
TransmitResult transmit(const TwoQubitState& state, const AdversaryModel& model,
                        RandomStream& eve_stream);

// Exact P(Alice's bit != Bob's bit) for a sifted round in `basis` on a pair
// of concurrence c, averaged over the interception event, Eve's axis and
// Eve's outcome. No sampling.
double attack_error_oracle(double c, const AdversaryModel& model, Basis basis);

}  // namespace qdsqc
