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

#include "qdsqc/adversary.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "qdsqc/errors.hpp"

namespace qdsqc {
namespace {

struct WeightedAxis {
  double weight;
  MeasurementAxis axis;
};

std::vector<WeightedAxis> strategy_axes(const AdversaryModel& model) {
  switch (model.strategy) {
    case BasisStrategy::kUniformRD:
      return {{0.5, MeasurementAxis::of(Basis::kR)}, {0.5, MeasurementAxis::of(Basis::kD)}};
    case BasisStrategy::kAlwaysR:
      return {{1.0, MeasurementAxis::of(Basis::kR)}};
    case BasisStrategy::kAlwaysD:
      return {{1.0, MeasurementAxis::of(Basis::kD)}};
    case BasisStrategy::kFixedAngle:
      return {{1.0, MeasurementAxis{model.fixed_angle_deg}}};
  }
  return {};
}

// Bloch-sphere direction of a polarization axis: (cos 2a, sin 2a) in the Z-X
// plane, exact when 2a is a multiple of 90 degrees.
struct BlochAxis {
  double z;
  double x;
};

BlochAxis bloch_axis(MeasurementAxis axis) {
  const double doubled = std::fmod(2.0 * axis.angle_deg, 360.0);
  const double turns = (doubled < 0 ? doubled + 360.0 : doubled) / 90.0;
  if (turns == std::floor(turns)) {
    static constexpr BlochAxis kQuarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kQuarter[static_cast<int>(turns) % 4];
  }
  const double rad = doubled * std::numbers::pi / 180.0;
  return {std::cos(rad), std::sin(rad)};
}

}  // namespace

void AdversaryModel::validate() const {
  if (!(intercept_probability >= 0.0 && intercept_probability <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("intercept probability {} outside [0, 1]", intercept_probability));
  }
  if (!std::isfinite(fixed_angle_deg)) {
    throw Error(ErrorCode::kInvalidArgument, "fixed angle is not finite");
  }
}

std::string_view strategy_name(BasisStrategy strategy) noexcept {
  switch (strategy) {
    case BasisStrategy::kUniformRD: return "uniform";
    case BasisStrategy::kAlwaysR: return "always_r";
    case BasisStrategy::kAlwaysD: return "always_d";
    case BasisStrategy::kFixedAngle: return "fixed_angle";
  }
  return "?";
}

std::optional<BasisStrategy> parse_strategy(std::string_view name) noexcept {
  if (name == "uniform") return BasisStrategy::kUniformRD;
  if (name == "always_r") return BasisStrategy::kAlwaysR;
  if (name == "always_d") return BasisStrategy::kAlwaysD;
  if (name == "fixed_angle") return BasisStrategy::kFixedAngle;
  return std::nullopt;
}

TransmitResult transmit(const TwoQubitState& state, const AdversaryModel& model,
                        RandomStream& eve_stream) {
  if (model.kind == AdversaryKind::kIdeal) return {state, std::nullopt};

  // Fixed draw count per intercepted round keeps Eve's stream aligned with
  // the round index.
  const bool fires = eve_stream.uniform() < model.intercept_probability;
  if (!fires) return {state, std::nullopt};

  MeasurementAxis axis;
  std::optional<Basis> basis;
  switch (model.strategy) {
    case BasisStrategy::kUniformRD:
      basis = eve_stream.bit() ? Basis::kD : Basis::kR;
      axis = MeasurementAxis::of(*basis);
      break;
    case BasisStrategy::kAlwaysR:
      basis = Basis::kR;
      axis = MeasurementAxis::of(*basis);
      break;
    case BasisStrategy::kAlwaysD:
      basis = Basis::kD;
      axis = MeasurementAxis::of(*basis);
      break;
    case BasisStrategy::kFixedAngle:
      axis = MeasurementAxis{model.fixed_angle_deg};
      if (model.fixed_angle_deg == 0.0) basis = Basis::kR;
      if (model.fixed_angle_deg == 45.0) basis = Basis::kD;
      break;
  }
  auto m = measure(state, Qubit::kBob, axis, eve_stream.uniform());
  return {std::move(m.post_state), EveAction{axis, basis, m.outcome}};
}

double attack_error_oracle(double c, const AdversaryModel& model, Basis basis) {
  model.validate();
  if (!(c >= 0.0 && c <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("concurrence {} outside [0, 1]", c));
  }
  // Correlation form: for a +-1 observable pair, P(mismatch) = (1 - E) / 2.
  // The state's correlation tensor in the Z-X plane is diag(1, c), and Eve's
  // measure-and-resend keeps only the component of Bob's observable along her
  // axis.
  const BlochAxis n = bloch_axis(MeasurementAxis::of(basis));
  const double honest = 0.5 * (1.0 - (n.z * n.z + c * n.x * n.x));
  if (model.kind == AdversaryKind::kIdeal) return honest;

  double attacked = 0.0;
  for (const auto& [weight, axis] : strategy_axes(model)) {
    const BlochAxis u = bloch_axis(axis);
    const double e = (n.z * u.z + c * n.x * u.x) * (u.z * n.z + u.x * n.x);
    attacked += weight * 0.5 * (1.0 - e);
  }
  const double p = model.intercept_probability;
  return (1.0 - p) * honest + p * attacked;
}

}  // namespace qdsqc
