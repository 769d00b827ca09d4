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

#include "qdsqc/statevector.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "qdsqc/errors.hpp"

namespace qdsqc {
namespace {

struct AxisVectors {
  std::array<double, 2> e0;
  std::array<double, 2> e1;
};

AxisVectors axis_vectors(MeasurementAxis axis) noexcept {
  const double a = axis.angle_deg * std::numbers::pi / 180.0;
  // Exact values at the protocol angles keep R/D probabilities free of
  // trig round-off.
  double c = std::cos(a);
  double s = std::sin(a);
  if (axis.angle_deg == 0.0) {
    c = 1.0;
    s = 0.0;
  } else if (axis.angle_deg == 45.0) {
    c = s = std::numbers::sqrt2 / 2.0;
  }
  return {{c, s}, {-s, c}};
}

const std::array<double, 2>& outcome_vector(const AxisVectors& v, Bit outcome) noexcept {
  return outcome == 0 ? v.e0 : v.e1;
}

// Unnormalized projection of `amps` onto outcome `k` of `qubit`.
std::array<Amplitude, 4> project(const std::array<Amplitude, 4>& amps, Qubit qubit,
                                 const std::array<double, 2>& e) noexcept {
  std::array<Amplitude, 4> out{};
  if (qubit == Qubit::kAlice) {
    for (int j = 0; j < 2; ++j) {
      const Amplitude r = e[0] * amps[j] + e[1] * amps[2 + j];
      out[j] = e[0] * r;
      out[2 + j] = e[1] * r;
    }
  } else {
    for (int i = 0; i < 2; ++i) {
      const Amplitude r = e[0] * amps[2 * i] + e[1] * amps[2 * i + 1];
      out[2 * i] = r * e[0];
      out[2 * i + 1] = r * e[1];
    }
  }
  return out;
}

double sum_norm(const std::array<Amplitude, 4>& amps) noexcept {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

}  // namespace

double basis_angle_deg(Basis basis) noexcept { return basis == Basis::kR ? 0.0 : 45.0; }

char basis_letter(Basis basis) noexcept { return basis == Basis::kR ? 'R' : 'D'; }

TwoQubitState TwoQubitState::from_amplitudes(const std::array<Amplitude, 4>& amps) {
  for (const auto& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw Error(ErrorCode::kNotNormalized, "amplitude is not finite");
    }
  }
  const double n2 = sum_norm(amps);
  if (std::abs(n2 - 1.0) > kPreconditionTolerance) {
    throw Error(ErrorCode::kNotNormalized,
                fmt::format("state norm squared is {:.17g}, expected 1", n2));
  }
  std::array<Amplitude, 4> normalized = amps;
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& a : normalized) a *= scale;
  return TwoQubitState(normalized);
}

double TwoQubitState::norm_squared() const noexcept { return sum_norm(amps_); }

TwoQubitState prepare_state(Amplitude alpha, Amplitude beta) {
  return TwoQubitState::from_amplitudes({alpha, Amplitude{}, Amplitude{}, beta});
}

TwoQubitState prepare_from_angle(double theta_deg) {
  if (!(theta_deg > 0.0 && theta_deg <= 45.0)) {
    throw Error(ErrorCode::kAngleOutOfRange,
                fmt::format("preparation angle {} deg outside (0, 45]", theta_deg));
  }
  const double eps = theta_deg == 45.0 ? 1.0 : std::tan(theta_deg * std::numbers::pi / 180.0);
  const double k = 1.0 / std::sqrt(eps * eps + 1.0);
  return prepare_state(eps * k, k);
}

TwoQubitState prepare_with_concurrence(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("concurrence {} outside [0, 1]", c));
  }
  // (beta + alpha)^2 = 1 + c and (beta - alpha)^2 = 1 - c.
  const double plus = std::sqrt(1.0 + c);
  const double minus = std::sqrt(1.0 - c);
  return prepare_state((plus - minus) / 2.0, (plus + minus) / 2.0);
}

double concurrence(const TwoQubitState& state) noexcept {
  const double c = 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]);
  return c > 1.0 ? 1.0 : c;
}

double outcome_probability(const TwoQubitState& state, Qubit qubit, MeasurementAxis axis,
                           Bit outcome) noexcept {
  const AxisVectors v = axis_vectors(axis);
  double p0 = sum_norm(project(state.amplitudes(), qubit, v.e0));
  if (p0 < kDegenerateProbability) p0 = 0.0;
  if (p0 > 1.0 - kDegenerateProbability) p0 = 1.0;
  return outcome == 0 ? p0 : 1.0 - p0;
}

MeasurementResult collapse(const TwoQubitState& state, Qubit qubit, MeasurementAxis axis,
                           Bit outcome) {
  const double p = outcome_probability(state, qubit, axis, outcome);
  if (p < kDegenerateProbability) {
    throw Error(ErrorCode::kDegenerateProjection,
                fmt::format("selected outcome {} has probability {}", outcome, p));
  }
  const AxisVectors v = axis_vectors(axis);
  auto post = project(state.amplitudes(), qubit, outcome_vector(v, outcome));
  const double scale = 1.0 / std::sqrt(sum_norm(post));
  for (auto& a : post) a *= scale;
  return {outcome, TwoQubitState::from_amplitudes(post), p};
}

MeasurementResult measure(const TwoQubitState& state, Qubit qubit, MeasurementAxis axis,
                          double u) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("u = {} outside [0, 1)", u));
  }
  const double p0 = outcome_probability(state, qubit, axis, 0);
  return collapse(state, qubit, axis, u < p0 ? 0 : 1);
}

std::array<double, 4> joint_distribution(const TwoQubitState& state, MeasurementAxis axis1,
                                         MeasurementAxis axis2) noexcept {
  const AxisVectors v1 = axis_vectors(axis1);
  const AxisVectors v2 = axis_vectors(axis2);
  std::array<double, 4> probs{};
  for (Bit b1 = 0; b1 < 2; ++b1) {
    const auto& e1 = outcome_vector(v1, b1);
    for (Bit b2 = 0; b2 < 2; ++b2) {
      const auto& e2 = outcome_vector(v2, b2);
      Amplitude overlap{};
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) overlap += e1[i] * e2[j] * state[2 * i + j];
      }
      probs[2 * b1 + b2] = std::norm(overlap);
    }
  }
  return probs;
}

double mismatch_probability(const TwoQubitState& state, MeasurementAxis axis1,
                            MeasurementAxis axis2) noexcept {
  const auto p = joint_distribution(state, axis1, axis2);
  return p[1] + p[2];
}

}  // namespace qdsqc
