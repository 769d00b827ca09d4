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

#include <array>
#include <complex>
#include <cstdint>

namespace qdsqc {

using Amplitude = std::complex<double>;
using Bit = std::uint8_t;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kPreconditionTolerance = 1e-9;
inline constexpr double kDegenerateProbability = 1e-15;

// Protocol-level bases. R measures along 0/90 degrees, D along 45/135; the
// first direction of each pair reads as bit 0.
enum class Basis : std::uint8_t { kR = 0, kD = 1 };

double basis_angle_deg(Basis basis) noexcept;
char basis_letter(Basis basis) noexcept;

// Linear-polarization axis at an arbitrary angle. Outcome 0 projects onto
// cos(a)|0> + sin(a)|1>, outcome 1 onto -sin(a)|0> + cos(a)|1>.
struct MeasurementAxis {
  double angle_deg = 0.0;

  static MeasurementAxis of(Basis basis) noexcept { return {basis_angle_deg(basis)}; }
};

// Qubit 1 is Alice's half of the pair, qubit 2 travels to Bob.
enum class Qubit : std::uint8_t { kAlice = 1, kBob = 2 };

// Pure two-qubit state, amplitudes ordered |00>, |01>, |10>, |11> with
// Alice's qubit as the high bit. Always normalized to kNormTolerance.
class TwoQubitState {
 public:
  // Validates the norm to kPreconditionTolerance, then renormalizes.
  static TwoQubitState from_amplitudes(const std::array<Amplitude, 4>& amps);

  const std::array<Amplitude, 4>& amplitudes() const noexcept { return amps_; }
  const Amplitude& operator[](std::size_t k) const noexcept { return amps_[k]; }

  double norm_squared() const noexcept;

 private:
  explicit TwoQubitState(const std::array<Amplitude, 4>& amps) noexcept : amps_(amps) {}

  std::array<Amplitude, 4> amps_;
};

struct MeasurementResult {
  Bit outcome = 0;
  TwoQubitState post_state;
  double probability = 0.0;
};

// alpha|00> + beta|11>. Throws NotNormalized unless |alpha|^2 + |beta|^2 = 1.
TwoQubitState prepare_state(Amplitude alpha, Amplitude beta);

// (tan(theta)|00> + |11>) / sqrt(tan^2(theta) + 1), 0 < theta <= 45 degrees.
TwoQubitState prepare_from_angle(double theta_deg);

// Real non-negative alpha <= beta with 2*alpha*beta = c, for c in [0, 1].
// Same family as prepare_from_angle, extended to the product state at c = 0.
TwoQubitState prepare_with_concurrence(double c);

// 2|ad - bc| for amplitudes (a, b, c, d).
double concurrence(const TwoQubitState& state) noexcept;

// Probability that measuring `qubit` along `axis` yields `outcome`.
double outcome_probability(const TwoQubitState& state, Qubit qubit, MeasurementAxis axis,
                           Bit outcome) noexcept;

// Post-measurement state for a given outcome. Throws DegenerateProjection if
// that outcome has probability below kDegenerateProbability.
MeasurementResult collapse(const TwoQubitState& state, Qubit qubit, MeasurementAxis axis,
                           Bit outcome);

// Projective measurement of one qubit. Outcome 0 iff u < P(0).
MeasurementResult measure(const TwoQubitState& state, Qubit qubit, MeasurementAxis axis,
                          double u);

inline MeasurementResult measure(const TwoQubitState& state, Qubit qubit, Basis basis,
                                 double u) {
  return measure(state, qubit, MeasurementAxis::of(basis), u);
}

// Exact outcome distribution when Alice measures along axis1 and Bob along
// axis2; entry 2*b1 + b2 holds P(b1, b2).
std::array<double, 4> joint_distribution(const TwoQubitState& state, MeasurementAxis axis1,
                                         MeasurementAxis axis2) noexcept;

inline std::array<double, 4> joint_distribution(const TwoQubitState& state, Basis basis1,
                                                Basis basis2) noexcept {
  return joint_distribution(state, MeasurementAxis::of(basis1), MeasurementAxis::of(basis2));
}

// P(b1 != b2) under joint_distribution.
double mismatch_probability(const TwoQubitState& state, MeasurementAxis axis1,
                            MeasurementAxis axis2) noexcept;

}  // namespace qdsqc
