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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qdsqc/errors.hpp"

namespace qdsqc {
namespace {

testing::Vec4 amps_of(const TwoQubitState& s) { return {s[0], s[1], s[2], s[3]}; }

// Mismatch rate over `trials` sifted rounds in `basis`, sampled through
// transmit() and measure().
double sampled_mismatch(const TwoQubitState& state, const AdversaryModel& model, Basis basis,
                        int trials, std::uint64_t seed) {
  RandomStream eve(seed, 1), a(seed, 2), b(seed, 3);
  int differ = 0;
  for (int i = 0; i < trials; ++i) {
    const auto ch = transmit(state, model, eve);
    const auto ma = measure(ch.state, Qubit::kAlice, basis, a.uniform());
    const auto mb = measure(ma.post_state, Qubit::kBob, basis, b.uniform());
    differ += ma.outcome != mb.outcome;
  }
  return differ / double(trials);
}

TEST(Transmit, IdealIsIdentity) {
  RandomStream eve(1);
  const auto s = prepare_state(0.8, 0.6);
  for (int i = 0; i < 10; ++i) {
    const auto out = transmit(s, AdversaryModel::ideal(), eve);
    EXPECT_FALSE(out.eve.has_value());
    for (int k = 0; k < 4; ++k) EXPECT_EQ(out.state[k], s[k]);
  }
  EXPECT_EQ(eve.draws(), 0u);
}

TEST(Transmit, InterceptRecordsEveAction) {
  RandomStream eve(2);
  const auto bell = prepare_with_concurrence(1.0);
  int r = 0, d = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto out = transmit(bell, AdversaryModel::intercept_resend(), eve);
    ASSERT_TRUE(out.eve.has_value());
    ASSERT_TRUE(out.eve->basis.has_value());
    (*out.eve->basis == Basis::kR ? r : d)++;
    // After Eve's measurement Bob's qubit is in her eigenstate.
    EXPECT_NEAR(outcome_probability(out.state, Qubit::kBob, out.eve->axis, out.eve->bit), 1.0, 1e-12);
  }
  EXPECT_NEAR(r, 500, 4 * std::sqrt(250.0));
}

TEST(Transmit, PartialInterceptionFiresAtRate) {
  RandomStream eve(3);
  const auto s = prepare_with_concurrence(1.0);
  int fired = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) fired += transmit(s, AdversaryModel::intercept_resend(0.3), eve).eve.has_value();
  EXPECT_NEAR(fired / double(n), 0.3, 4 * testing::binomial_sigma(0.3, n));
}

TEST(Transmit, FixedAngleOffProtocolAxisHasNoBasisTag) {
  RandomStream eve(4);
  const auto out = transmit(prepare_with_concurrence(1.0),
                            AdversaryModel::intercept_resend(1.0, BasisStrategy::kFixedAngle, 22.5), eve);
  ASSERT_TRUE(out.eve);
  EXPECT_FALSE(out.eve->basis.has_value());
  EXPECT_EQ(out.eve->axis.angle_deg, 22.5);
}

TEST(AttackOracle, FullUniformInterceptOnBellIsQuarter) {
  const auto model = AdversaryModel::intercept_resend();
  EXPECT_NEAR(attack_error_oracle(1.0, model, Basis::kR), 0.25, 1e-15);
  EXPECT_NEAR(attack_error_oracle(1.0, model, Basis::kD), 0.25, 1e-15);
  const auto bell = prepare_with_concurrence(1.0);
  EXPECT_NEAR(sampled_mismatch(bell, model, Basis::kR, 100000, 10), 0.25,
              4 * testing::binomial_sigma(0.25, 100000));
}

TEST(AttackOracle, IdealChannel) {
  for (int i = 0; i <= 10; ++i) {
    const double c = i / 10.0;
    EXPECT_EQ(attack_error_oracle(c, AdversaryModel::ideal(), Basis::kR), 0.0);
    EXPECT_NEAR(attack_error_oracle(c, AdversaryModel::ideal(), Basis::kD), 0.5 * (1.0 - c), 1e-12);
  }
}

TEST(AttackOracle, AlwaysRDestroysDCorrelation) {
  const auto model = AdversaryModel::intercept_resend(1.0, BasisStrategy::kAlwaysR);
  // prepare_state(0.8, 0.6) has C = 0.96.
  EXPECT_NEAR(attack_error_oracle(0.96, model, Basis::kD), 0.5, 1e-12);
  EXPECT_NEAR(sampled_mismatch(prepare_state(0.8, 0.6), model, Basis::kD, 100000, 11), 0.5,
              4 * testing::binomial_sigma(0.5, 100000));
  for (int i = 1; i <= 10; ++i) {
    EXPECT_EQ(attack_error_oracle(i / 10.0, model, Basis::kR), 0.0);
    EXPECT_NEAR(attack_error_oracle(i / 10.0, model, Basis::kD), 0.5, 1e-12);
  }
}

TEST(AttackOracle, MatchesKroneckerEnumeration) {
  for (double c : {0.0, 0.25, 0.5, 0.75, 0.96, 1.0}) {
    const auto psi = amps_of(prepare_with_concurrence(c));
    for (Basis basis : {Basis::kR, Basis::kD}) {
      const double party = basis_angle_deg(basis);
      const double uniform = 0.5 * testing::brute_attack_mismatch(psi, 0.0, party) +
                             0.5 * testing::brute_attack_mismatch(psi, 45.0, party);
      EXPECT_NEAR(attack_error_oracle(c, AdversaryModel::intercept_resend(), basis), uniform, 1e-12);
      EXPECT_NEAR(attack_error_oracle(c, AdversaryModel::intercept_resend(1.0, BasisStrategy::kAlwaysD), basis),
                  testing::brute_attack_mismatch(psi, 45.0, party), 1e-12);
      EXPECT_NEAR(attack_error_oracle(c, AdversaryModel::intercept_resend(1.0, BasisStrategy::kFixedAngle, 30.0),
                                      basis),
                  testing::brute_attack_mismatch(psi, 30.0, party), 1e-12);
      const double honest = testing::brute_joint(psi, party, party)[1] + testing::brute_joint(psi, party, party)[2];
      EXPECT_NEAR(attack_error_oracle(c, AdversaryModel::intercept_resend(0.4), basis), 0.6 * honest + 0.4 * uniform,
                  1e-12);
    }
  }
}

TEST(AttackOracle, MonteCarloAgreementGrid) {
  const std::vector<AdversaryModel> models = {
      AdversaryModel::ideal(),
      AdversaryModel::intercept_resend(),
      AdversaryModel::intercept_resend(1.0, BasisStrategy::kAlwaysR),
      AdversaryModel::intercept_resend(1.0, BasisStrategy::kAlwaysD),
      AdversaryModel::intercept_resend(0.5),
  };
  const int trials = 100000;
  std::uint64_t seed = 100;
  for (double c : {0.25, 0.5, 0.75, 1.0}) {
    const auto state = prepare_with_concurrence(c);
    for (const auto& model : models) {
      for (Basis basis : {Basis::kR, Basis::kD}) {
        const double p = attack_error_oracle(c, model, basis);
        const double est = sampled_mismatch(state, model, basis, trials, seed++);
        EXPECT_NEAR(est, p, 4 * testing::binomial_sigma(p, trials) + 1e-12)
            << "C=" << c << " strategy=" << strategy_name(model.strategy) << " basis=" << basis_letter(basis);
      }
    }
  }
}

TEST(AttackOracle, DetectionGap) {
  for (int i = 1; i <= 20; ++i) {
    const double c = i / 20.0;
    const auto model = AdversaryModel::intercept_resend();
    const double attacked = 0.5 * (attack_error_oracle(c, model, Basis::kR) + attack_error_oracle(c, model, Basis::kD));
    EXPECT_GT(attacked, 0.25 * (1.0 - c)) << c;
  }
}

TEST(AdversaryModel, Validation) {
  EXPECT_THROW(AdversaryModel::intercept_resend(1.5).validate(), Error);
  EXPECT_THROW(AdversaryModel::intercept_resend(-0.1).validate(), Error);
  EXPECT_NO_THROW(AdversaryModel::intercept_resend(0.0).validate());
  EXPECT_EQ(parse_strategy("always_r"), BasisStrategy::kAlwaysR);
  EXPECT_FALSE(parse_strategy("sometimes").has_value());
  for (auto s : {BasisStrategy::kUniformRD, BasisStrategy::kAlwaysR, BasisStrategy::kAlwaysD, BasisStrategy::kFixedAngle}) {
    EXPECT_EQ(parse_strategy(strategy_name(s)), s);
  }
}

}  // namespace
}  // namespace qdsqc
