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

#include "qdsqc/config.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "qdsqc/errors.hpp"

namespace qdsqc {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kIo;
}

TEST(ConfigStore, DefaultsResolve) {
  const RunSpec spec = ConfigStore{}.resolve();
  EXPECT_EQ(spec.session.n, 1000u);
  EXPECT_EQ(spec.session.prep.kind, PrepPolicy::Kind::kUniform);
  EXPECT_EQ(spec.session.prep.c, 1.0);
  EXPECT_FALSE(spec.session.abort_threshold);
  EXPECT_FALSE(spec.message);
  EXPECT_EQ(spec.grid.size(), 11u);
  EXPECT_EQ(spec.strategies, (std::vector<std::string>{"ideal", "uniform", "always_r", "always_d"}));
  EXPECT_EQ(spec.rounds, 100000u);
}

TEST(ConfigStore, ParsesTextWithComments) {
  ConfigStore store;
  store.parse_text(
      "# session\n"
      "n = 64\n"
      "\n"
      "concurrence = 0.8   # inline\n"
      "adversary=intercept\n"
      "intercept_probability = 0.5\n"
      "eve_strategy = fixed_angle\n"
      "eve_angle = 22.5\n"
      "seed = 0x10\n"
      "abort_threshold = auto\n"
      "top_up = false\n"
      "case_mode = plain\n");
  const auto s = store.resolve().session;
  EXPECT_EQ(s.n, 64u);
  EXPECT_EQ(s.prep.c, 0.8);
  EXPECT_EQ(s.adversary.kind, AdversaryKind::kInterceptResend);
  EXPECT_EQ(s.adversary.intercept_probability, 0.5);
  EXPECT_EQ(s.adversary.strategy, BasisStrategy::kFixedAngle);
  EXPECT_EQ(s.adversary.fixed_angle_deg, 22.5);
  EXPECT_EQ(s.seed, 16u);
  EXPECT_FALSE(s.abort_threshold);
  EXPECT_FALSE(s.top_up);
  EXPECT_EQ(store.get("concurrence"), "0.8");
}

TEST(ConfigStore, ErrorsCarryLineNumbers) {
  ConfigStore store;
  try {
    store.parse_text("n = 10\nbogus = 1\n", "my.cfg");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownKey);
    EXPECT_EQ(std::string(e.what()).rfind("my.cfg:2:", 0), 0u) << e.what();
  }
  EXPECT_EQ(code_of([&] { store.parse_text("n 10\n"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { store.set("n", "ten"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { store.set("concurrence", "0.5x"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { store.set("eve_strategy", "sideways"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { store.set("top_up", "maybe"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { store.set("format", "xml"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { store.set("strategies", "ideal,nope"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { store.load_file("/nonexistent/qdsqc.cfg"); }), ErrorCode::kIo);
}

TEST(ConfigStore, LaterValuesOverride) {
  const auto path = std::filesystem::temp_directory_path() / "qdsqc_config_test.cfg";
  std::ofstream(path) << "seed = 5\nn = 32\n";
  ConfigStore store;
  store.set("seed", "1");
  store.load_file(path.string());
  EXPECT_EQ(store.resolve().session.seed, 5u);
  store.set("seed", "9");
  EXPECT_EQ(store.resolve().session.seed, 9u);
  EXPECT_EQ(store.resolve().session.n, 32u);
  std::filesystem::remove(path);
}

TEST(ConfigStore, PerBasisSelection) {
  ConfigStore store;
  store.set("concurrence_d", "0.5");
  auto prep = store.resolve().session.prep;
  EXPECT_EQ(prep.kind, PrepPolicy::Kind::kPerBasis);
  EXPECT_EQ(prep.c_r, 1.0);
  EXPECT_EQ(prep.c_d, 0.5);
  store.set("prep_policy", "uniform");
  store.set("concurrence", "0.7");
  prep = store.resolve().session.prep;
  EXPECT_EQ(prep.kind, PrepPolicy::Kind::kUniform);
  EXPECT_EQ(prep.concurrence_for(Basis::kD), 0.7);
  store.set("case_mode", "case_ii");
  EXPECT_EQ(store.resolve().session.case_mode, CaseMode::kCaseII);

  ConfigStore case_only;
  case_only.set("case_mode", "i");
  EXPECT_EQ(case_only.resolve().session.prep.kind, PrepPolicy::Kind::kPerBasis);
}

TEST(ConfigStore, MessageFixesLength) {
  ConfigStore store;
  store.set("message", "0xA5");
  auto spec = store.resolve();
  EXPECT_EQ(spec.session.n, 8u);
  EXPECT_EQ(*spec.message, (BitVector{1, 0, 1, 0, 0, 1, 0, 1}));
  store.set("n", "8");
  EXPECT_NO_THROW(store.resolve());
  store.set("n", "9");
  EXPECT_EQ(code_of([&] { store.resolve(); }), ErrorCode::kInvalidArgument);
}

TEST(ConfigStore, KnownKeysAreSettable) {
  EXPECT_EQ(ConfigStore::known_keys().front(), "n");
  ConfigStore store;
  for (const auto& key : ConfigStore::known_keys()) {
    EXPECT_FALSE(store.get(key)) << key;
  }
  EXPECT_FALSE(store.get("bogus"));
}

TEST(ParseGrid, RangesAndLists) {
  const auto g = parse_grid("0:1:0.1");
  ASSERT_EQ(g.size(), 11u);
  EXPECT_EQ(g[3], 0.3);
  EXPECT_EQ(g[10], 1.0);
  EXPECT_EQ(parse_grid("0.2:0.3:0.25"), (std::vector<double>{0.2}));
  EXPECT_EQ(parse_grid(" 0.5, 1 ,0"), (std::vector<double>{0.5, 1.0, 0.0}));
  EXPECT_THROW(parse_grid(""), Error);
  EXPECT_THROW(parse_grid("0:1"), Error);
  EXPECT_THROW(parse_grid("1:0:0.1"), Error);
  EXPECT_THROW(parse_grid("0:1:0"), Error);
}

TEST(ParseMessage, Forms) {
  EXPECT_EQ(parse_message("0b0110"), (BitVector{0, 1, 1, 0}));
  EXPECT_EQ(parse_message("101"), (BitVector{1, 0, 1}));
  EXPECT_EQ(parse_message("0x1F"), (BitVector{0, 0, 0, 1, 1, 1, 1, 1}));
  EXPECT_THROW(parse_message("0x1G"), Error);
  EXPECT_THROW(parse_message("1021"), Error);
}

}  // namespace
}  // namespace qdsqc
