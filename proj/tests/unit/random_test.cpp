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

#include "qdsqc/random.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

namespace qdsqc {
namespace {

TEST(RandomStream, SameKeySameSequence) {
  RandomStream a(42, 3), b(42, 3), c(42, 4), d(43, 3);
  bool differs_c = false, differs_d = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    differs_c |= x != c.next_u64();
    differs_d |= x != d.next_u64();
  }
  EXPECT_TRUE(differs_c);
  EXPECT_TRUE(differs_d);
}

TEST(RandomStream, FrozenDraws) {
  // Values from an independent Python transcription of the stream; pins the
  // definition so outputs stay identical across platforms.
  EXPECT_EQ(mix64(0), 0u);
  EXPECT_EQ(mix64(1), 0x5692161D100B05E5ULL);
  RandomStream s(0, 0);
  EXPECT_EQ(s.next_u64(), 0xFFC88F119A2F0A78ULL);
  EXPECT_EQ(s.next_u64(), 0xEE9CF117E187EC49ULL);
  EXPECT_EQ(s.next_u64(), 0xBE5B35EB66B14462ULL);
  RandomStream t(42, 3);
  EXPECT_EQ(t.next_u64(), 0xF895CEE9E3C167AFULL);
  EXPECT_EQ(t.next_u64(), 0x60963967B7CFB9E0ULL);
}

TEST(RandomStream, UniformRangeAndMean) {
  RandomStream s(7);
  double sum = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / n, 0.5, 4 * std::sqrt(1.0 / 12.0 / n));
}

TEST(RandomStream, BelowStaysInRange) {
  RandomStream s(8);
  std::array<int, 7> counts{};
  for (int i = 0; i < 70000; ++i) ++counts[s.below(7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 4 * std::sqrt(10000 * 6.0 / 7.0));
}

TEST(RandomStream, SampleWithoutReplacement) {
  RandomStream s(9);
  const auto k = s.sample_without_replacement(100, 25);
  ASSERT_EQ(k.size(), 25u);
  EXPECT_TRUE(std::is_sorted(k.begin(), k.end()));
  EXPECT_EQ(std::set<std::size_t>(k.begin(), k.end()).size(), 25u);
  EXPECT_LT(k.back(), 100u);
  EXPECT_EQ(s.sample_without_replacement(5, 5), (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_THROW(s.sample_without_replacement(3, 4), std::invalid_argument);
}

TEST(DeriveSeed, DistinctPerIndex) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(1, i));
  EXPECT_EQ(seen.size(), 1000u);
}

}  // namespace
}  // namespace qdsqc
