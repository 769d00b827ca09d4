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
#include <vector>

namespace qdsqc {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Child seed for item `index` of a run keyed by `master`. Used for per-session
// and per-sweep-point streams so results do not depend on scheduling order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

// Counter-based generator: draw i is mix64(key + (i + 1) * golden), so a
// stream is fully determined by (seed, stream_id) and the number of draws.
// Every conversion below is written out explicitly; nothing goes through
// <random> distributions, whose output is implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept;

  std::uint64_t next_u64() noexcept;

  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform() noexcept;

  // Uniform integer on [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  bool bit() noexcept { return (next_u64() >> 63) != 0; }

  // k distinct indices from [0, population), ascending.
  std::vector<std::size_t> sample_without_replacement(std::size_t population,
                                                      std::size_t k);

  std::uint64_t draws() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace qdsqc
