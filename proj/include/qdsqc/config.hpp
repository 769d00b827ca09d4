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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdsqc/protocol.hpp"

namespace qdsqc {

// Everything one command-line invocation can configure, resolved from the
// flat key = value store below.
struct RunSpec {
  SessionConfig session;
  std::optional<BitVector> message;
  std::vector<double> grid;
  std::size_t rounds = 100000;
  std::size_t trials = 100000;
  std::vector<std::string> strategies;
  std::string format;
  std::string output;
};

// Flat key = value configuration. Keys use the SessionConfig field names;
// later assignments replace earlier ones, so applying file contents before
// command-line values gives flags precedence over the file.
class ConfigStore {
 public:
  // Every key accepted by set(), in documentation order.
  static const std::vector<std::string>& known_keys();

  // Validates `key` and the syntax of `value`. Throws UnknownKey or
  // InvalidArgument.
  void set(std::string_view key, std::string_view value);

  std::optional<std::string> get(std::string_view key) const;

  // '#' starts a comment; blank lines are ignored. `origin` prefixes errors.
  void parse_text(std::string_view text, std::string_view origin = "config");
  void load_file(const std::string& path);

  // Applies defaults and cross-key rules. Range checks on the session are
  // left to run_session / run_case.
  RunSpec resolve() const;

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

// "0:1:0.1" (inclusive of stop, within 1e-9) or "0,0.5,1".
std::vector<double> parse_grid(std::string_view text);

// "0x..." hex (4 bits per digit, most significant first), or 0/1 characters
// with an optional "0b" prefix.
BitVector parse_message(std::string_view text);

}  // namespace qdsqc
