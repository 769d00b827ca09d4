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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <fmt/format.h>

#include "qdsqc/analysis.hpp"
#include "qdsqc/errors.hpp"

namespace qdsqc {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view want) {
  throw Error(ErrorCode::kInvalidArgument,
              fmt::format("{}: cannot parse '{}' as {}", key, value, want));
}

std::uint64_t to_u64(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  int base = 10;
  if (v.starts_with("0x") || v.starts_with("0X")) {
    v.remove_prefix(2);
    base = 16;
  }
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out, base);
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, v, "an unsigned integer");
  return out;
}

double to_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) {
    bad_value(key, v, "a number");
  }
  return out;
}

bool to_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad_value(key, v, "a boolean");
}

std::optional<double> to_threshold(std::string_view key, std::string_view v) {
  if (v == "auto") return std::nullopt;
  return to_double(key, v);
}

PrepPolicy::Kind to_prep(std::string_view key, std::string_view v) {
  if (v == "uniform") return PrepPolicy::Kind::kUniform;
  if (v == "per_basis") return PrepPolicy::Kind::kPerBasis;
  bad_value(key, v, "uniform|per_basis|auto");
}

CaseMode to_case_mode(std::string_view key, std::string_view v) {
  if (v == "plain") return CaseMode::kPlain;
  if (v == "i" || v == "case_i") return CaseMode::kCaseI;
  if (v == "ii" || v == "case_ii") return CaseMode::kCaseII;
  bad_value(key, v, "plain|i|ii");
}

AdversaryKind to_adversary(std::string_view key, std::string_view v) {
  if (v == "ideal") return AdversaryKind::kIdeal;
  if (v == "intercept" || v == "intercept_resend") return AdversaryKind::kInterceptResend;
  bad_value(key, v, "ideal|intercept");
}

BasisStrategy to_strategy(std::string_view key, std::string_view v) {
  if (auto s = parse_strategy(v)) return *s;
  bad_value(key, v, "uniform|always_r|always_d|fixed_angle");
}

std::vector<std::string> split_list(std::string_view v) {
  std::vector<std::string> out;
  while (!v.empty()) {
    const auto comma = v.find(',');
    const auto item = trim(v.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    v.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<std::string> to_strategies(std::string_view key, std::string_view v) {
  auto names = split_list(v);
  if (names.empty()) bad_value(key, v, "a strategy list");
  for (const auto& name : names) {
    if (!strategy_by_name(name)) bad_value(key, name, "ideal|uniform|always_r|always_d|fixed_angle");
  }
  return names;
}

using Validator = std::function<void(std::string_view, std::string_view)>;

const std::vector<std::pair<std::string, Validator>>& key_table() {
  static const std::vector<std::pair<std::string, Validator>> table = {
      {"n", [](auto k, auto v) { to_u64(k, v); }},
      {"message", [](auto, auto v) { parse_message(v); }},
      {"prep_policy", [](auto k, auto v) { if (v != "auto") to_prep(k, v); }},
      {"concurrence", [](auto k, auto v) { to_double(k, v); }},
      {"concurrence_r", [](auto k, auto v) { to_double(k, v); }},
      {"concurrence_d", [](auto k, auto v) { to_double(k, v); }},
      {"check_fraction", [](auto k, auto v) { to_double(k, v); }},
      {"abort_threshold", [](auto k, auto v) { to_threshold(k, v); }},
      {"d_abort_threshold", [](auto k, auto v) { to_threshold(k, v); }},
      {"adversary", [](auto k, auto v) { to_adversary(k, v); }},
      {"intercept_probability", [](auto k, auto v) { to_double(k, v); }},
      {"eve_strategy", [](auto k, auto v) { to_strategy(k, v); }},
      {"eve_angle", [](auto k, auto v) { to_double(k, v); }},
      {"seed", [](auto k, auto v) { to_u64(k, v); }},
      {"exclude_check_bits_from_message", [](auto k, auto v) { to_bool(k, v); }},
      {"case_mode", [](auto k, auto v) { to_case_mode(k, v); }},
      {"top_up", [](auto k, auto v) { to_bool(k, v); }},
      {"grid", [](auto, auto v) { parse_grid(v); }},
      {"rounds", [](auto k, auto v) { to_u64(k, v); }},
      {"trials", [](auto k, auto v) { to_u64(k, v); }},
      {"strategies", [](auto k, auto v) { to_strategies(k, v); }},
      {"format", [](auto k, auto v) { if (v != "json" && v != "csv") bad_value(k, v, "json|csv"); }},
      {"output", [](auto, auto) {}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& ConfigStore::known_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& [k, _] : key_table()) out.push_back(k);
    return out;
  }();
  return keys;
}

void ConfigStore::set(std::string_view key, std::string_view value) {
  const auto& table = key_table();
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == key; });
  if (it == table.end()) throw Error(ErrorCode::kUnknownKey, fmt::format("unknown key '{}'", key));
  const auto v = trim(value);
  it->second(key, v);
  values_.insert_or_assign(std::string(key), std::string(v));
}

std::optional<std::string> ConfigStore::get(std::string_view key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void ConfigStore::parse_text(std::string_view text, std::string_view origin) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("{}:{}: expected 'key = value'", origin, line_no));
    }
    try {
      set(trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("{}:{}: {}", origin, line_no, e.what()));
    }
  }
}

void ConfigStore::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, fmt::format("cannot open config file '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  parse_text(buf.str(), path);
}

RunSpec ConfigStore::resolve() const {
  RunSpec spec;
  SessionConfig& s = spec.session;
  const auto value = [this](std::string_view key) { return get(key); };

  if (auto v = value("n")) s.n = static_cast<std::size_t>(to_u64("n", *v));
  if (auto v = value("message")) {
    spec.message = parse_message(*v);
    if (value("n") && s.n != spec.message->size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("n = {} but message has {} bits", s.n, spec.message->size()));
    }
    s.n = spec.message->size();
  }

  const double c = value("concurrence") ? to_double("concurrence", *value("concurrence")) : 1.0;
  const double c_r = value("concurrence_r") ? to_double("concurrence_r", *value("concurrence_r")) : 1.0;
  const double c_d = value("concurrence_d") ? to_double("concurrence_d", *value("concurrence_d")) : 1.0;
  const bool case_run = value("case_mode") && to_case_mode("case_mode", *value("case_mode")) != CaseMode::kPlain;
  PrepPolicy::Kind kind = (case_run || value("concurrence_r") || value("concurrence_d"))
                              ? PrepPolicy::Kind::kPerBasis
                              : PrepPolicy::Kind::kUniform;
  if (auto v = value("prep_policy"); v && *v != "auto") kind = to_prep("prep_policy", *v);
  s.prep = kind == PrepPolicy::Kind::kUniform ? PrepPolicy::uniform(c) : PrepPolicy::per_basis(c_r, c_d);

  if (auto v = value("check_fraction")) s.check_fraction = to_double("check_fraction", *v);
  if (auto v = value("abort_threshold")) s.abort_threshold = to_threshold("abort_threshold", *v);
  if (auto v = value("d_abort_threshold")) s.d_abort_threshold = to_threshold("d_abort_threshold", *v);
  if (auto v = value("adversary")) s.adversary.kind = to_adversary("adversary", *v);
  if (auto v = value("intercept_probability")) {
    s.adversary.intercept_probability = to_double("intercept_probability", *v);
  }
  if (auto v = value("eve_strategy")) s.adversary.strategy = to_strategy("eve_strategy", *v);
  if (auto v = value("eve_angle")) s.adversary.fixed_angle_deg = to_double("eve_angle", *v);
  if (auto v = value("seed")) s.seed = to_u64("seed", *v);
  if (auto v = value("exclude_check_bits_from_message")) {
    s.exclude_check_bits_from_message = to_bool("exclude_check_bits_from_message", *v);
  }
  if (auto v = value("case_mode")) s.case_mode = to_case_mode("case_mode", *v);
  if (auto v = value("top_up")) s.top_up = to_bool("top_up", *v);

  spec.grid = parse_grid(value("grid").value_or("0:1:0.1"));
  if (auto v = value("rounds")) spec.rounds = static_cast<std::size_t>(to_u64("rounds", *v));
  if (auto v = value("trials")) spec.trials = static_cast<std::size_t>(to_u64("trials", *v));
  spec.strategies = to_strategies("strategies", value("strategies").value_or("ideal,uniform,always_r,always_d"));
  spec.format = value("format").value_or("");
  spec.output = value("output").value_or("");
  return spec;
}

std::vector<double> parse_grid(std::string_view text) {
  text = trim(text);
  std::vector<double> grid;
  if (text.find(':') != std::string_view::npos) {
    std::vector<double> parts;
    std::string_view rest = text;
    for (int i = 0; i < 3; ++i) {
      const auto colon = rest.find(':');
      if ((i < 2) == (colon == std::string_view::npos)) bad_value("grid", text, "start:stop:step");
      parts.push_back(to_double("grid", trim(rest.substr(0, colon))));
      rest.remove_prefix(colon == std::string_view::npos ? rest.size() : colon + 1);
    }
    const double start = parts[0], stop = parts[1], step = parts[2];
    if (!(step > 0.0) || stop < start) bad_value("grid", text, "start:stop:step with step > 0, stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      // Snap to 12 decimals so 0.1 * 3 lands on 0.3.
      grid.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
  } else {
    for (const auto& item : split_list(text)) grid.push_back(to_double("grid", item));
  }
  if (grid.empty()) throw Error(ErrorCode::kInvalidArgument, "empty concurrence grid");
  return grid;
}

BitVector parse_message(std::string_view text) {
  text = trim(text);
  BitVector bits;
  if (text.starts_with("0x") || text.starts_with("0X")) {
    text.remove_prefix(2);
    for (char ch : text) {
      int nibble = 0;
      if (ch >= '0' && ch <= '9') nibble = ch - '0';
      else if (ch >= 'a' && ch <= 'f') nibble = ch - 'a' + 10;
      else if (ch >= 'A' && ch <= 'F') nibble = ch - 'A' + 10;
      else bad_value("message", text, "hex digits");
      for (int b = 3; b >= 0; --b) bits.push_back(static_cast<Bit>((nibble >> b) & 1));
    }
  } else {
    if (text.starts_with("0b")) text.remove_prefix(2);
    for (char ch : text) {
      if (ch != '0' && ch != '1') bad_value("message", text, "a 0/1 string");
      bits.push_back(static_cast<Bit>(ch - '0'));
    }
  }
  if (bits.empty()) bad_value("message", text, "a non-empty bit string");
  return bits;
}

}  // namespace qdsqc
