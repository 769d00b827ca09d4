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

#include <span>
#include <string>

#include "qdsqc/analysis.hpp"
#include "qdsqc/protocol.hpp"

namespace qdsqc {

std::string bits_to_string(std::span<const Bit> bits);

// Session document: resolved config, outcome, transcript and the list of
// exchanges with the channel each one used. Key order is fixed, so equal
// inputs serialize to equal bytes.
std::string session_to_json(const SessionConfig& config, const SessionResult& result);

std::string case_report_to_json(const CaseReport& report);

}  // namespace qdsqc
