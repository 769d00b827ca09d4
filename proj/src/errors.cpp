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

#include "qdsqc/errors.hpp"

namespace qdsqc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kAngleOutOfRange: return "AngleOutOfRange";
    case ErrorCode::kDegenerateProjection: return "DegenerateProjection";
    case ErrorCode::kEmptyCheckSet: return "EmptyCheckSet";
    case ErrorCode::kPadShortfall: return "PadShortfall";
    case ErrorCode::kLedgerModeMismatch: return "LedgerModeMismatch";
    case ErrorCode::kUnknownKey: return "UnknownKey";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace qdsqc
