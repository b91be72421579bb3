// Copyright 2026 The Softgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "softgame/error.h"

namespace softgame {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kInvalidValue: return "InvalidValue";
    case ErrorCode::kNotLinearlyOrdered: return "NotLinearlyOrdered";
    case ErrorCode::kNotASemiring: return "NotASemiring";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kInvalidProblem: return "InvalidProblem";
    case ErrorCode::kNotClassical: return "NotClassical";
    case ErrorCode::kUnknownPlayer: return "UnknownPlayer";
    case ErrorCode::kInvalidGame: return "InvalidGame";
    case ErrorCode::kTooFewVariables: return "TooFewVariables";
    case ErrorCode::kNotOrderPreserving: return "NotOrderPreserving";
    case ErrorCode::kCeilingTooSmall: return "CeilingTooSmall";
    case ErrorCode::kVariableMismatch: return "VariableMismatch";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorName(code)) + ": " + message),
      code_(code) {}

}  // namespace softgame
