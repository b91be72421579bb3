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

#ifndef SOFTGAME_ERROR_H_
#define SOFTGAME_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace softgame {

enum class ErrorCode {
  kKindMismatch,
  kInvalidValue,
  kNotLinearlyOrdered,
  kNotASemiring,
  kUnknownVariable,
  kInvalidProblem,
  kNotClassical,
  kUnknownPlayer,
  kInvalidGame,
  kTooFewVariables,
  kNotOrderPreserving,
  kCeilingTooSmall,
  kVariableMismatch,
  kDomainMismatch,
  kInvalidConfig,
  kParseError,
};

// Stable names used in CLI diagnostics and reports.
std::string_view ErrorName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }
  std::string_view name() const { return ErrorName(code_); }

 private:
  ErrorCode code_;
};

}  // namespace softgame

#endif  // SOFTGAME_ERROR_H_
