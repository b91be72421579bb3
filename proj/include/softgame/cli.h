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

#ifndef SOFTGAME_CLI_H_
#define SOFTGAME_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace softgame {

// Exit codes: 0 success, 1 domain error (or failed verification), 2 usage or
// parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;

// Runs one command. args excludes the program name. `in` backs the "-" path.
int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err);

}  // namespace softgame

#endif  // SOFTGAME_CLI_H_
