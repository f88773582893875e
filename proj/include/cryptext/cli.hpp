// Copyright 2026 The cryptext Authors. All Rights Reserved.
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cryptext::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;  // operational failure, code on stderr
inline constexpr int kExitUsage = 2;

// Runs one command line. args[0] is the program name. Results go to `out`,
// diagnostics to `err`; `in` backs "--in -".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cryptext::cli
