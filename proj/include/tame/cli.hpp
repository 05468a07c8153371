// Copyright 2026 The tame-certify Authors
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

#include <ostream>
#include <string>
#include <vector>

namespace tame::cli {

// Exit codes of every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

// Entry point of the tame-certify tool; argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

// Parses "7,13, 19" (empty string: empty list). Throws std::invalid_argument.
std::vector<unsigned long long> parse_prime_list(const std::string& text);

}  // namespace tame::cli
