// Copyright 2026 The qmc Authors
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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmc/tolerances.hpp"

namespace qmc::cli {

struct CliConfig {
  std::string command;  // validate, spectrum, reach, decompose, period, limit, findmaxns, embed
  std::string input_path;
  std::optional<std::string> output_path;
  std::optional<std::string> state_path;  // reach only
  Tolerances tol{};
  std::optional<std::uint64_t> seed;
  std::size_t m_max = 0;
  std::string format = "json";  // json | text
};

struct RunResult {
  int status = 0;    // 0 ok, 1 input error, 2 numerical failure
  std::string out;   // report, empty when written to output_path
  std::string err;   // JSON error object
};

const std::vector<std::string>& commands();

RunResult run(const CliConfig& config);

// Parses argv and runs; prints to stdout/stderr and returns the exit status.
int main_entry(int argc, char** argv);

}  // namespace qmc::cli
