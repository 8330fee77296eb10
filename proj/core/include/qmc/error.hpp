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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmc {

enum class ErrorKind {
  DimensionMismatch,
  NotTracePreserving,
  InvalidState,
  InvalidSubspace,
  ZeroSubspace,
  EigSolverFailure,
  NoStationaryState,
  DecompositionDiverged,
  NotOrthogonal,
  NotInvariant,
  UnequalDimensionsInBlock,
  NotIrreducible,
  CycleOrderingFailed,
  EquivalenceViolation,
  NotStochastic,
  BadInput,
};

std::string_view to_string(ErrorKind kind);

// True for failures caused by the input (exit status 1 in the CLI); false
// for numerical failures (exit status 2).
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qmc
