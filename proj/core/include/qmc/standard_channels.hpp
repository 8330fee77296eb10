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

#include "qmc/channel.hpp"

// Frequently used channels.
namespace qmc::channels {

QuantumChannel identity(Index n);

// rho -> U rho U^dag
QuantumChannel unitary(const Matrix& u);

// E0 = |0><0| + sqrt(1-p)|1><1|,  E1 = sqrt(p)|0><1|
QuantumChannel amplitude_damping(double p);

// rho -> sum_i |i><i| rho |i><i|
QuantumChannel completely_dephasing(Index n);

// Kraus {|1><0|, |0><1|}: the classical NOT gate acting on basis states.
QuantumChannel not_gate();

// Kraus |i+1 mod n><i|: a classical n-cycle.
QuantumChannel cyclic_shift(Index n);

}  // namespace qmc::channels
