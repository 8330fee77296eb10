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

#include <string>

#include <nlohmann/json.hpp>

#include "qmc/classical.hpp"
#include "qmc/decomp.hpp"
#include "qmc/limits.hpp"
#include "qmc/noiseless.hpp"
#include "qmc/period.hpp"
#include "qmc/reach.hpp"
#include "qmc/spectral.hpp"

// JSON formats. Complex numbers are [re, im] pairs of finite doubles and
// matrices are arrays of rows. Parsers throw Error{BadInput} on malformed
// documents and let validation errors (NotTracePreserving, ...) through.
namespace qmc::json {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, Index rows, Index cols);

// {"dim": n, "kraus": [K1, K2, ...]}
Json channel_to_json(const QuantumChannel& channel);
QuantumChannel channel_from_json(const Json& j, const Tolerances& tol = {});

// {"dim": n, "matrix": rho}
Json state_to_json(const DensityOperator& state);
DensityOperator state_from_json(const Json& j, const Tolerances& tol = {});

// {"ambient_dim": n, "dim": k, "basis": [column_0, ...]}
Json subspace_to_json(const Subspace& sub);
Subspace subspace_from_json(const Json& j, const Tolerances& tol = {});

// {"n": n, "rows": [[...], ...]}
Json stochastic_to_json(const classical::StochasticMatrix& p);
classical::StochasticMatrix stochastic_from_json(const Json& j);

Json tolerances_to_json(const Tolerances& tol);

Json spectrum_to_json(const SpectrumReport& report);
Json reach_to_json(const ReachResult& result);
Json decomposition_to_json(const TwoLevelDecomposition& d);
Json limit_report_to_json(const LimitReport& report);
Json noiseless_to_json(const NoiselessResult& result);

Json parse(const std::string& text);

}  // namespace qmc::json
