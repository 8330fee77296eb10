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

#include "qmc/json_io.hpp"

#include <cmath>
#include <string>

#include "qmc/error.hpp"

namespace qmc::json {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

Index positive_int(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    bad(std::string("field \"") + key + "\" must be a positive integer");
  }
  return static_cast<Index>(v.get<long long>());
}

double finite(const Json& v) {
  if (!v.is_number()) bad("expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) bad("non-finite number");
  return x;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {finite(j), 0.0};
  if (!j.is_array() || j.size() != 2) bad("complex numbers are [re, im] pairs");
  return {finite(j[0]), finite(j[1])};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    bad("matrix must have " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      bad("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    }
    for (Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Json channel_to_json(const QuantumChannel& channel) {
  Json kraus = Json::array();
  for (const Matrix& k : channel.kraus()) kraus.push_back(matrix_to_json(k));
  return Json{{"dim", channel.dim()}, {"kraus", std::move(kraus)}};
}

QuantumChannel channel_from_json(const Json& j, const Tolerances& tol) {
  const Index n = positive_int(j, "dim");
  const Json& ks = field(j, "kraus");
  if (!ks.is_array() || ks.empty()) bad("\"kraus\" must be a nonempty array");
  std::vector<Matrix> kraus;
  for (const Json& k : ks) kraus.push_back(matrix_from_json(k, n, n));
  return validate_channel(std::move(kraus), n, tol);
}

Json state_to_json(const DensityOperator& state) {
  return Json{{"dim", state.dim()}, {"matrix", matrix_to_json(state.matrix())}};
}

DensityOperator state_from_json(const Json& j, const Tolerances& tol) {
  const Index n = positive_int(j, "dim");
  return DensityOperator(matrix_from_json(field(j, "matrix"), n, n), tol);
}

Json subspace_to_json(const Subspace& sub) {
  Json cols = Json::array();
  for (Index c = 0; c < sub.dim(); ++c) {
    Json col = Json::array();
    for (Index r = 0; r < sub.ambient_dim(); ++r) col.push_back(complex_to_json(sub.basis()(r, c)));
    cols.push_back(std::move(col));
  }
  return Json{{"ambient_dim", sub.ambient_dim()}, {"dim", sub.dim()}, {"basis", std::move(cols)}};
}

Subspace subspace_from_json(const Json& j, const Tolerances& tol) {
  const Index n = positive_int(j, "ambient_dim");
  const Json& cols = field(j, "basis");
  if (!cols.is_array()) bad("\"basis\" must be an array of columns");
  Matrix b(n, static_cast<Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!cols[c].is_array() || static_cast<Index>(cols[c].size()) != n) {
      bad("basis column " + std::to_string(c) + " must have " + std::to_string(n) + " entries");
    }
    for (Index r = 0; r < n; ++r) b(r, static_cast<Index>(c)) = complex_from_json(cols[c][static_cast<std::size_t>(r)]);
  }
  return Subspace::from_orthonormal(std::move(b), tol);
}

Json stochastic_to_json(const classical::StochasticMatrix& p) {
  Json rows = Json::array();
  for (Index i = 0; i < p.n(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < p.n(); ++j) row.push_back(p(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"n", p.n()}, {"rows", std::move(rows)}};
}

classical::StochasticMatrix stochastic_from_json(const Json& j) {
  const Index n = positive_int(j, "n");
  const Json& rows = field(j, "rows");
  if (!rows.is_array() || static_cast<Index>(rows.size()) != n) bad("\"rows\" must have n rows");
  RealMatrix p(n, n);
  for (Index i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) bad("each row must have n entries");
    for (Index k = 0; k < n; ++k) p(i, k) = finite(row[static_cast<std::size_t>(k)]);
  }
  return classical::StochasticMatrix(std::move(p), 1e-9);
}

Json tolerances_to_json(const Tolerances& t) {
  return Json{{"cptp", t.cptp},         {"herm", t.herm},       {"psd", t.psd},
              {"trace", t.trace},       {"orth", t.orth},       {"apply", t.apply},
              {"peripheral", t.peripheral}, {"cluster", t.cluster}, {"fix", t.fix},
              {"null_rel", t.null_rel}, {"rank_abs", t.rank_abs}, {"rank_rel", t.rank_rel},
              {"inv", t.inv},           {"limit", t.limit},     {"norm", t.norm}};
}

Json spectrum_to_json(const SpectrumReport& report) {
  Json eig = Json::array();
  for (Complex z : report.eigenvalues) eig.push_back(complex_to_json(z));
  Json per = Json::array();
  for (Complex z : report.peripheral) per.push_back(complex_to_json(z));
  return Json{{"spectral_radius", report.spectral_radius},
              {"peripheral", std::move(per)},
              {"eigenvalues", std::move(eig)}};
}

Json reach_to_json(const ReachResult& result) {
  return Json{{"dim", result.subspace.dim()},
              {"steps_profile", result.steps_profile},
              {"subspace", subspace_to_json(result.subspace)}};
}

Json decomposition_to_json(const TwoLevelDecomposition& d) {
  Json blocks = Json::array();
  for (const CoherenceBlock& b : d.blocks) {
    Json bsccs = Json::array();
    for (const Subspace& s : b.bsccs) bsccs.push_back(subspace_to_json(s));
    Json block{{"n_l", b.n_l},
               {"bscc_dim", b.bsccs.empty() ? Index{0} : b.bsccs.front().dim()},
               {"carrier", subspace_to_json(b.carrier)}};
    if (b.period > 0) block["period"] = b.period;
    block["bsccs"] = std::move(bsccs);
    if (!b.cyclic_splits.empty()) {
      Json splits = Json::array();
      for (const auto& cycles : b.cyclic_splits) {
        Json cs = Json::array();
        for (const Subspace& c : cycles) cs.push_back(subspace_to_json(c));
        splits.push_back(std::move(cs));
      }
      block["cyclic_splits"] = std::move(splits);
    }
    blocks.push_back(std::move(block));
  }
  return Json{{"transient", subspace_to_json(d.transient)},
              {"blocks", std::move(blocks)},
              {"borderline_singular_values", d.borderline_singular_values}};
}

Json limit_report_to_json(const LimitReport& report) {
  Json j{{"limit_exists", report.limit_exists},
         {"unique_limit", report.unique_limit},
         {"full_support", report.full_support},
         {"peripheral_count", report.peripheral_count},
         {"multiplicity_of_one", report.multiplicity_of_one}};
  j["limiting_state"] = report.limiting_state ? state_to_json(*report.limiting_state) : Json(nullptr);
  return j;
}

Json noiseless_to_json(const NoiselessResult& result) {
  Json j{{"found", result.found}};
  if (result.found) {
    j["dim_a"] = result.dim_a;
    j["dim_b"] = result.dim_b;
    j["block_index"] = result.block_index;
    j["carrier"] = subspace_to_json(result.carrier);
    j["remainder"] = subspace_to_json(result.remainder);
  }
  return j;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace qmc::json
