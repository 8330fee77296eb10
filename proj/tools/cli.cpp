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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qmc/classical.hpp"
#include "qmc/decomp.hpp"
#include "qmc/error.hpp"
#include "qmc/json_io.hpp"
#include "qmc/limits.hpp"
#include "qmc/noiseless.hpp"
#include "qmc/period.hpp"
#include "qmc/reach.hpp"
#include "qmc/spectral.hpp"

namespace qmc::cli {
namespace {

using json::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadInput, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load(const std::string& path) { return json::parse(read_file(path)); }

std::string dims_text(const std::vector<Subspace>& subs) {
  std::string s;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(subs[i].dim());
  }
  return s;
}

struct Report {
  Json body;
  std::string text;
};

Report do_validate(const QuantumChannel& ch) {
  Report r;
  r.body = Json{{"valid", true},
                {"dim", ch.dim()},
                {"kraus_count", ch.kraus().size()},
                {"kraus_sum_deviation", ch.kraus_sum_deviation()}};
  r.text = "valid channel: dim " + std::to_string(ch.dim()) + ", " +
           std::to_string(ch.kraus().size()) + " Kraus operators\n";
  return r;
}

Report do_spectrum(const QuantumChannel& ch, const Tolerances& tol) {
  const SpectrumReport spec = spectrum(ch, tol);
  Report r;
  r.body = json::spectrum_to_json(spec);
  Json clusters = Json::array();
  for (const PeripheralCluster& c : peripheral_clusters(spec, tol)) {
    clusters.push_back(Json{{"value", json::complex_to_json(c.value)}, {"multiplicity", c.multiplicity}});
  }
  r.body["peripheral_clusters"] = std::move(clusters);
  r.body["fixed_space_dim"] = fixed_space(ch, tol).dim_complex;
  std::ostringstream t;
  t << "spectral radius " << spec.spectral_radius << ", " << spec.peripheral.size()
    << " peripheral eigenvalues, fixed space dim " << r.body["fixed_space_dim"].get<Index>() << "\n";
  r.text = t.str();
  return r;
}

Report do_reach(const QuantumChannel& ch, const CliConfig& cfg) {
  if (!cfg.state_path) throw Error(ErrorKind::BadInput, "reach needs --state FILE");
  const DensityOperator rho = json::state_from_json(load(*cfg.state_path), cfg.tol);
  if (rho.dim() != ch.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "state and channel dimensions differ");
  }
  const ReachResult res = reachable_space(ch, rho, cfg.tol);
  const auto sat = saturation_time(ch, rho, cfg.m_max, cfg.tol);
  Report r;
  r.body = json::reach_to_json(res);
  r.body["saturation_time"] = sat ? Json(*sat) : Json(nullptr);
  r.text = "reachable space dim " + std::to_string(res.subspace.dim()) + ", saturation time " +
           (sat ? std::to_string(*sat) : std::string("none")) + "\n";
  return r;
}

Report do_decompose(const QuantumChannel& ch, const AnalysisOptions& opts) {
  const TwoLevelDecomposition d = three_level_decomposition(ch, opts);
  Report r;
  r.body = json::decomposition_to_json(d);
  std::ostringstream t;
  t << "transient dim " << d.transient.dim() << ", " << d.blocks.size() << " blocks\n";
  for (std::size_t l = 0; l < d.blocks.size(); ++l) {
    const CoherenceBlock& b = d.blocks[l];
    t << "  block " << l << ": n_l " << b.n_l << ", BSCC dims [" << dims_text(b.bsccs)
      << "], period " << b.period << "\n";
  }
  r.text = t.str();
  return r;
}

Report do_period(const QuantumChannel& ch, const AnalysisOptions& opts) {
  Report r;
  if (is_irreducible(ch, opts.tol)) {
    const PeriodicSplit split = periodic_decomposition(ch, opts);
    Json cycles = Json::array();
    for (const Subspace& c : split.cycles) cycles.push_back(json::subspace_to_json(c));
    r.body = Json{{"irreducible", true}, {"period", split.d}, {"cycles", std::move(cycles)}};
    r.text = "irreducible, period " + std::to_string(split.d) + ", cycle dims [" +
             dims_text(split.cycles) + "]\n";
    return r;
  }
  const BsccSet bs = bscc_decomposition(ch, opts);
  Json per = Json::array();
  Index sum = 0;
  std::string t = "reducible, BSCC periods [";
  for (std::size_t i = 0; i < bs.bsccs.size(); ++i) {
    const Index d = period_irreducible(restrict_to(ch, bs.bsccs[i], opts.tol), opts.tol);
    per.push_back(Json{{"bscc", json::subspace_to_json(bs.bsccs[i])}, {"period", d}});
    sum += d;
    t += (i ? ", " : "") + std::to_string(d);
  }
  r.body = Json{{"irreducible", false}, {"bscc_periods", std::move(per)}, {"period_sum", sum}};
  r.text = t + "], sum " + std::to_string(sum) + "\n";
  return r;
}

Report do_limit(const QuantumChannel& ch, const CliConfig& cfg) {
  const LimitReport lr = limit_report(ch, cfg.tol);
  EquivalenceOptions eo;
  eo.tol = cfg.tol;
  if (cfg.seed) eo.seed = *cfg.seed;
  const LimitEquivalences eq = check_limit_equivalences(ch, eo);
  Report r;
  r.body = json::limit_report_to_json(lr);
  r.body["equivalences"] = Json{{"empirical_primitive", eq.empirical_primitive},
                                {"irreducible_aperiodic", eq.irreducible_aperiodic},
                                {"spectral_primitive", eq.spectral_primitive},
                                {"agree", eq.agree},
                                {"counterexample", eq.counterexample}};
  r.text = std::string("limit exists: ") + (lr.limit_exists ? "yes" : "no") +
           ", unique: " + (lr.unique_limit ? "yes" : "no") +
           ", full support: " + (lr.full_support ? "yes" : "no") + "\n";
  return r;
}

Report do_findmaxns(const QuantumChannel& ch, const AnalysisOptions& opts) {
  const NoiselessResult res = find_max_ns(ch, opts);
  Report r;
  r.body = json::noiseless_to_json(res);
  if (res.found) r.body["verified"] = verify_noiseless(ch, res, opts);
  r.text = res.found ? "noiseless subsystem: dim_a " + std::to_string(res.dim_a) + ", dim_b " +
                           std::to_string(res.dim_b) + "\n"
                     : std::string("no noiseless subsystem\n");
  return r;
}

std::string render(const CliConfig& cfg, Report report) {
  if (cfg.format == "text") return report.text;
  if (cfg.command == "embed") return report.body.dump(2) + "\n";
  Json out{{"command", cfg.command}};
  out["seed"] = cfg.seed ? Json(*cfg.seed) : Json(nullptr);
  out["tolerances"] = json::tolerances_to_json(cfg.tol);
  out["result"] = std::move(report.body);
  return out.dump(2) + "\n";
}

Json error_json(std::string_view kind, const std::string& message) {
  return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> list{"validate", "spectrum", "reach",     "decompose",
                                             "period",   "limit",    "findmaxns", "embed"};
  return list;
}

RunResult run(const CliConfig& cfg) {
  RunResult res;
  try {
    if (cfg.format != "json" && cfg.format != "text") {
      throw Error(ErrorKind::BadInput, "format must be json or text");
    }
    const Json input = load(cfg.input_path);
    AnalysisOptions opts;
    opts.tol = cfg.tol;
    opts.seed = cfg.seed;
    opts.m_max = cfg.m_max;

    Report report;
    if (cfg.command == "embed") {
      const QuantumChannel ch = classical::embed_stochastic(json::stochastic_from_json(input), cfg.tol);
      report.body = json::channel_to_json(ch);
      report.text = "embedded channel: dim " + std::to_string(ch.dim()) + ", " +
                    std::to_string(ch.kraus().size()) + " Kraus operators\n";
    } else {
      const QuantumChannel ch = json::channel_from_json(input, cfg.tol);
      if (cfg.command == "validate") report = do_validate(ch);
      else if (cfg.command == "spectrum") report = do_spectrum(ch, cfg.tol);
      else if (cfg.command == "reach") report = do_reach(ch, cfg);
      else if (cfg.command == "decompose") report = do_decompose(ch, opts);
      else if (cfg.command == "period") report = do_period(ch, opts);
      else if (cfg.command == "limit") report = do_limit(ch, cfg);
      else if (cfg.command == "findmaxns") report = do_findmaxns(ch, opts);
      else throw Error(ErrorKind::BadInput, "unknown command " + cfg.command);
    }

    std::string text = render(cfg, std::move(report));
    if (cfg.output_path) {
      std::ofstream out(*cfg.output_path, std::ios::binary);
      if (!out) throw Error(ErrorKind::BadInput, "cannot write " + *cfg.output_path);
      out << text;
    } else {
      res.out = std::move(text);
    }
  } catch (const Error& e) {
    res.status = is_input_error(e.kind()) ? 1 : 2;
    res.err = error_json(to_string(e.kind()), e.what()).dump() + "\n";
  } catch (const std::exception& e) {
    res.status = 2;
    res.err = error_json("NumericalFailure", e.what()).dump() + "\n";
  }
  return res;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Structure analysis of finite-dimensional quantum Markov chains"};
  app.require_subcommand(1);
  CliConfig cfg;
  Tolerances& t = cfg.tol;
  std::uint64_t seed = 0;

  const std::vector<std::pair<const char*, double*>> tol_flags{
      {"cptp", &t.cptp},         {"herm", &t.herm},         {"psd", &t.psd},
      {"trace", &t.trace},       {"orth", &t.orth},         {"apply", &t.apply},
      {"peripheral", &t.peripheral}, {"cluster", &t.cluster}, {"fix", &t.fix},
      {"null-rel", &t.null_rel}, {"rank-abs", &t.rank_abs}, {"rank-rel", &t.rank_rel},
      {"inv", &t.inv},           {"limit", &t.limit},       {"norm", &t.norm}};

  const std::vector<std::pair<std::string, std::string>> help{
      {"validate", "check that a Kraus channel is CPTP"},
      {"spectrum", "superoperator spectrum and peripheral eigenvalues"},
      {"reach", "reachable space and saturation time of a state (--state)"},
      {"decompose", "transient / coherence-block / BSCC / cyclic decomposition"},
      {"period", "period of an irreducible chain, or per-BSCC periods"},
      {"limit", "existence and uniqueness of limiting states"},
      {"findmaxns", "maximum-dimensional noiseless subsystem"},
      {"embed", "convert a stochastic matrix file into a channel file"}};

  for (const auto& [name, desc] : help) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("file,--input", cfg.input_path, "input JSON file");
    sub->add_option("--output", cfg.output_path, "write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", seed, "seed for randomized fixed-point choices");
    sub->add_option("--m-max", cfg.m_max, "iteration bound for saturation (default n^4)")
        ->check(CLI::PositiveNumber);
    for (const auto& [flag, field] : tol_flags) {
      sub->add_option(std::string("--tol-") + flag, *field, "tolerance override")
          ->check(CLI::PositiveNumber);
    }
    if (name == "reach") sub->add_option("--state", cfg.state_path, "initial state JSON file");
    sub->callback([&cfg, name = name]() {
      cfg.command = name;
      if (cfg.input_path.empty()) throw CLI::RequiredError("input file");
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json("BadInput", e.what()).dump() << "\n";
    return 1;
  }
  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->count("--seed") > 0) cfg.seed = seed;
  }

  const RunResult res = run(cfg);
  std::cout << res.out;
  std::cerr << res.err;
  return res.status;
}

}  // namespace qmc::cli
