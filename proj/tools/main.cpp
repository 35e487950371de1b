// Copyright 2026 The wgate Authors
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
//
// Command-line front end. All numerics live in the library; this file only
// parses arguments, loads/saves JSON and CSV, and maps errors to exit codes:
//   0 success, 1 failed --check, 2 validation error, 3 resource limit.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "wgate/analysis.hpp"
#include "wgate/circuit.hpp"
#include "wgate/gates.hpp"
#include "wgate/serialize.hpp"
#include "wgate/sources.hpp"

using nlohmann::json;
using namespace wgate;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;

struct Options {
  std::string out_format = "json";
  bool check = false;
  double tol_amp = 1e-12;
  double tol_prob = 1e-9;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--out", opt.out_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--check", opt.check,
                "Compare engine numbers with the closed forms and fail on mismatch");
  cmd->add_option("--tol-amp", opt.tol_amp, "Amplitude comparison tolerance");
  cmd->add_option("--tol-prob", opt.tol_prob, "Probability comparison tolerance");
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int check_close(double got, double want, double tol, const std::string& what) {
  if (std::abs(got - want) > tol) {
    std::cerr << "check failed: " << what << " = " << got << ", expected " << want
              << " (tol " << tol << ")\n";
    return kExitCheckFailed;
  }
  return 0;
}

int cmd_run(const std::string& path, const Options& opt) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open circuit file: " << path << "\n";
    return kExitValidation;
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    std::cerr << "invalid JSON in " << path << ": " << e.what() << "\n";
    return kExitValidation;
  }
  CircuitOutcome outcome = run_circuit(doc);
  emit(outcome_to_json(outcome));
  if (opt.check) {
    auto mismatches = check_expectations(doc, outcome, opt.tol_prob);
    for (const std::string& m : mismatches) std::cerr << "check failed: " << m << "\n";
    if (!mismatches.empty()) return kExitCheckFailed;
  }
  return 0;
}

int cmd_w_expand(int n, const Options& opt) {
  QubitState input = w_target(n);
  GateResult res = expand_w(photonic_from_qubits(input), n - 1);
  std::vector<int> modes;
  for (int m = 0; m < n - 1; ++m) modes.push_back(m);
  for (int m : res.output_modes) modes.push_back(m);
  double fid = fidelity(extract_qubits(res.conditional, modes), w_target(n + 2));

  json doc = {{"n", n},
              {"probability", res.success_prob},
              {"formula", success_formula(SuccessKind::expand_w, n)},
              {"fidelity", fid},
              {"conditional_state", state_to_json(res.conditional)}};
  if (!res.warning.empty()) doc["warning"] = res.warning;
  emit(doc);
  if (opt.check) {
    int rc = check_close(res.success_prob, success_formula(SuccessKind::expand_w, n),
                         opt.tol_prob, "probability");
    if (rc) return rc;
    return check_close(fid, 1.0, opt.tol_prob, "fidelity");
  }
  return 0;
}

int cmd_ghz_expand(int n, const Options& opt) {
  QubitState input = ghz_target(n);
  GateResult res = ghz_plus2(photonic_from_qubits(input), n - 1, /*correct=*/true);
  std::vector<int> modes;
  for (int m = 0; m < n - 1; ++m) modes.push_back(m);
  for (int m : res.output_modes) modes.push_back(m);
  double fid = fidelity(extract_qubits(res.conditional, modes), ghz_target(n + 2));

  json doc = {{"n", n},
              {"probability", res.success_prob},
              {"formula", success_formula(SuccessKind::ghz_plus2, n)},
              {"fidelity", fid},
              {"conditional_state", state_to_json(res.conditional)}};
  emit(doc);
  if (opt.check) {
    int rc = check_close(res.success_prob, 0.125, opt.tol_prob, "probability");
    if (rc) return rc;
    return check_close(fid, 1.0, opt.tol_prob, "fidelity");
  }
  return 0;
}

int cmd_cascade(const std::string& seed, int k, const Options& opt) {
  CascadePlan plan;
  plan.seed = seed == "v" ? CascadeSeed::single_v : CascadeSeed::epr_pair;
  plan.k = k;
  CascadeResult res = cascade(plan);

  const int n_out = plan.seed == CascadeSeed::single_v ? 2 * k + 1 : 2 * (k + 1);
  double fid = fidelity(extract_qubits(res.state, res.photon_modes), w_target(n_out));
  double formula = success_formula(
      plan.seed == CascadeSeed::single_v ? SuccessKind::cascade_odd : SuccessKind::cascade_even,
      k);

  json doc = {{"seed", seed},
              {"k", k},
              {"photons", n_out},
              {"p_success", res.p_success},
              {"formula", formula},
              {"stage_probs", res.stage_probs},
              {"fidelity", fid},
              {"photon_modes", res.photon_modes},
              {"state", state_to_json(res.state)}};
  emit(doc);
  if (opt.check) {
    int rc = check_close(res.p_success, formula, opt.tol_prob, "p_success");
    if (rc) return rc;
    return check_close(fid, 1.0, opt.tol_prob, "fidelity");
  }
  return 0;
}

int cmd_feasibility(const std::string& config_name, SourceParams params,
                    const std::string& sweep_axis, const std::vector<double>& grid,
                    const Options& opt) {
  SourceConfig config =
      config_name == "pdc_pdc" ? SourceConfig::pdc_pdc : SourceConfig::pdc_wcp;

  if (sweep_axis.empty()) {
    FeasibilityReport report = feasibility_w4(params, config);
    if (opt.out_format == "csv") {
      std::cout << "gamma,g_or_nu,signal,error,fidelity\n";
      std::cout << params.gamma << ","
                << (config == SourceConfig::pdc_pdc ? params.g : params.nu) << ","
                << report.signal_rate << "," << report.error_rate << ","
                << (report.fidelity ? *report.fidelity : 0.0) << "\n";
    } else {
      emit(feasibility_to_json(report));
    }
    return 0;
  }

  std::ostringstream csv;
  csv << "gamma,g_or_nu,signal,error,fidelity\n";
  json rows = json::array();
  for (double v : grid) {
    SourceParams p = params;
    if (sweep_axis == "gamma")
      p.gamma = v;
    else if (config == SourceConfig::pdc_pdc)
      p.g = v;
    else
      p.nu = v;
    FeasibilityReport report = feasibility_w4(p, config);
    csv << p.gamma << "," << (config == SourceConfig::pdc_pdc ? p.g : p.nu) << ","
        << report.signal_rate << "," << report.error_rate << ","
        << (report.fidelity ? *report.fidelity : 0.0) << "\n";
    json row = feasibility_to_json(report);
    row["gamma"] = p.gamma;
    row["g_or_nu"] = config == SourceConfig::pdc_pdc ? p.g : p.nu;
    rows.push_back(row);
  }
  if (opt.out_format == "csv")
    std::cout << csv.str();
  else
    emit(rows);
  return 0;
}

int cmd_web(const std::string& kind, int n, const Options& opt) {
  QubitState q = kind == "w" ? w_target(n) : ghz_target(n);
  auto pairs = web_report(q);
  if (opt.out_format == "csv") {
    std::cout << "i,j,concurrence\n";
    for (const auto& p : pairs)
      std::cout << p.i << "," << p.j << "," << p.concurrence << "\n";
  } else {
    emit(web_to_json(pairs));
  }
  if (opt.check && kind == "w") {
    for (const auto& p : pairs) {
      int rc = check_close(p.concurrence, 2.0 / n, 1e-6, "concurrence");
      if (rc) return rc;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear-optical simulator for post-selected W/GHZ expansion gates"};
  app.require_subcommand(1);

  Options opt;

  std::string circuit_path;
  CLI::App* run = app.add_subcommand("run", "Evaluate a circuit file");
  run->add_option("circuit", circuit_path, "Circuit JSON file")->required();
  add_common(run, opt);

  int w_n = 3;
  CLI::App* wexp = app.add_subcommand("w-expand", "Expand |W_N> to |W_N+2>");
  wexp->add_option("--n", w_n, "Input W size")->check(CLI::Range(1, 7));
  add_common(wexp, opt);

  int ghz_n = 3;
  CLI::App* gexp = app.add_subcommand("ghz-expand", "Expand |GHZ_N> to |GHZ_N+2>");
  gexp->add_option("--n", ghz_n, "Input GHZ size")->check(CLI::Range(2, 6));
  add_common(gexp, opt);

  std::string seed = "v";
  int k = 1;
  CLI::App* casc = app.add_subcommand("cascade", "Cascade the gate k times");
  casc->add_option("--seed", seed, "Seed state")->check(CLI::IsMember({"v", "epr"}));
  casc->add_option("--k", k, "Number of gate applications")->check(CLI::Range(0, 6));
  add_common(casc, opt);

  std::string config = "pdc_pdc";
  SourceParams params;
  std::string sweep_axis;
  std::vector<double> grid;
  CLI::App* feas = app.add_subcommand("feasibility", "Photon-source noise model for W4");
  feas->add_option("--config", config, "Source configuration")
      ->check(CLI::IsMember({"pdc_pdc", "pdc_wcp"}));
  feas->add_option("--gamma", params.gamma, "EPR PDC pair rate");
  feas->add_option("--g", params.g, "Ancilla PDC pair rate");
  feas->add_option("--nu", params.nu, "WCP mean photon number");
  feas->add_option("--n-max", params.n_max, "Truncation in pair-equivalents")
      ->check(CLI::Range(2, 4));
  feas->add_option("--sweep", sweep_axis, "Sweep axis")
      ->check(CLI::IsMember({"gamma", "anc"}));
  feas->add_option("--grid", grid, "Sweep values")->delimiter(',');
  add_common(feas, opt);

  std::string web_state = "w";
  int web_n = 4;
  CLI::App* web = app.add_subcommand("web", "Pairwise concurrence report");
  web->add_option("--state", web_state, "State family")->check(CLI::IsMember({"w", "ghz"}));
  web->add_option("--n", web_n, "Qubit count")->check(CLI::Range(2, 8));
  add_common(web, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(circuit_path, opt);
    if (wexp->parsed()) return cmd_w_expand(w_n, opt);
    if (gexp->parsed()) return cmd_ghz_expand(ghz_n, opt);
    if (casc->parsed()) return cmd_cascade(seed, k, opt);
    if (feas->parsed()) return cmd_feasibility(config, params, sweep_axis, grid, opt);
    if (web->parsed()) return cmd_web(web_state, web_n, opt);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const CircuitError& e) {
    std::cerr << "circuit error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
