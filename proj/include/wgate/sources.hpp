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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wgate/fock.hpp"

namespace wgate {

// Per-pulse source rates for the W4 feasibility model. gamma drives the EPR
// pair source, g the ancilla PDC source, nu the mean photon number of the
// weak coherent pulse. n_max truncates the generation events in total
// pair-equivalents (a WCP emission of p photons counts as ceil(p/2)).
struct SourceParams {
  double gamma = 1e-4;
  double g = 1e-4;
  double nu = 1e-2;
  int n_max = 3;
};

void validate(const SourceParams& params);

enum class SourceConfig { pdc_pdc, pdc_wcp };

struct Emission {
  int n = 0;
  double probability = 0.0;
};

// Thermal-style PDC number distribution: P(n) proportional to rate^n,
// truncated at n_max pairs and renormalized.
std::vector<Emission> pdc_emission(double rate, int n_max);

// Poissonian WCP distribution truncated at n_max photons and renormalized.
std::vector<Emission> wcp_emission(double nu, int n_max);

struct EventRate {
  int n_epr = 0;  // EPR pairs emitted into modes 0,1
  int n_anc = 0;  // ancilla pairs (pdc_pdc) or photons (pdc_wcp) in mode 2
  double rate = 0.0;
  double fidelity = 0.0;  // conditional fidelity with |W4|
  bool signal = false;
};

std::string event_label(const EventRate& e);

struct FeasibilityReport {
  double signal_rate = 0.0;
  double error_rate = 0.0;
  std::optional<double> fidelity;  // rate-weighted; empty when no event survives
  std::vector<EventRate> breakdown;
  bool truncation_warning = false;
};

// Enumerates multi-pair generation events up to n_max pair-equivalents,
// pushes each input through the full gate circuit, and classifies fourfold
// threshold coincidences on modes 0, 4, 5, 6 as signal (conditional state is
// |W4>) or error.
FeasibilityReport feasibility_w4(const SourceParams& params, SourceConfig config);

// Log-log slope estimates of the signal rate and the dominant error class
// versus gamma and versus the ancilla rate (g or nu). Each grid needs at
// least 4 points. Keys: signal_vs_gamma, error_vs_gamma, signal_vs_anc,
// error_vs_anc; a slope is NaN when the fit is degenerate (too few nonzero
// rates).
std::map<std::string, double> scaling_fit(SourceConfig config,
                                          const std::vector<double>& gamma_grid,
                                          const std::vector<double>& anc_grid,
                                          const SourceParams& base);

}  // namespace wgate
