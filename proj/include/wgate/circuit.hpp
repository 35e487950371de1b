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

#include <json.hpp>
#include <optional>
#include <string>

#include "wgate/fock.hpp"

namespace wgate {

struct CircuitError : std::runtime_error {
  explicit CircuitError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation of a circuit file:
//
//   {
//     "inputs":  [ {"occ": {"1": {"V": 1}}},
//                  {"seed": "epr"|"two_h"|"hv"|"vacuum", "modes": [..]},
//                  {"state": [ <canonical state terms> ]} ],
//     "elements": [ {"bs": [a,b,c,d]}, {"split": [m,c,d]}, {"hwp_ps": m},
//                   {"rot": [m, theta]}, {"postselect": {"<mode>": count}} ],
//     "postselect": {"<mode>": count},        // optional final pattern
//     "target": {"kind": "w"|"ghz", "n": 3, "modes": [..]},  // optional
//     "expect": {"probability": p, "fidelity": f}            // optional
//   }
//
// Inputs are tensored in order; elements apply in listed order; every
// post-selection multiplies into the reported probability.
struct CircuitOutcome {
  double probability = 1.0;
  PhotonicState state;
  std::optional<double> target_fidelity;
};

CircuitOutcome run_circuit(const nlohmann::json& doc);

// Outcome serialized as {"probability":, "conditional_state":, "fidelity"?:}.
nlohmann::json outcome_to_json(const CircuitOutcome& outcome);

// Compares the outcome with the file's "expect" block; returns a list of
// human-readable mismatch descriptions (empty when everything agrees).
std::vector<std::string> check_expectations(const nlohmann::json& doc,
                                            const CircuitOutcome& outcome,
                                            double tol_prob);

}  // namespace wgate
