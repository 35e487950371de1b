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

#include "wgate/circuit.hpp"

#include <cmath>

#include "wgate/gates.hpp"
#include "wgate/serialize.hpp"

namespace wgate {

using nlohmann::json;

namespace {

PostSelectPattern pattern_from_json(const json& doc, const std::string& where) {
  if (!doc.is_object()) throw CircuitError(where + ": postselect must be an object");
  PostSelectPattern pattern;
  for (const auto& [mode_str, count] : doc.items()) {
    int mode;
    try {
      mode = std::stoi(mode_str);
    } catch (const std::exception&) {
      throw CircuitError(where + ": mode id '" + mode_str + "' is not an integer");
    }
    if (!count.is_number_integer() || count.get<int>() < 0)
      throw CircuitError(where + ": required count for mode " + mode_str +
                         " must be a non-negative integer");
    pattern.required[mode] = count.get<int>();
  }
  return pattern;
}

PhotonicState input_from_json(const json& doc, std::size_t index) {
  const std::string where = "inputs[" + std::to_string(index) + "]";
  if (!doc.is_object()) throw CircuitError(where + ": input must be an object");

  if (doc.contains("occ")) {
    try {
      return make_fock(occupation_from_json(doc.at("occ")));
    } catch (const std::invalid_argument& e) {
      throw CircuitError(where + ": " + e.what());
    }
  }
  if (doc.contains("state")) {
    PhotonicState s;
    try {
      s = state_from_json(doc.at("state"));
    } catch (const std::invalid_argument& e) {
      throw CircuitError(where + ": " + e.what());
    }
    if (!s.normalized())
      throw CircuitError(where + ": serialized state is not normalized");
    return s;
  }
  if (doc.contains("seed")) {
    std::string seed = doc.at("seed").get<std::string>();
    std::vector<int> modes;
    if (doc.contains("modes")) modes = doc.at("modes").get<std::vector<int>>();
    if (seed == "vacuum") return PhotonicState::vacuum();
    if (seed == "epr") {
      if (modes.size() != 2) throw CircuitError(where + ": epr seed needs 2 modes");
      return epr_pair(modes[0], modes[1]);
    }
    if (seed == "two_h") {
      if (modes.size() != 1) throw CircuitError(where + ": two_h seed needs 1 mode");
      return make_fock(Occupation{{{modes[0], Polarization::H}, 2}});
    }
    if (seed == "hv") {
      if (modes.size() != 1) throw CircuitError(where + ": hv seed needs 1 mode");
      return make_fock(Occupation{{{modes[0], Polarization::H}, 1},
                                  {{modes[0], Polarization::V}, 1}});
    }
    throw CircuitError(where + ": unknown seed '" + seed + "'");
  }
  throw CircuitError(where + ": expected one of occ, state, seed");
}

std::vector<int> int_list(const json& doc, std::size_t want, const std::string& where) {
  if (!doc.is_array() || doc.size() != want)
    throw CircuitError(where + ": expected an array of " + std::to_string(want) +
                       " mode ids");
  std::vector<int> out;
  for (const json& v : doc) out.push_back(v.get<int>());
  return out;
}

}  // namespace

CircuitOutcome run_circuit(const json& doc) {
  if (!doc.is_object()) throw CircuitError("circuit file must be a JSON object");

  CircuitOutcome outcome;
  outcome.state = PhotonicState::vacuum();
  if (doc.contains("inputs")) {
    const json& inputs = doc.at("inputs");
    if (!inputs.is_array()) throw CircuitError("inputs must be an array");
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      try {
        outcome.state = tensor(outcome.state, input_from_json(inputs[i], i));
      } catch (const ModeCollisionError& e) {
        throw CircuitError("inputs[" + std::to_string(i) + "]: " + e.what());
      }
    }
  }

  if (doc.contains("elements")) {
    const json& elements = doc.at("elements");
    if (!elements.is_array()) throw CircuitError("elements must be an array");
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const json& el = elements[i];
      const std::string where = "elements[" + std::to_string(i) + "]";
      if (!el.is_object() || el.size() != 1)
        throw CircuitError(where + ": each element must be a single-key object");
      try {
        if (el.contains("bs")) {
          auto m = int_list(el.at("bs"), 4, where);
          outcome.state = apply_beamsplitter(outcome.state, m[0], m[1], m[2], m[3]);
        } else if (el.contains("split")) {
          auto m = int_list(el.at("split"), 3, where);
          outcome.state = apply_bs_split(outcome.state, m[0], m[1], m[2]);
        } else if (el.contains("hwp_ps")) {
          outcome.state = apply_half_wave_ps(outcome.state, el.at("hwp_ps").get<int>());
        } else if (el.contains("rot")) {
          const json& r = el.at("rot");
          if (!r.is_array() || r.size() != 2)
            throw CircuitError(where + ": rot expects [mode, theta]");
          outcome.state =
              apply_pol_rotation(outcome.state, r[0].get<int>(), r[1].get<double>());
        } else if (el.contains("postselect")) {
          PostSelectResult sel =
              post_select(outcome.state, pattern_from_json(el.at("postselect"), where));
          outcome.probability *= sel.probability;
          if (sel.probability == 0.0) {
            outcome.state = PhotonicState{};
            break;
          }
          outcome.state = std::move(sel.conditional);
        } else {
          throw CircuitError(where + ": unknown element '" + el.begin().key() + "'");
        }
      } catch (const ModeCollisionError& e) {
        throw CircuitError(where + ": " + e.what());
      } catch (const std::invalid_argument& e) {
        throw CircuitError(where + ": " + e.what());
      }
    }
  }

  if (doc.contains("postselect") && !outcome.state.empty()) {
    PostSelectResult sel =
        post_select(outcome.state, pattern_from_json(doc.at("postselect"), "postselect"));
    outcome.probability *= sel.probability;
    outcome.state = sel.probability > 0.0 ? std::move(sel.conditional) : PhotonicState{};
  }

  if (doc.contains("target") && !outcome.state.empty()) {
    const json& t = doc.at("target");
    std::string kind = t.at("kind").get<std::string>();
    int n = t.at("n").get<int>();
    std::vector<int> modes = t.at("modes").get<std::vector<int>>();
    if (int(modes.size()) != n)
      throw CircuitError("target: modes list must have n entries");
    QubitState target;
    try {
      target = kind == "w"     ? w_target(n)
               : kind == "ghz" ? ghz_target(n)
                               : throw CircuitError("target: unknown kind '" + kind + "'");
      target.mode_order = modes;
      outcome.target_fidelity = fidelity(outcome.state, photonic_from_qubits(target));
    } catch (const std::invalid_argument& e) {
      throw CircuitError(std::string("target: ") + e.what());
    }
  }

  return outcome;
}

nlohmann::json outcome_to_json(const CircuitOutcome& outcome) {
  json doc = {{"probability", outcome.probability},
              {"conditional_state", state_to_json(outcome.state)}};
  if (outcome.target_fidelity) doc["fidelity"] = *outcome.target_fidelity;
  return doc;
}

std::vector<std::string> check_expectations(const json& doc, const CircuitOutcome& outcome,
                                            double tol_prob) {
  std::vector<std::string> mismatches;
  if (!doc.contains("expect")) return mismatches;
  const json& expect = doc.at("expect");
  if (expect.contains("probability")) {
    double want = expect.at("probability").get<double>();
    if (std::abs(outcome.probability - want) > tol_prob)
      mismatches.push_back("probability " + std::to_string(outcome.probability) +
                           " != expected " + std::to_string(want));
  }
  if (expect.contains("fidelity")) {
    double want = expect.at("fidelity").get<double>();
    if (!outcome.target_fidelity)
      mismatches.push_back("fidelity expected but no target given");
    else if (std::abs(*outcome.target_fidelity - want) > tol_prob)
      mismatches.push_back("fidelity " + std::to_string(*outcome.target_fidelity) +
                           " != expected " + std::to_string(want));
  }
  return mismatches;
}

}  // namespace wgate
