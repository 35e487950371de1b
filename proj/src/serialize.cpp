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

#include "wgate/serialize.hpp"

namespace wgate {

using nlohmann::json;

nlohmann::json state_to_json(const PhotonicState& state) {
  json terms = json::array();
  for (const auto& [occ, amp] : state.amplitudes()) {
    json occ_doc = json::object();
    for (const auto& [slot, n] : occ.entries()) {
      std::string mode = std::to_string(slot.mode);
      if (!occ_doc.contains(mode)) occ_doc[mode] = json::object();
      occ_doc[mode][std::string(1, pol_char(slot.pol))] = n;
    }
    terms.push_back({{"occ", occ_doc}, {"amp", {amp.real(), amp.imag()}}});
  }
  return terms;
}

Occupation occupation_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("occupation must be an object");
  Occupation occ;
  for (const auto& [mode_str, pols] : doc.items()) {
    int mode = std::stoi(mode_str);
    if (mode < 0) throw std::invalid_argument("spatial mode ids must be >= 0");
    for (const auto& [pol_str, count] : pols.items()) {
      if (pol_str != "H" && pol_str != "V")
        throw std::invalid_argument("polarization key must be H or V");
      int n = count.get<int>();
      if (n < 0) throw std::invalid_argument("photon counts must be >= 0");
      occ.add({mode, pol_str == "H" ? Polarization::H : Polarization::V}, n);
    }
  }
  return occ;
}

PhotonicState state_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw std::invalid_argument("state must be an array of terms");
  PhotonicState state;
  for (const json& term : doc) {
    Occupation occ = occupation_from_json(term.at("occ"));
    const json& amp = term.at("amp");
    if (!amp.is_array() || amp.size() != 2)
      throw std::invalid_argument("amp must be [re, im]");
    state.add_amplitude(occ, cd{amp[0].get<double>(), amp[1].get<double>()});
  }
  if (std::abs(state.norm2() - 1.0) <= kProbTol) state.set_normalized(true);
  return state;
}

nlohmann::json web_to_json(const std::vector<PairConcurrence>& pairs) {
  json arr = json::array();
  for (const PairConcurrence& p : pairs)
    arr.push_back({{"i", p.i}, {"j", p.j}, {"concurrence", p.concurrence}});
  return {{"pairs", arr}};
}

nlohmann::json feasibility_to_json(const FeasibilityReport& report) {
  json breakdown = json::object();
  for (const EventRate& e : report.breakdown) {
    breakdown[event_label(e)] = {
        {"rate", e.rate}, {"fidelity", e.fidelity}, {"signal", e.signal}};
  }
  json doc = {{"signal_rate", report.signal_rate},
              {"error_rate", report.error_rate},
              {"breakdown", breakdown},
              {"truncation_warning", report.truncation_warning}};
  if (report.fidelity)
    doc["fidelity"] = *report.fidelity;
  else
    doc["fidelity"] = nullptr;
  return doc;
}

}  // namespace wgate
