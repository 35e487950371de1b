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

#include "wgate/analysis.hpp"
#include "wgate/fock.hpp"
#include "wgate/sources.hpp"

namespace wgate {

// Canonical state serialization: a list of
//   {"occ": {"<mode>": {"H": n, "V": m}}, "amp": [re, im]}
// with terms in canonical basis order (modes ascending, H before V) and only
// nonzero counts present.
nlohmann::json state_to_json(const PhotonicState& state);
PhotonicState state_from_json(const nlohmann::json& doc);

Occupation occupation_from_json(const nlohmann::json& doc);

nlohmann::json web_to_json(const std::vector<PairConcurrence>& pairs);
nlohmann::json feasibility_to_json(const FeasibilityReport& report);

}  // namespace wgate
