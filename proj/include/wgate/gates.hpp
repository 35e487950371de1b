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

#include <array>
#include <string>
#include <vector>

#include "wgate/fock.hpp"

namespace wgate {

// Mode ids consumed by one application of the expansion circuit. The input
// photon is mixed with the ancilla on BS1 into (mix_mode, out0); BS2 then
// splits mix_mode into (out1, out2); the half-wave phase shifter sits on
// out0. All five ids must be unused by the incoming state.
struct GateWiring {
  int ancilla_mode;
  int mix_mode;
  int out0;
  int out1;
  int out2;
};

// Deterministic allocation: the five consecutive ids following the largest
// occupied mode (and the input mode).
GateWiring next_free_wiring(const PhotonicState& state, int input_mode);

enum class AncillaKind { two_h, one_h_one_v };

// The linear-optical part of the gate without post-selection: tensors the
// ancilla into ancilla_mode, applies BS1, BS2 and the phase shifter. Exposed
// separately so the source-noise model can drive it with imperfect inputs.
PhotonicState apply_expansion_circuit(const PhotonicState& state, int input_mode,
                                      const GateWiring& w, AncillaKind ancilla,
                                      bool include_ps = true);

struct GateResult {
  double success_prob = 0.0;
  PhotonicState conditional;
  std::array<int, 3> output_modes{};
  std::string warning;  // empty when preconditions held
};

// The elementary expansion gate: |2_H> ancilla, two 50:50 beamsplitters and
// the phase shifter, post-selected on one photon in each output mode.
// Requires exactly one photon in input_mode in every basis term.
GateResult t_w_plus2(const PhotonicState& state, int input_mode, const GateWiring& w);
GateResult t_w_plus2(const PhotonicState& state, int input_mode);

// (|1_H>_a |1_V>_b + |1_V>_a |1_H>_b)/sqrt(2).
PhotonicState epr_pair(int mode_a, int mode_b);

// Applies t_w_plus2 to one photon of an N-photon W state, producing the
// (N+2)-photon W state with success probability (N+2)/(16N). A non-W input
// is still processed but reported through GateResult::warning.
GateResult expand_w(const PhotonicState& state, int input_mode);

// GHZ variant: ancilla |1_H 1_V>. With correct=false the raw post-selected
// branches are returned; the engine-derived maps are
//   |1_V>_1 -> +2^{-3/2} |1_H>_out0 |1_V>_out1 |1_V>_out2
//   |1_H>_1 -> -2^{-3/2} |1_V>_out0 |1_H>_out1 |1_H>_out2
// (the minority-polarization photon exits on out0, the port not split by
// BS2). With correct=true a 90-degree polarization rotation on out0 flips
// that photon and absorbs the sign, giving GHZ_N -> GHZ_{N+2} exactly.
GateResult ghz_plus2(const PhotonicState& state, int input_mode, const GateWiring& w,
                     bool correct);
GateResult ghz_plus2(const PhotonicState& state, int input_mode, bool correct);

enum class CascadeSeed { single_v, epr_pair };
enum class FeedRule { lowest_new_mode, explicit_list };

struct CascadePlan {
  CascadeSeed seed = CascadeSeed::single_v;
  int k = 1;
  FeedRule feed = FeedRule::lowest_new_mode;
  // For explicit_list: per stage, which of the previous gate's three output
  // modes (0..2) feeds the next stage. Size k-1.
  std::vector<int> feeds;
};

struct CascadeResult {
  PhotonicState state;
  double p_success = 1.0;
  std::vector<double> stage_probs;
  std::vector<int> photon_modes;  // sorted modes carrying the final W photons
};

// Runs the seed through k gate applications. p_success is the product of the
// stage probabilities, i.e. the joint coincidence probability.
CascadeResult cascade(const CascadePlan& plan);

// |W_n>: equal superposition of the n strings with a single 1; |W_1> = |1>.
QubitState w_target(int n);
// |GHZ_n> = (|0...0> + |1...1>)/sqrt(2), n >= 2.
QubitState ghz_target(int n);

}  // namespace wgate
