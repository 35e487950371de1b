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

#include "wgate/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wgate {

namespace {

// Term-count guard for cascades; k beyond this needs more photons than the
// sparse representation is sized for.
constexpr int kMaxCascadeDepth = 6;

void require_single_photon_input(const PhotonicState& state, int input_mode) {
  for (const auto& [occ, a] : state.amplitudes()) {
    if (occ.mode_total(input_mode) != 1)
      throw std::invalid_argument("gate input mode " + std::to_string(input_mode) +
                                  " must carry exactly one photon, got term " + occ.str());
  }
}

GateResult run_gate(const PhotonicState& state, int input_mode, const GateWiring& w,
                    AncillaKind ancilla) {
  if (!state.normalized())
    throw std::invalid_argument("gate input state must be normalized");
  require_single_photon_input(state, input_mode);

  PhotonicState wired = apply_expansion_circuit(state, input_mode, w, ancilla);
  PostSelectPattern pattern;
  pattern.required = {{w.out0, 1}, {w.out1, 1}, {w.out2, 1}};
  PostSelectResult sel = post_select(wired, pattern);

  GateResult res;
  res.success_prob = sel.probability;
  res.conditional = std::move(sel.conditional);
  res.output_modes = {w.out0, w.out1, w.out2};
  return res;
}

}  // namespace

GateWiring next_free_wiring(const PhotonicState& state, int input_mode) {
  int base = std::max(state.max_mode(), input_mode) + 1;
  return GateWiring{base, base + 1, base + 2, base + 3, base + 4};
}

PhotonicState apply_expansion_circuit(const PhotonicState& state, int input_mode,
                                      const GateWiring& w, AncillaKind ancilla,
                                      bool include_ps) {
  PhotonicState anc =
      ancilla == AncillaKind::two_h
          ? make_fock(Occupation{{{w.ancilla_mode, Polarization::H}, 2}})
          : make_fock(Occupation{{{w.ancilla_mode, Polarization::H}, 1},
                                 {{w.ancilla_mode, Polarization::V}, 1}});
  PhotonicState s = tensor(state, anc);
  s = apply_beamsplitter(s, input_mode, w.ancilla_mode, w.mix_mode, w.out0);
  s = apply_bs_split(s, w.mix_mode, w.out1, w.out2);
  if (include_ps) s = apply_half_wave_ps(s, w.out0);
  return s;
}

GateResult t_w_plus2(const PhotonicState& state, int input_mode, const GateWiring& w) {
  return run_gate(state, input_mode, w, AncillaKind::two_h);
}

GateResult t_w_plus2(const PhotonicState& state, int input_mode) {
  return run_gate(state, input_mode, next_free_wiring(state, input_mode),
                  AncillaKind::two_h);
}

PhotonicState epr_pair(int mode_a, int mode_b) {
  if (mode_a == mode_b) throw std::invalid_argument("EPR modes must differ");
  const double r = 1.0 / std::sqrt(2.0);
  PhotonicState s;
  s.add_amplitude(Occupation{{{mode_a, Polarization::H}, 1}, {{mode_b, Polarization::V}, 1}},
                  cd{r, 0});
  s.add_amplitude(Occupation{{{mode_a, Polarization::V}, 1}, {{mode_b, Polarization::H}, 1}},
                  cd{r, 0});
  s.set_normalized(true);
  return s;
}

GateResult expand_w(const PhotonicState& state, int input_mode) {
  std::string warning;
  std::vector<int> modes;
  for (const auto& [occ, a] : state.amplitudes())
    for (int m : occ.modes())
      if (std::find(modes.begin(), modes.end(), m) == modes.end()) modes.push_back(m);
  std::sort(modes.begin(), modes.end());

  try {
    QubitState q = extract_qubits(state, modes);
    if (std::abs(fidelity(q, w_target(q.n)) - 1.0) > kProbTol)
      warning = "input state is not a W state";
  } catch (const EncodingError&) {
    warning = "input state is not a W state (not one photon per mode)";
  }

  GateResult res = t_w_plus2(state, input_mode);
  res.warning = std::move(warning);
  return res;
}

GateResult ghz_plus2(const PhotonicState& state, int input_mode, const GateWiring& w,
                     bool correct) {
  GateResult res = run_gate(state, input_mode, w, AncillaKind::one_h_one_v);
  if (correct && res.success_prob > 0.0) {
    res.conditional =
        apply_pol_rotation(res.conditional, w.out0, std::numbers::pi / 2.0);
  }
  return res;
}

GateResult ghz_plus2(const PhotonicState& state, int input_mode, bool correct) {
  return ghz_plus2(state, input_mode, next_free_wiring(state, input_mode), correct);
}

CascadeResult cascade(const CascadePlan& plan) {
  if (plan.k < 0) throw std::invalid_argument("cascade depth must be >= 0");
  if (plan.k > kMaxCascadeDepth)
    throw ResourceLimitError("cascade depth " + std::to_string(plan.k) +
                             " exceeds the supported maximum of " +
                             std::to_string(kMaxCascadeDepth));
  if (plan.feed == FeedRule::explicit_list && int(plan.feeds.size()) != std::max(plan.k - 1, 0))
    throw std::invalid_argument("explicit feed list must have k-1 entries");

  CascadeResult res;
  if (plan.seed == CascadeSeed::single_v) {
    res.state = make_fock(Occupation{{{0, Polarization::V}, 1}});
    res.photon_modes = {0};
  } else {
    res.state = epr_pair(0, 1);
    res.photon_modes = {0, 1};
  }

  int next_input = res.photon_modes.back();
  for (int stage = 0; stage < plan.k; ++stage) {
    GateResult g = t_w_plus2(res.state, next_input);
    res.stage_probs.push_back(g.success_prob);
    res.p_success *= g.success_prob;
    res.state = std::move(g.conditional);

    res.photon_modes.erase(
        std::find(res.photon_modes.begin(), res.photon_modes.end(), next_input));
    for (int m : g.output_modes) res.photon_modes.push_back(m);
    std::sort(res.photon_modes.begin(), res.photon_modes.end());

    if (stage + 1 < plan.k) {
      int pick = plan.feed == FeedRule::lowest_new_mode ? 0 : plan.feeds[std::size_t(stage)];
      if (pick < 0 || pick > 2) throw std::invalid_argument("feed index must be 0..2");
      std::array<int, 3> outs = g.output_modes;
      std::sort(outs.begin(), outs.end());
      next_input = outs[std::size_t(pick)];
    }
  }
  return res;
}

QubitState w_target(int n) {
  if (n < 1) throw std::invalid_argument("w_target requires n >= 1");
  QubitState q;
  q.n = n;
  q.amps.assign(std::size_t(1) << n, cd{0.0, 0.0});
  const double a = 1.0 / std::sqrt(double(n));
  for (int k = 0; k < n; ++k) q.amps[std::size_t(1) << k] = cd{a, 0};
  q.mode_order.resize(std::size_t(n));
  for (int k = 0; k < n; ++k) q.mode_order[std::size_t(k)] = k;
  return q;
}

QubitState ghz_target(int n) {
  if (n < 2) throw std::invalid_argument("ghz_target requires n >= 2");
  QubitState q;
  q.n = n;
  q.amps.assign(std::size_t(1) << n, cd{0.0, 0.0});
  const double a = 1.0 / std::sqrt(2.0);
  q.amps.front() = cd{a, 0};
  q.amps.back() = cd{a, 0};
  q.mode_order.resize(std::size_t(n));
  for (int k = 0; k < n; ++k) q.mode_order[std::size_t(k)] = k;
  return q;
}

}  // namespace wgate
