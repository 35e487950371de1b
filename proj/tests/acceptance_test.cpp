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
// End-to-end acceptance suite. Each test case covers one acceptance
// criterion and prints a single PASS/FAIL line.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "wgate/analysis.hpp"
#include "wgate/gates.hpp"
#include "wgate/sources.hpp"

using namespace wgate;

namespace {

struct Criterion {
  const char* name;
  bool ok = true;

  void expect(bool cond) { ok = ok && cond; }
  void close(double got, double want, double tol) { expect(std::abs(got - want) <= tol); }
  ~Criterion() {
    std::printf("criterion %-48s %s\n", name, ok ? "PASS" : "FAIL");
    CHECK(ok);
  }
};

Occupation occ(std::initializer_list<std::pair<Slot, int>> e) { return Occupation(e); }

PhotonicState single(int mode, Polarization pol) {
  return make_fock(Occupation{{{mode, pol}, 1}});
}

double amp_at(const PhotonicState& s, const Occupation& o) {
  cd a = s.amplitude(o);
  return std::abs(a.imag()) < 1e-12 ? a.real() : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

TEST_CASE("criterion 1: first-beamsplitter amplitude sets") {
  Criterion c{"1 (BS1 amplitude sets, both inputs)"};
  auto start = std::chrono::steady_clock::now();

  const double rt2 = std::sqrt(2.0), rt3 = std::sqrt(3.0);

  PhotonicState h = tensor(single(1, Polarization::H),
                           make_fock(occ({{{2, Polarization::H}, 2}})));
  h = apply_beamsplitter(h, 1, 2, 3, 4);
  c.close(amp_at(h, occ({{{3, Polarization::H}, 3}})), rt3 / (2 * rt2), 1e-12);
  c.close(amp_at(h, occ({{{3, Polarization::H}, 2}, {{4, Polarization::H}, 1}})),
          1 / (2 * rt2), 1e-12);
  c.close(amp_at(h, occ({{{3, Polarization::H}, 1}, {{4, Polarization::H}, 2}})),
          -1 / (2 * rt2), 1e-12);
  c.close(amp_at(h, occ({{{4, Polarization::H}, 3}})), -rt3 / (2 * rt2), 1e-12);
  c.expect(h.term_count() == 4);

  PhotonicState v = tensor(single(1, Polarization::V),
                           make_fock(occ({{{2, Polarization::H}, 2}})));
  v = apply_beamsplitter(v, 1, 2, 3, 4);
  c.close(amp_at(v, occ({{{3, Polarization::H}, 2}, {{3, Polarization::V}, 1}})),
          1 / (2 * rt2), 1e-12);
  c.close(amp_at(v, occ({{{3, Polarization::H}, 1}, {{3, Polarization::V}, 1},
                         {{4, Polarization::H}, 1}})), 0.5, 1e-12);
  c.close(amp_at(v, occ({{{3, Polarization::V}, 1}, {{4, Polarization::H}, 2}})),
          1 / (2 * rt2), 1e-12);
  c.close(amp_at(v, occ({{{3, Polarization::H}, 2}, {{4, Polarization::V}, 1}})),
          -1 / (2 * rt2), 1e-12);
  c.close(amp_at(v, occ({{{3, Polarization::H}, 1}, {{4, Polarization::H}, 1},
                         {{4, Polarization::V}, 1}})), -0.5, 1e-12);
  c.close(amp_at(v, occ({{{4, Polarization::H}, 2}, {{4, Polarization::V}, 1}})),
          -1 / (2 * rt2), 1e-12);
  c.expect(v.term_count() == 6);

  auto elapsed = std::chrono::steady_clock::now() - start;
  c.expect(elapsed < std::chrono::seconds(1));
}

TEST_CASE("criterion 2: second-beamsplitter amplitude sets") {
  Criterion c{"2 (BS2 split amplitudes)"};
  const double rt2 = std::sqrt(2.0);

  PhotonicState a = apply_bs_split(make_fock(occ({{{3, Polarization::H}, 2}})), 3, 5, 6);
  c.close(amp_at(a, occ({{{5, Polarization::H}, 2}})), 0.5, 1e-12);
  c.close(amp_at(a, occ({{{5, Polarization::H}, 1}, {{6, Polarization::H}, 1}})), 1 / rt2,
          1e-12);
  c.close(amp_at(a, occ({{{6, Polarization::H}, 2}})), 0.5, 1e-12);

  PhotonicState b = apply_bs_split(
      make_fock(occ({{{3, Polarization::H}, 1}, {{3, Polarization::V}, 1}})), 3, 5, 6);
  c.close(amp_at(b, occ({{{5, Polarization::H}, 1}, {{5, Polarization::V}, 1}})), 0.5, 1e-12);
  c.close(amp_at(b, occ({{{5, Polarization::H}, 1}, {{6, Polarization::V}, 1}})), 0.5, 1e-12);
  c.close(amp_at(b, occ({{{5, Polarization::V}, 1}, {{6, Polarization::H}, 1}})), 0.5, 1e-12);
  c.close(amp_at(b, occ({{{6, Polarization::H}, 1}, {{6, Polarization::V}, 1}})), 0.5, 1e-12);
}

TEST_CASE("criterion 3: post-selected gate branches") {
  Criterion c{"3 (gate branches, 1/16 and 3/16, ratio 1/3)"};

  GateResult h = t_w_plus2(single(1, Polarization::H), 1);
  c.close(h.success_prob, 1.0 / 16, 1e-9);
  for (const auto& [o, a] : h.conditional.amplitudes())
    c.close((a * std::sqrt(h.success_prob)).real(), 0.25, 1e-12);

  GateResult v = t_w_plus2(single(1, Polarization::V), 1);
  c.close(v.success_prob, 3.0 / 16, 1e-9);
  for (const auto& [o, a] : v.conditional.amplitudes())
    c.close((a * std::sqrt(v.success_prob)).real(), 0.25, 1e-12);

  c.close(h.success_prob / v.success_prob, 1.0 / 3, 1e-9);
}

TEST_CASE("criterion 4: EPR seed gives W4") {
  Criterion c{"4 (EPR seed -> W4, p = 1/8)"};
  GateResult res = expand_w(epr_pair(0, 1), 1);
  c.close(res.success_prob, 0.125, 1e-9);
  QubitState q = extract_qubits(res.conditional, {0, res.output_modes[0],
                                                  res.output_modes[1], res.output_modes[2]});
  c.close(fidelity(q, w_target(4)), 1.0, 1e-9);
  int nonzero = 0;
  for (const cd& a : q.amps)
    if (std::abs(a) > 1e-12) ++nonzero;
  c.expect(nonzero == 4);
}

TEST_CASE("criterion 5: (N+2)/(16N) sweep") {
  Criterion c{"5 (probability formula, N = 1..7)"};
  for (int n = 1; n <= 7; ++n) {
    GateResult res = expand_w(photonic_from_qubits(w_target(n)), n - 1);
    c.close(res.success_prob, success_formula(SuccessKind::expand_w, n), 1e-9);
    c.expect(res.warning.empty());
  }
}

TEST_CASE("criterion 6: cascades") {
  Criterion c{"6 (cascade probabilities and fidelities)"};
  auto start = std::chrono::steady_clock::now();

  const std::vector<std::pair<int, double>> odd{{1, 3.0 / 16}, {2, 5.0 / 256}, {3, 7.0 / 4096}};
  for (const auto& [k, p] : odd) {
    CascadePlan plan;
    plan.seed = CascadeSeed::single_v;
    plan.k = k;
    CascadeResult res = cascade(plan);
    c.close(res.p_success, p, 1e-9);
    c.close(fidelity(extract_qubits(res.state, res.photon_modes), w_target(2 * k + 1)), 1.0,
            1e-9);
  }

  const std::vector<std::pair<int, double>> even{{1, 1.0 / 8}, {2, 3.0 / 256}};
  for (const auto& [k, p] : even) {
    CascadePlan plan;
    plan.seed = CascadeSeed::epr_pair;
    plan.k = k;
    CascadeResult res = cascade(plan);
    c.close(res.p_success, p, 1e-9);
    c.close(fidelity(extract_qubits(res.state, res.photon_modes), w_target(2 * (k + 1))), 1.0,
            1e-9);
  }

  c.expect(std::chrono::steady_clock::now() - start < std::chrono::seconds(60));
}

TEST_CASE("criterion 7: GHZ gate") {
  Criterion c{"7 (GHZ expansion, p = 1/8, corrected fidelity 1)"};
  for (int n : {2, 3, 4}) {
    GateResult res = ghz_plus2(photonic_from_qubits(ghz_target(n)), n - 1, /*correct=*/true);
    c.close(res.success_prob, 0.125, 1e-9);
    std::vector<int> modes;
    for (int m = 0; m < n - 1; ++m) modes.push_back(m);
    for (int m : res.output_modes) modes.push_back(m);
    c.close(fidelity(extract_qubits(res.conditional, modes), ghz_target(n + 2)), 1.0, 1e-9);
  }
}

TEST_CASE("criterion 8: entanglement web") {
  Criterion c{"8 (pair concurrences 2/N, GHZ pairs 0)"};

  // engine-produced W states via the cascade
  for (int n = 3; n <= 6; ++n) {
    CascadePlan plan;
    plan.seed = n % 2 ? CascadeSeed::single_v : CascadeSeed::epr_pair;
    plan.k = n % 2 ? (n - 1) / 2 : n / 2 - 1;
    CascadeResult res = cascade(plan);
    QubitState q = extract_qubits(res.state, res.photon_modes);
    for (const auto& p : web_report(q)) c.close(p.concurrence, 2.0 / n, 1e-6);
  }

  // engine-produced GHZ_4 and GHZ_5 plus the analytic targets
  for (int n : {2, 3}) {
    GateResult res = ghz_plus2(photonic_from_qubits(ghz_target(n)), n - 1, /*correct=*/true);
    std::vector<int> modes;
    for (int m = 0; m < n - 1; ++m) modes.push_back(m);
    for (int m : res.output_modes) modes.push_back(m);
    for (const auto& p : web_report(extract_qubits(res.conditional, modes)))
      c.close(p.concurrence, 0.0, 1e-9);
  }
  for (int n : {3, 4, 5})
    for (const auto& p : web_report(ghz_target(n))) c.close(p.concurrence, 0.0, 1e-9);
}

TEST_CASE("criterion 9: feasibility scaling") {
  Criterion c{"9 (source-noise scaling orders)"};

  std::vector<double> gammas{1e-5, 2e-5, 5e-5, 1e-4};
  std::vector<double> gs{1e-5, 2e-5, 5e-5, 1e-4};
  auto pdc = scaling_fit(SourceConfig::pdc_pdc, gammas, gs, SourceParams{});
  c.close(pdc["signal_vs_gamma"], 1.0, 0.1);
  c.close(pdc["signal_vs_anc"], 1.0, 0.1);

  SourceParams wcp_base;
  wcp_base.gamma = 1e-4;
  wcp_base.nu = 1e-3;
  std::vector<double> nus{1e-3, 2e-3, 5e-3, 1e-2};
  auto wcp = scaling_fit(SourceConfig::pdc_wcp, gammas, nus, wcp_base);
  c.close(wcp["signal_vs_anc"], 2.0, 0.1);
  c.close(wcp["error_vs_gamma"], 2.0, 0.1);

  // fidelity climbs monotonically to 1 as the rates shrink 10x per step
  double previous = -1.0;
  SourceParams p;
  for (int i = 0; i < 4; ++i) {
    p.gamma = 1e-2 * std::pow(10.0, -i);
    p.g = 1e-2 * std::pow(10.0, -i);
    FeasibilityReport rep = feasibility_w4(p, SourceConfig::pdc_pdc);
    c.expect(rep.fidelity.has_value() && *rep.fidelity > previous);
    previous = *rep.fidelity;
  }
  c.expect(previous > 0.999);
}

TEST_CASE("criterion 10: invariance suite") {
  Criterion c{"10 (unitarity, conservation, HOM, covariance, feed rule)"};

  // unitarity + photon-number conservation on random states
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> mode_dist(0, 7);
  std::uniform_int_distribution<int> photon_dist(0, 7);
  std::uniform_int_distribution<int> pol_dist(0, 1);
  std::normal_distribution<double> amp_dist(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    PhotonicState s;
    for (int t = 0; t < 8; ++t) {
      Occupation o;
      int photons = photon_dist(rng);
      for (int ph = 0; ph < photons; ++ph)
        o.add({mode_dist(rng), pol_dist(rng) ? Polarization::V : Polarization::H}, 1);
      s.add_amplitude(o, cd{amp_dist(rng), amp_dist(rng)});
    }
    s.prune();
    s.renormalize();
    int photons = s.max_photons();

    PhotonicState bs = apply_beamsplitter(s, 0, 1, 8, 9);
    c.close(bs.norm2(), 1.0, 1e-12);
    c.expect(bs.max_photons() == photons);
    PhotonicState rot = apply_pol_rotation(s, 2, 0.7);
    c.close(rot.norm2(), 1.0, 1e-12);
    c.expect(rot.max_photons() == photons);
  }

  // HOM: exactly zero coincidence amplitude
  PhotonicState hom = tensor(single(1, Polarization::H), single(2, Polarization::H));
  hom = apply_beamsplitter(hom, 1, 2, 3, 4);
  c.expect(hom.amplitude(occ({{{3, Polarization::H}, 1}, {{4, Polarization::H}, 1}})) ==
           cd{0, 0});

  // rotation covariance at three angles
  for (double theta : {std::numbers::pi / 8, std::numbers::pi / 4, std::numbers::pi / 3}) {
    PhotonicState a = tensor(apply_pol_rotation(single(1, Polarization::V), 1, theta),
                             make_fock(occ({{{2, Polarization::H}, 2}})));
    a = apply_pol_rotation(a, 2, theta);
    a = apply_beamsplitter(a, 1, 2, 3, 4);
    a = apply_bs_split(a, 3, 5, 6);
    PostSelectResult sel_a = post_select(a, {{{4, 1}, {5, 1}, {6, 1}}});

    PhotonicState b = tensor(single(1, Polarization::V),
                             make_fock(occ({{{2, Polarization::H}, 2}})));
    b = apply_beamsplitter(b, 1, 2, 3, 4);
    b = apply_bs_split(b, 3, 5, 6);
    PostSelectResult sel_b = post_select(b, {{{4, 1}, {5, 1}, {6, 1}}});
    PhotonicState image = sel_b.conditional;
    for (int m : {4, 5, 6}) image = apply_pol_rotation(image, m, theta);

    c.close(sel_a.probability, sel_b.probability, 1e-9);
    c.close(fidelity(sel_a.conditional, image), 1.0, 1e-9);
  }

  // feed-rule independence
  for (int pick : {0, 1, 2}) {
    CascadePlan plan;
    plan.seed = CascadeSeed::single_v;
    plan.k = 2;
    plan.feed = FeedRule::explicit_list;
    plan.feeds = {pick};
    CascadeResult res = cascade(plan);
    c.close(res.p_success, 5.0 / 256, 1e-9);
    c.close(fidelity(extract_qubits(res.state, res.photon_modes), w_target(5)), 1.0, 1e-9);
  }
}
