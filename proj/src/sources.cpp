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

#include "wgate/sources.hpp"

#include <cmath>
#include <limits>

#include "wgate/gates.hpp"

namespace wgate {

namespace {

// EPR source feeds modes 0 and 1; the gate mixes mode 1 with the ancilla
// mode 2 on BS1 into modes 3 and 4, BS2 splits mode 3 into 5 and 6, PS on 4.
constexpr int kEprModeA = 0;
constexpr int kEprModeB = 1;
constexpr int kAncMode = 2;
constexpr int kMixMode = 3;
constexpr int kOut0 = 4;
constexpr int kOut1 = 5;
constexpr int kOut2 = 6;

// n independent EPR emissions into the same mode pair, normalized.
PhotonicState multi_epr(int n) {
  PhotonicState s = PhotonicState::vacuum();
  const cd r{1.0 / std::sqrt(2.0), 0.0};
  for (int i = 0; i < n; ++i) {
    PhotonicState hv = apply_create(apply_create(s, kEprModeA, Polarization::H),
                                    kEprModeB, Polarization::V);
    PhotonicState vh = apply_create(apply_create(s, kEprModeA, Polarization::V),
                                    kEprModeB, Polarization::H);
    s = superpose({{r, hv}, {r, vh}});
  }
  s.renormalize();
  return s;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  // Least-squares slope of log(y) vs log(x); zero rates are dropped.
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] > 0.0 && ys[i] > 0.0) {
      lx.push_back(std::log(xs[i]));
      ly.push_back(std::log(ys[i]));
    }
  }
  if (lx.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= double(lx.size());
  my /= double(lx.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return num / den;
}

}  // namespace

void validate(const SourceParams& params) {
  auto in_range = [](double r) { return r >= 0.0 && r <= 0.2; };
  if (!in_range(params.gamma) || !in_range(params.g) || !in_range(params.nu))
    throw std::invalid_argument("source rates must lie in [0, 0.2]");
  if (params.n_max < 2 || params.n_max > 4)
    throw std::invalid_argument("n_max must lie in [2, 4]");
}

std::vector<Emission> pdc_emission(double rate, int n_max) {
  if (rate < 0.0) throw std::invalid_argument("emission rate must be >= 0");
  std::vector<Emission> out;
  double total = 0.0;
  double p = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    out.push_back({n, p});
    total += p;
    p *= rate;
  }
  for (Emission& e : out) e.probability /= total;
  return out;
}

std::vector<Emission> wcp_emission(double nu, int n_max) {
  if (nu < 0.0) throw std::invalid_argument("mean photon number must be >= 0");
  std::vector<Emission> out;
  double total = 0.0;
  double p = 1.0;  // nu^n / n!, the common e^{-nu} cancels in the renormalization
  for (int n = 0; n <= n_max; ++n) {
    out.push_back({n, p});
    total += p;
    p *= nu / double(n + 1);
  }
  for (Emission& e : out) e.probability /= total;
  return out;
}

std::string event_label(const EventRate& e) {
  return "epr=" + std::to_string(e.n_epr) + ",anc=" + std::to_string(e.n_anc);
}

FeasibilityReport feasibility_w4(const SourceParams& params, SourceConfig config) {
  validate(params);
  const bool wcp = config == SourceConfig::pdc_wcp;

  std::vector<Emission> epr_dist = pdc_emission(params.gamma, params.n_max);
  std::vector<Emission> anc_dist = wcp ? wcp_emission(params.nu, 2 * params.n_max)
                                       : pdc_emission(params.g, params.n_max);

  QubitState w4q = w_target(4);
  w4q.mode_order = {kEprModeA, kOut0, kOut1, kOut2};
  const PhotonicState w4 = photonic_from_qubits(w4q);

  FeasibilityReport report;
  double boundary_rate = 0.0;

  for (const Emission& epr : epr_dist) {
    const int anc_cap = wcp ? 2 * (params.n_max - epr.n) : params.n_max - epr.n;
    for (const Emission& anc : anc_dist) {
      if (anc.n > anc_cap) continue;
      const int weight = epr.n + (wcp ? (anc.n + 1) / 2 : anc.n);
      if (weight == 0) continue;  // vacuum event, no coincidence possible

      PhotonicState input = multi_epr(epr.n);
      const int anc_photons = wcp ? anc.n : 2 * anc.n;
      if (anc_photons > 0) {
        input = tensor(input,
                       make_fock(Occupation{{{kAncMode, Polarization::H}, anc_photons}}));
      }

      PhotonicState wired = apply_beamsplitter(input, kEprModeB, kAncMode, kMixMode, kOut0);
      wired = apply_bs_split(wired, kMixMode, kOut1, kOut2);
      wired = apply_half_wave_ps(wired, kOut0);
      PostSelectResult sel = post_select_clicks(wired, {kEprModeA, kOut0, kOut1, kOut2});
      if (sel.probability <= 0.0) continue;

      EventRate event;
      event.n_epr = epr.n;
      event.n_anc = anc.n;
      event.rate = epr.probability * anc.probability * sel.probability;
      event.fidelity = fidelity(sel.conditional, w4);
      event.signal = std::abs(event.fidelity - 1.0) <= kProbTol;
      if (event.signal)
        report.signal_rate += event.rate;
      else
        report.error_rate += event.rate;
      if (weight == params.n_max) boundary_rate += event.rate;
      report.breakdown.push_back(event);
    }
  }

  const double total = report.signal_rate + report.error_rate;
  if (total > 0.0) {
    double f = 0.0;
    for (const EventRate& e : report.breakdown) f += e.rate * e.fidelity;
    report.fidelity = f / total;
    report.truncation_warning = boundary_rate > 0.01 * total;
  }
  return report;
}

std::map<std::string, double> scaling_fit(SourceConfig config,
                                          const std::vector<double>& gamma_grid,
                                          const std::vector<double>& anc_grid,
                                          const SourceParams& base) {
  if (gamma_grid.size() < 4 || anc_grid.size() < 4)
    throw std::invalid_argument("scaling_fit needs at least 4 grid points per axis");

  auto sweep = [&](const std::vector<double>& grid, bool vary_gamma) {
    std::vector<double> signal(grid.size(), 0.0);
    std::map<std::string, std::vector<double>> error_classes;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      SourceParams p = base;
      if (vary_gamma)
        p.gamma = grid[i];
      else if (config == SourceConfig::pdc_wcp)
        p.nu = grid[i];
      else
        p.g = grid[i];
      FeasibilityReport rep = feasibility_w4(p, config);
      signal[i] = rep.signal_rate;
      for (const EventRate& e : rep.breakdown) {
        if (e.signal) continue;
        auto& rates = error_classes[event_label(e)];
        rates.resize(grid.size(), 0.0);
        rates[i] = e.rate;
      }
    }
    // Dominant error class: largest total rate over the grid.
    std::vector<double> dominant(grid.size(), 0.0);
    double best = -1.0;
    for (const auto& [label, rates] : error_classes) {
      double sum = 0.0;
      for (double r : rates) sum += r;
      if (sum > best) {
        best = sum;
        dominant = rates;
      }
    }
    return std::pair{fit_slope(grid, signal), fit_slope(grid, dominant)};
  };

  auto [sg, eg] = sweep(gamma_grid, true);
  auto [sa, ea] = sweep(anc_grid, false);
  return {{"signal_vs_gamma", sg},
          {"error_vs_gamma", eg},
          {"signal_vs_anc", sa},
          {"error_vs_anc", ea}};
}

}  // namespace wgate
