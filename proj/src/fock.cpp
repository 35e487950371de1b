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

#include "wgate/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wgate {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Occupation::Occupation(std::initializer_list<std::pair<Slot, int>> entries) {
  for (const auto& [slot, n] : entries) add(slot, n);
}

int Occupation::count(Slot s) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                             [](const auto& e, Slot key) { return e.first < key; });
  if (it != entries_.end() && it->first == s) return it->second;
  return 0;
}

int Occupation::mode_total(int mode) const {
  int n = 0;
  for (const auto& [slot, c] : entries_)
    if (slot.mode == mode) n += c;
  return n;
}

int Occupation::total() const {
  int n = 0;
  for (const auto& [slot, c] : entries_) n += c;
  return n;
}

bool Occupation::occupies_mode(int mode) const { return mode_total(mode) > 0; }

void Occupation::add(Slot s, int delta) {
  if (delta == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                             [](const auto& e, Slot key) { return e.first < key; });
  if (it != entries_.end() && it->first == s) {
    it->second += delta;
    if (it->second < 0) throw std::invalid_argument("negative photon count");
    if (it->second == 0) entries_.erase(it);
  } else {
    if (delta < 0) throw std::invalid_argument("negative photon count");
    entries_.insert(it, {s, delta});
  }
}

std::vector<int> Occupation::modes() const {
  std::vector<int> out;
  for (const auto& [slot, c] : entries_)
    if (out.empty() || out.back() != slot.mode) out.push_back(slot.mode);
  return out;
}

std::string Occupation::str() const {
  if (entries_.empty()) return "|0>";
  std::ostringstream os;
  int current = entries_.front().first.mode;
  os << '|';
  bool first = true;
  for (const auto& [slot, c] : entries_) {
    if (slot.mode != current) {
      os << ">_" << current << " |";
      current = slot.mode;
      first = true;
    }
    if (!first) os << ' ';
    os << c << pol_char(slot.pol);
    first = false;
  }
  os << ">_" << current;
  return os.str();
}

PhotonicState PhotonicState::vacuum() {
  PhotonicState s;
  s.amps_[Occupation{}] = cd{1.0, 0.0};
  s.normalized_ = true;
  return s;
}

cd PhotonicState::amplitude(const Occupation& occ) const {
  auto it = amps_.find(occ);
  return it == amps_.end() ? cd{0.0, 0.0} : it->second;
}

void PhotonicState::set_amplitude(const Occupation& occ, cd a) {
  if (std::abs(a) == 0.0)
    amps_.erase(occ);
  else
    amps_[occ] = a;
}

void PhotonicState::add_amplitude(const Occupation& occ, cd a) {
  auto [it, inserted] = amps_.try_emplace(occ, a);
  if (!inserted) it->second += a;
}

double PhotonicState::norm2() const {
  double n = 0.0;
  for (const auto& [occ, a] : amps_) n += std::norm(a);
  return n;
}

int PhotonicState::max_mode() const {
  int m = -1;
  for (const auto& [occ, a] : amps_)
    if (!occ.entries().empty()) m = std::max(m, occ.entries().back().first.mode);
  return m;
}

int PhotonicState::max_photons() const {
  int n = 0;
  for (const auto& [occ, a] : amps_) n = std::max(n, occ.total());
  return n;
}

void PhotonicState::prune(double tol) {
  for (auto it = amps_.begin(); it != amps_.end();) {
    if (std::abs(it->second) < tol)
      it = amps_.erase(it);
    else
      ++it;
  }
}

void PhotonicState::renormalize() {
  double n = std::sqrt(norm2());
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero state");
  for (auto& [occ, a] : amps_) a /= n;
  normalized_ = true;
}

PhotonicState make_fock(const Occupation& occ) {
  PhotonicState s;
  s.set_amplitude(occ, cd{1.0, 0.0});
  s.set_normalized(true);
  return s;
}

PhotonicState apply_create(const PhotonicState& state, int mode, Polarization pol) {
  PhotonicState out;
  Slot s{mode, pol};
  for (const auto& [occ, a] : state.amplitudes()) {
    Occupation next = occ;
    int n = occ.count(s);
    next.add(s, 1);
    out.add_amplitude(next, a * std::sqrt(double(n + 1)));
  }
  out.set_normalized(false);
  return out;
}

namespace {

// Substitutes each input slot's creation operator by a linear combination of
// output-slot creation operators and re-expands the basis terms. `images[i]`
// is the image of `inputs[i]`. Slots not listed pass through unchanged; the
// caller guarantees output slots do not collide with occupied passthrough
// slots.
PhotonicState apply_linear(const PhotonicState& state, const std::vector<Slot>& inputs,
                           const std::vector<std::vector<std::pair<Slot, cd>>>& images) {
  PhotonicState out;
  for (const auto& [occ, amp] : state.amplitudes()) {
    // Split the term into transformed counts and the passthrough rest.
    std::vector<int> counts(inputs.size(), 0);
    Occupation rest = occ;
    double prefactor = 1.0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      counts[i] = occ.count(inputs[i]);
      if (counts[i] > 0) {
        rest.add(inputs[i], -counts[i]);
        prefactor /= std::sqrt(factorial(counts[i]));
      }
    }

    // Expand prod_i (sum_j c_ij a_j)^{n_i} as a polynomial in output slots,
    // using Occupation as the exponent record.
    std::map<Occupation, cd> poly;
    poly[Occupation{}] = amp * prefactor;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      for (int rep = 0; rep < counts[i]; ++rep) {
        std::map<Occupation, cd> next;
        for (const auto& [mono, coeff] : poly) {
          for (const auto& [slot, c] : images[i]) {
            Occupation m = mono;
            m.add(slot, 1);
            auto [it, inserted] = next.try_emplace(m, coeff * c);
            if (!inserted) it->second += coeff * c;
          }
        }
        poly = std::move(next);
      }
    }

    for (const auto& [mono, coeff] : poly) {
      Occupation result = rest;
      double post = 1.0;
      for (const auto& [slot, c] : mono.entries()) {
        result.add(slot, c);
        post *= std::sqrt(factorial(c));
      }
      out.add_amplitude(result, coeff * post);
    }
  }
  out.prune();
  out.set_normalized(state.normalized());
  return out;
}

void check_output_free(const PhotonicState& state, int out_mode,
                       std::initializer_list<int> in_modes) {
  for (int m : in_modes)
    if (out_mode == m) return;
  for (const auto& [occ, a] : state.amplitudes()) {
    if (occ.occupies_mode(out_mode))
      throw ModeCollisionError("output mode " + std::to_string(out_mode) +
                               " already occupied in term " + occ.str());
  }
}

}  // namespace

PhotonicState apply_beamsplitter(const PhotonicState& state, int in_a, int in_b,
                                 int out_c, int out_d) {
  if (in_a == in_b) throw std::invalid_argument("beamsplitter input modes must differ");
  if (out_c == out_d) throw std::invalid_argument("beamsplitter output modes must differ");
  check_output_free(state, out_c, {in_a, in_b});
  check_output_free(state, out_d, {in_a, in_b});

  const double r = 1.0 / std::sqrt(2.0);
  std::vector<Slot> inputs;
  std::vector<std::vector<std::pair<Slot, cd>>> images;
  for (Polarization p : {Polarization::H, Polarization::V}) {
    inputs.push_back({in_a, p});
    images.push_back({{{out_c, p}, cd{r, 0}}, {{out_d, p}, cd{-r, 0}}});
    inputs.push_back({in_b, p});
    images.push_back({{{out_c, p}, cd{r, 0}}, {{out_d, p}, cd{r, 0}}});
  }
  return apply_linear(state, inputs, images);
}

PhotonicState apply_bs_split(const PhotonicState& state, int in_m, int out_c, int out_d) {
  if (out_c == out_d) throw std::invalid_argument("beamsplitter output modes must differ");
  check_output_free(state, out_c, {in_m});
  check_output_free(state, out_d, {in_m});

  const double r = 1.0 / std::sqrt(2.0);
  std::vector<Slot> inputs;
  std::vector<std::vector<std::pair<Slot, cd>>> images;
  for (Polarization p : {Polarization::H, Polarization::V}) {
    inputs.push_back({in_m, p});
    images.push_back({{{out_c, p}, cd{r, 0}}, {{out_d, p}, cd{r, 0}}});
  }
  return apply_linear(state, inputs, images);
}

PhotonicState apply_half_wave_ps(const PhotonicState& state, int mode) {
  PhotonicState out;
  for (const auto& [occ, a] : state.amplitudes()) {
    int nv = occ.count({mode, Polarization::V});
    out.add_amplitude(occ, (nv % 2 == 0) ? a : -a);
  }
  out.set_normalized(state.normalized());
  return out;
}

PhotonicState apply_pol_rotation(const PhotonicState& state, int mode, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  std::vector<Slot> inputs{{mode, Polarization::H}, {mode, Polarization::V}};
  std::vector<std::vector<std::pair<Slot, cd>>> images{
      {{{mode, Polarization::H}, cd{c, 0}}, {{mode, Polarization::V}, cd{s, 0}}},
      {{{mode, Polarization::H}, cd{-s, 0}}, {{mode, Polarization::V}, cd{c, 0}}}};
  return apply_linear(state, inputs, images);
}

PhotonicState tensor(const PhotonicState& a, const PhotonicState& b) {
  for (const auto& [occ_b, amp_b] : b.amplitudes())
    for (const auto& [slot, c] : occ_b.entries())
      for (const auto& [occ_a, amp_a] : a.amplitudes())
        if (occ_a.occupies_mode(slot.mode))
          throw ModeCollisionError("tensor factors share spatial mode " +
                                   std::to_string(slot.mode));

  PhotonicState out;
  for (const auto& [occ_a, amp_a] : a.amplitudes()) {
    for (const auto& [occ_b, amp_b] : b.amplitudes()) {
      Occupation occ = occ_a;
      for (const auto& [slot, c] : occ_b.entries()) occ.add(slot, c);
      out.add_amplitude(occ, amp_a * amp_b);
    }
  }
  out.set_normalized(a.normalized() && b.normalized());
  return out;
}

PhotonicState superpose(const std::vector<std::pair<cd, PhotonicState>>& terms) {
  PhotonicState out;
  for (const auto& [coeff, state] : terms)
    for (const auto& [occ, a] : state.amplitudes()) out.add_amplitude(occ, coeff * a);
  out.prune();
  out.set_normalized(false);
  return out;
}

PostSelectResult post_select(const PhotonicState& state, const PostSelectPattern& pattern) {
  if (!state.normalized())
    throw std::invalid_argument("post_select requires a normalized state");
  for (const auto& [mode, n] : pattern.required)
    if (n < 0) throw std::invalid_argument("post-selection counts must be >= 0");

  PostSelectResult res;
  for (const auto& [occ, a] : state.amplitudes()) {
    bool keep = true;
    for (const auto& [mode, n] : pattern.required) {
      if (occ.mode_total(mode) != n) {
        keep = false;
        break;
      }
    }
    if (keep) {
      res.probability += std::norm(a);
      res.conditional.add_amplitude(occ, a);
    }
  }
  if (res.probability > 0.0) res.conditional.renormalize();
  return res;
}

PostSelectResult post_select_clicks(const PhotonicState& state, const std::vector<int>& modes) {
  if (!state.normalized())
    throw std::invalid_argument("post_select requires a normalized state");
  PostSelectResult res;
  for (const auto& [occ, a] : state.amplitudes()) {
    bool keep = true;
    for (int m : modes) {
      if (occ.mode_total(m) < 1) {
        keep = false;
        break;
      }
    }
    if (keep) {
      res.probability += std::norm(a);
      res.conditional.add_amplitude(occ, a);
    }
  }
  if (res.probability > 0.0) res.conditional.renormalize();
  return res;
}

cd inner_product(const PhotonicState& a, const PhotonicState& b) {
  // Iterate over the smaller support.
  const PhotonicState& small = a.term_count() <= b.term_count() ? a : b;
  const PhotonicState& large = a.term_count() <= b.term_count() ? b : a;
  bool swapped = &small != &a;
  cd sum{0.0, 0.0};
  for (const auto& [occ, amp] : small.amplitudes()) {
    cd other = large.amplitude(occ);
    sum += swapped ? std::conj(other) * amp : std::conj(amp) * other;
  }
  return sum;
}

double fidelity(const PhotonicState& a, const PhotonicState& b) {
  return std::norm(inner_product(a, b));
}

cd inner_product(const QubitState& a, const QubitState& b) {
  if (a.n != b.n) throw std::invalid_argument("qubit counts differ");
  cd sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.amps.size(); ++i) sum += std::conj(a.amps[i]) * b.amps[i];
  return sum;
}

double fidelity(const QubitState& a, const QubitState& b) {
  return std::norm(inner_product(a, b));
}

QubitState extract_qubits(const PhotonicState& state, const std::vector<int>& mode_order) {
  const int n = int(mode_order.size());
  QubitState q;
  q.n = n;
  q.mode_order = mode_order;
  q.amps.assign(std::size_t(1) << n, cd{0.0, 0.0});

  for (const auto& [occ, a] : state.amplitudes()) {
    if (occ.total() != n)
      throw EncodingError("term " + occ.str() + " has photons outside the listed modes");
    std::size_t idx = 0;
    for (int k = 0; k < n; ++k) {
      int mode = mode_order[std::size_t(k)];
      int nh = occ.count({mode, Polarization::H});
      int nv = occ.count({mode, Polarization::V});
      if (nh + nv != 1)
        throw EncodingError("term " + occ.str() + " does not carry one photon in mode " +
                            std::to_string(mode));
      if (nv == 1) idx |= std::size_t(1) << (n - 1 - k);
    }
    q.amps[idx] += a;
  }

  double norm = 0.0;
  for (const cd& a : q.amps) norm += std::norm(a);
  if (norm == 0.0) throw EncodingError("cannot extract qubits from the zero state");
  norm = std::sqrt(norm);
  for (cd& a : q.amps) a /= norm;
  return q;
}

PhotonicState photonic_from_qubits(const QubitState& q) {
  if (int(q.mode_order.size()) != q.n)
    throw std::invalid_argument("mode_order must list one mode per qubit");
  PhotonicState out;
  for (std::size_t idx = 0; idx < q.amps.size(); ++idx) {
    if (std::abs(q.amps[idx]) < kPruneTol) continue;
    Occupation occ;
    for (int k = 0; k < q.n; ++k) {
      bool v = (idx >> (q.n - 1 - k)) & 1;
      occ.add({q.mode_order[std::size_t(k)], v ? Polarization::V : Polarization::H}, 1);
    }
    out.add_amplitude(occ, q.amps[idx]);
  }
  out.renormalize();
  return out;
}

}  // namespace wgate
