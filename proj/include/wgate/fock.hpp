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
#include <compare>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wgate {

using cd = std::complex<double>;

// Numerical policy shared across the library: amplitudes below kPruneTol are
// dropped from sparse states; kAmpTol compares amplitudes, kProbTol
// probabilities and fidelities.
inline constexpr double kPruneTol = 1e-14;
inline constexpr double kAmpTol = 1e-12;
inline constexpr double kProbTol = 1e-9;

enum class Polarization : std::uint8_t { H = 0, V = 1 };

inline char pol_char(Polarization p) { return p == Polarization::H ? 'H' : 'V'; }

// One bosonic mode: a spatial path together with a polarization.
struct Slot {
  int mode;
  Polarization pol;
  auto operator<=>(const Slot&) const = default;
};

struct ModeCollisionError : std::runtime_error {
  explicit ModeCollisionError(const std::string& what) : std::runtime_error(what) {}
};

struct EncodingError : std::runtime_error {
  explicit EncodingError(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Photon counts per slot. Entries are kept sorted by (mode, H before V) and
// zero counts are never stored, so equality is slot-wise and the ordering is
// the canonical basis order used for serialization.
class Occupation {
 public:
  Occupation() = default;
  Occupation(std::initializer_list<std::pair<Slot, int>> entries);

  int count(Slot s) const;
  int mode_total(int mode) const;
  int total() const;
  bool occupies_mode(int mode) const;

  // Adds delta photons to slot s; the resulting count must stay >= 0.
  void add(Slot s, int delta);

  const std::vector<std::pair<Slot, int>>& entries() const { return entries_; }
  std::vector<int> modes() const;

  std::string str() const;

  auto operator<=>(const Occupation&) const = default;

 private:
  std::vector<std::pair<Slot, int>> entries_;
};

// Sparse complex-amplitude map over occupation vectors. States are value
// types; every operation below returns a new state.
class PhotonicState {
 public:
  PhotonicState() = default;

  static PhotonicState vacuum();

  bool normalized() const { return normalized_; }
  void set_normalized(bool v) { normalized_ = v; }

  const std::map<Occupation, cd>& amplitudes() const { return amps_; }
  cd amplitude(const Occupation& occ) const;
  void set_amplitude(const Occupation& occ, cd a);
  void add_amplitude(const Occupation& occ, cd a);

  double norm2() const;
  std::size_t term_count() const { return amps_.size(); }
  bool empty() const { return amps_.empty(); }

  // Largest spatial-mode id appearing in the support; -1 if none.
  int max_mode() const;
  // Largest total photon number over basis terms.
  int max_photons() const;

  void prune(double tol = kPruneTol);
  void renormalize();

 private:
  std::map<Occupation, cd> amps_;
  bool normalized_ = false;
};

struct PostSelectPattern {
  // Required total photon count (H+V) per constrained spatial mode; modes
  // absent from the map are unconstrained.
  std::map<int, int> required;
};

struct PostSelectResult {
  double probability = 0.0;
  PhotonicState conditional;
};

// Polarization qubits extracted from a one-photon-per-mode state.
// Qubit k lives in spatial mode mode_order[k]; H encodes 0 and V encodes 1.
// Amplitude indexing is big-endian: qubit 0 is the leftmost bit.
struct QubitState {
  int n = 0;
  std::vector<cd> amps;
  std::vector<int> mode_order;
};

PhotonicState make_fock(const Occupation& occ);

// Bosonic creation operator on one slot; result is flagged unnormalized.
PhotonicState apply_create(const PhotonicState& state, int mode, Polarization pol);

// 50:50 beamsplitter, polarization independent, with the convention
//   a_in_a -> (a_out_c - a_out_d)/sqrt(2),  a_in_b -> (a_out_c + a_out_d)/sqrt(2).
// Throws ModeCollisionError if an output id collides with an occupied mode
// that is not one of the inputs.
PhotonicState apply_beamsplitter(const PhotonicState& state, int in_a, int in_b,
                                 int out_c, int out_d);

// 50:50 beamsplitter with vacuum on the second input port:
//   a_in_m -> (a_out_c + a_out_d)/sqrt(2).
PhotonicState apply_bs_split(const PhotonicState& state, int in_m, int out_c, int out_d);

// Half-wave plate phase shifter: pi phase between H and V on one mode,
// i.e. an amplitude factor (-1)^(n_V).
PhotonicState apply_half_wave_ps(const PhotonicState& state, int mode);

// Polarization rotation on one mode:
//   a_H -> cos(t) a_H + sin(t) a_V,  a_V -> -sin(t) a_H + cos(t) a_V.
PhotonicState apply_pol_rotation(const PhotonicState& state, int mode, double theta);

// Tensor product; the two states must occupy disjoint spatial modes.
PhotonicState tensor(const PhotonicState& a, const PhotonicState& b);

// Linear combination sum_i coeff_i * state_i, returned unnormalized.
PhotonicState superpose(const std::vector<std::pair<cd, PhotonicState>>& terms);

// Projects a normalized state onto the subspace where every constrained
// mode's total photon count matches exactly. probability is the surviving
// squared norm; the conditional is renormalized when probability > 0.
PostSelectResult post_select(const PhotonicState& state, const PostSelectPattern& pattern);

// Threshold-detector coincidence: keeps terms with at least one photon in
// each listed mode. Used by the source feasibility model.
PostSelectResult post_select_clicks(const PhotonicState& state, const std::vector<int>& modes);

cd inner_product(const PhotonicState& a, const PhotonicState& b);
double fidelity(const PhotonicState& a, const PhotonicState& b);

cd inner_product(const QubitState& a, const QubitState& b);
double fidelity(const QubitState& a, const QubitState& b);

// Reads out polarization qubits. Every basis term must carry exactly one
// photon in each listed mode and none elsewhere; violations raise
// EncodingError.
QubitState extract_qubits(const PhotonicState& state, const std::vector<int>& mode_order);

// Inverse of extract_qubits: one photon per mode, H for 0 and V for 1.
PhotonicState photonic_from_qubits(const QubitState& q);

}  // namespace wgate
