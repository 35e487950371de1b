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

#include <Eigen/Dense>
#include <vector>

#include "wgate/fock.hpp"

namespace wgate {

struct DensityMatrix {
  int n = 0;  // qubit count; entries is 2^n x 2^n
  Eigen::MatrixXcd entries;
};

// Throws std::invalid_argument unless rho is Hermitian (1e-12), has unit
// trace (1e-9) and is positive semidefinite down to eigenvalue -1e-9.
void validate(const DensityMatrix& rho);

enum class SuccessKind { expand_w, cascade_odd, cascade_even, ghz_plus2 };

// Closed-form success probabilities: (n+2)/(16n) for one expansion of W_n,
// (2k+1) 2^{-4k} and (k+1) 2^{-4k} for k-fold cascades from |1_V> and an EPR
// pair, and the constant 1/8 for the GHZ gate.
double success_formula(SuccessKind kind, int n_or_k);

// Partial trace keeping the listed qubits (indices into the current
// register, in the order they should appear in the result).
DensityMatrix reduce(const QubitState& q, const std::vector<int>& keep);
DensityMatrix reduce(const DensityMatrix& rho, const std::vector<int>& keep);

// Two-qubit concurrence via the spin-flip construction: the eigenvalues of
// rho * (sy (x) sy) rho^* (sy (x) sy) give C = max(0, l1 - l2 - l3 - l4).
double concurrence(const DensityMatrix& rho);

struct PairConcurrence {
  int i = 0;
  int j = 0;
  double concurrence = 0.0;
};

// Concurrence of every qubit pair; requires n <= 8.
std::vector<PairConcurrence> web_report(const QubitState& q);

}  // namespace wgate
