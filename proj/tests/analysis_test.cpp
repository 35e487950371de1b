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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wgate/analysis.hpp"
#include "wgate/gates.hpp"

using namespace wgate;

namespace {

// Independent oracle for the states used here, which reduce to "X states"
// (nonzero entries only on the diagonal and the |01><10| coherence):
//   C = 2 max(0, |rho_12| - sqrt(rho_00 rho_33)).
// Derived by hand from the spin-flip eigenvalues of such matrices.
double x_state_concurrence(const Eigen::Matrix4cd& rho) {
  double off = std::abs(rho(1, 2));
  double corner = std::sqrt(std::abs(rho(0, 0)) * std::abs(rho(3, 3)));
  return 2.0 * std::max(0.0, off - corner);
}

// Explicit two-qubit reduction of |W_N| without going through reduce():
// diag((N-2)/N, 1/N, 1/N, 0) plus 1/N coherence between |01> and |10>.
Eigen::Matrix4cd w_pair_reduction(int n) {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = double(n - 2) / n;
  rho(1, 1) = rho(2, 2) = 1.0 / n;
  rho(1, 2) = rho(2, 1) = 1.0 / n;
  return rho;
}

}  // namespace

TEST_CASE("success_formula") {
  CHECK(success_formula(SuccessKind::expand_w, 2) == doctest::Approx(0.125));
  CHECK(success_formula(SuccessKind::expand_w, 3) == doctest::Approx(5.0 / 48));
  CHECK(success_formula(SuccessKind::cascade_odd, 1) == doctest::Approx(3.0 / 16));
  CHECK(success_formula(SuccessKind::cascade_odd, 2) == doctest::Approx(5.0 / 256));
  CHECK(success_formula(SuccessKind::cascade_even, 2) == doctest::Approx(3.0 / 256));
  CHECK(success_formula(SuccessKind::ghz_plus2, 5) == doctest::Approx(0.125));
  CHECK_THROWS_AS(success_formula(SuccessKind::expand_w, 0), std::invalid_argument);
  CHECK_THROWS_AS(success_formula(SuccessKind::cascade_odd, -1), std::invalid_argument);
}

TEST_CASE("single-qubit reduction of W_N") {
  for (int n : {3, 4, 5}) {
    DensityMatrix rho = reduce(w_target(n), {0});
    validate(rho);
    CHECK(rho.entries(0, 0).real() == doctest::Approx(double(n - 1) / n).epsilon(1e-9));
    CHECK(rho.entries(1, 1).real() == doctest::Approx(1.0 / n).epsilon(1e-9));
    CHECK(std::abs(rho.entries(0, 1)) < 1e-12);
  }
}

TEST_CASE("GHZ pair reduction is the separable diagonal mixture") {
  DensityMatrix rho = reduce(ghz_target(3), {0, 1});
  validate(rho);
  CHECK(rho.entries(0, 0).real() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(rho.entries(3, 3).real() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(std::abs(rho.entries(0, 3)) < 1e-12);
  CHECK(std::abs(rho.entries(1, 1)) < 1e-12);
}

TEST_CASE("reducing to all qubits gives the projector") {
  QubitState w3 = w_target(3);
  DensityMatrix rho = reduce(w3, {0, 1, 2});
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      CHECK(std::abs(rho.entries(r, c) - w3.amps[std::size_t(r)] *
                                             std::conj(w3.amps[std::size_t(c)])) < 1e-12);
}

TEST_CASE("partial-trace composition") {
  QubitState w5 = w_target(5);
  DensityMatrix two_step = reduce(reduce(w5, {0, 1, 2}), {0, 2});
  DensityMatrix one_step = reduce(w5, {0, 2});
  CHECK((two_step.entries - one_step.entries).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("reduce rejects bad indices") {
  CHECK_THROWS_AS(reduce(w_target(3), {5}), std::invalid_argument);
}

TEST_CASE("concurrence of W_N pairs equals 2/N") {
  for (int n = 3; n <= 7; ++n) {
    DensityMatrix rho = reduce(w_target(n), {0, 1});
    double expected = x_state_concurrence(w_pair_reduction(n));
    CHECK(expected == doctest::Approx(2.0 / n).epsilon(1e-12));
    CHECK(concurrence(rho) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("concurrence of GHZ pairs is zero") {
  for (int n = 3; n <= 5; ++n) {
    DensityMatrix rho = reduce(ghz_target(n), {0, 1});
    Eigen::Matrix4cd explicit_rho = Eigen::Matrix4cd::Zero();
    explicit_rho(0, 0) = explicit_rho(3, 3) = 0.5;
    CHECK(x_state_concurrence(explicit_rho) == 0.0);
    CHECK(concurrence(rho) == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("Bell pair concurrence is 1") {
  DensityMatrix rho = reduce(w_target(2), {0, 1});
  CHECK(concurrence(rho) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("concurrence rejects non-2-qubit input") {
  CHECK_THROWS_AS(concurrence(reduce(w_target(3), {0})), std::invalid_argument);
}

TEST_CASE("web_report") {
  auto w4 = web_report(w_target(4));
  CHECK(w4.size() == 6);
  for (const auto& p : w4) CHECK(p.concurrence == doctest::Approx(0.5).epsilon(1e-9));

  auto g4 = web_report(ghz_target(4));
  for (const auto& p : g4) CHECK(p.concurrence == doctest::Approx(0.0).epsilon(1e-9));

  QubitState product;
  product.n = 4;
  product.amps.assign(16, cd{0, 0});
  product.amps[0] = cd{1, 0};
  product.mode_order = {0, 1, 2, 3};
  for (const auto& p : web_report(product))
    CHECK(p.concurrence == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("validate rejects broken density matrices") {
  DensityMatrix rho;
  rho.n = 1;
  rho.entries = Eigen::MatrixXcd::Zero(2, 2);
  rho.entries(0, 0) = 2.0;
  CHECK_THROWS_AS(validate(rho), std::invalid_argument);
  rho.entries(0, 0) = 1.5;
  rho.entries(1, 1) = -0.5;
  CHECK_THROWS_AS(validate(rho), std::invalid_argument);
}

TEST_CASE("formula and engine agree for N in 1..7") {
  for (int n = 1; n <= 7; ++n) {
    GateResult res = expand_w(photonic_from_qubits(w_target(n)), n - 1);
    CHECK(res.success_prob ==
          doctest::Approx(success_formula(SuccessKind::expand_w, n)).epsilon(1e-9));
  }
}

TEST_CASE("marginal state update after expansion") {
  // after expanding W_N, each untouched photon's reduced state is
  // diag((N+1)/(N+2), 1/(N+2))
  for (int n : {3, 4}) {
    GateResult res = expand_w(photonic_from_qubits(w_target(n)), n - 1);
    std::vector<int> modes;
    for (int m = 0; m < n - 1; ++m) modes.push_back(m);
    for (int m : res.output_modes) modes.push_back(m);
    QubitState q = extract_qubits(res.conditional, modes);
    for (int untouched = 0; untouched < n - 1; ++untouched) {
      DensityMatrix rho = reduce(q, {untouched});
      CHECK(rho.entries(0, 0).real() ==
            doctest::Approx(double(n + 1) / (n + 2)).epsilon(1e-9));
      CHECK(rho.entries(1, 1).real() == doctest::Approx(1.0 / (n + 2)).epsilon(1e-9));
    }
  }
}
