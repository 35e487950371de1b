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

#include "wgate/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace wgate {

namespace {

constexpr double kPsdTol = 1e-9;

std::size_t dim(int n) { return std::size_t(1) << n; }

}  // namespace

void validate(const DensityMatrix& rho) {
  const auto d = Eigen::Index(dim(rho.n));
  if (rho.entries.rows() != d || rho.entries.cols() != d)
    throw std::invalid_argument("density matrix shape does not match qubit count");
  if ((rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.entries.trace() - cd{1.0, 0.0}) > kProbTol)
    throw std::invalid_argument("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries);
  if (es.eigenvalues().minCoeff() < -kPsdTol)
    throw std::invalid_argument("density matrix is not positive semidefinite");
}

double success_formula(SuccessKind kind, int n_or_k) {
  switch (kind) {
    case SuccessKind::expand_w:
      if (n_or_k < 1) throw std::invalid_argument("expand_w formula requires N >= 1");
      return double(n_or_k + 2) / (16.0 * double(n_or_k));
    case SuccessKind::cascade_odd:
      if (n_or_k < 0) throw std::invalid_argument("cascade formula requires k >= 0");
      return double(2 * n_or_k + 1) * std::pow(2.0, -4.0 * n_or_k);
    case SuccessKind::cascade_even:
      if (n_or_k < 0) throw std::invalid_argument("cascade formula requires k >= 0");
      return double(n_or_k + 1) * std::pow(2.0, -4.0 * n_or_k);
    case SuccessKind::ghz_plus2:
      return 0.125;
  }
  throw std::invalid_argument("unknown formula kind");
}

DensityMatrix reduce(const QubitState& q, const std::vector<int>& keep) {
  for (int k : keep)
    if (k < 0 || k >= q.n) throw std::invalid_argument("qubit index out of range");

  const int m = int(keep.size());
  const std::size_t dk = dim(m);
  DensityMatrix rho;
  rho.n = m;
  rho.entries = Eigen::MatrixXcd::Zero(Eigen::Index(dk), Eigen::Index(dk));

  std::vector<int> rest;
  for (int k = 0; k < q.n; ++k)
    if (std::find(keep.begin(), keep.end(), k) == keep.end()) rest.push_back(k);

  auto full_index = [&](std::size_t kept_bits, std::size_t rest_bits) {
    std::size_t idx = 0;
    for (int a = 0; a < m; ++a)
      if ((kept_bits >> (m - 1 - a)) & 1) idx |= std::size_t(1) << (q.n - 1 - keep[std::size_t(a)]);
    for (std::size_t b = 0; b < rest.size(); ++b)
      if ((rest_bits >> (rest.size() - 1 - b)) & 1)
        idx |= std::size_t(1) << (q.n - 1 - rest[b]);
    return idx;
  };

  const std::size_t dr = std::size_t(1) << rest.size();
  for (std::size_t r = 0; r < dk; ++r) {
    for (std::size_t c = 0; c < dk; ++c) {
      cd sum{0.0, 0.0};
      for (std::size_t t = 0; t < dr; ++t)
        sum += q.amps[full_index(r, t)] * std::conj(q.amps[full_index(c, t)]);
      rho.entries(Eigen::Index(r), Eigen::Index(c)) = sum;
    }
  }
  return rho;
}

DensityMatrix reduce(const DensityMatrix& rho, const std::vector<int>& keep) {
  for (int k : keep)
    if (k < 0 || k >= rho.n) throw std::invalid_argument("qubit index out of range");

  const int m = int(keep.size());
  const std::size_t dk = dim(m);
  std::vector<int> rest;
  for (int k = 0; k < rho.n; ++k)
    if (std::find(keep.begin(), keep.end(), k) == keep.end()) rest.push_back(k);

  auto full_index = [&](std::size_t kept_bits, std::size_t rest_bits) {
    std::size_t idx = 0;
    for (int a = 0; a < m; ++a)
      if ((kept_bits >> (m - 1 - a)) & 1)
        idx |= std::size_t(1) << (rho.n - 1 - keep[std::size_t(a)]);
    for (std::size_t b = 0; b < rest.size(); ++b)
      if ((rest_bits >> (rest.size() - 1 - b)) & 1)
        idx |= std::size_t(1) << (rho.n - 1 - rest[b]);
    return idx;
  };

  DensityMatrix out;
  out.n = m;
  out.entries = Eigen::MatrixXcd::Zero(Eigen::Index(dk), Eigen::Index(dk));
  const std::size_t dr = std::size_t(1) << rest.size();
  for (std::size_t r = 0; r < dk; ++r)
    for (std::size_t c = 0; c < dk; ++c) {
      cd sum{0.0, 0.0};
      for (std::size_t t = 0; t < dr; ++t)
        sum += rho.entries(Eigen::Index(full_index(r, t)), Eigen::Index(full_index(c, t)));
      out.entries(Eigen::Index(r), Eigen::Index(c)) = sum;
    }
  return out;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.n != 2) throw std::invalid_argument("concurrence is defined for 2 qubits");
  validate(rho);

  // sigma_y (x) sigma_y is real: antidiagonal (-1, 1, 1, -1).
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;

  Eigen::Matrix4cd r = rho.entries * yy * rho.entries.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r, /*computeEigenvectors=*/false);

  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i)
    lambda[std::size_t(i)] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
  std::sort(lambda.begin(), lambda.end(), std::greater<double>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

std::vector<PairConcurrence> web_report(const QubitState& q) {
  if (q.n > 8) throw std::invalid_argument("web_report supports up to 8 qubits");
  std::vector<PairConcurrence> out;
  for (int i = 0; i < q.n; ++i)
    for (int j = i + 1; j < q.n; ++j)
      out.push_back({i, j, concurrence(reduce(q, {i, j}))});
  return out;
}

}  // namespace wgate
