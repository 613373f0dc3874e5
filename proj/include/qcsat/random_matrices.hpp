// Copyright 2026 The qcsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qcsat/error.hpp"

namespace qcsat {

using MatrixXc = Eigen::MatrixXcd;

/// Matrix of i.i.d. standard complex Gaussians.
template <class Rng>
MatrixXc ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  MatrixXc g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = {normal(rng), normal(rng)};
  return g;
}

/// rows x cols matrix with orthonormal columns, Haar distributed (rows >= cols).
template <class Rng>
MatrixXc random_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  if (rows < cols) throw DomainError("isometry needs rows >= cols");
  const MatrixXc g = ginibre(rows, cols, rng);
  Eigen::HouseholderQR<MatrixXc> qr(g);
  MatrixXc q = qr.householderQ() * MatrixXc::Identity(rows, cols);
  const MatrixXc r = qr.matrixQR().topRows(cols).template triangularView<Eigen::Upper>();
  // Fix column phases so the distribution is Haar, not QR-convention biased.
  for (Eigen::Index j = 0; j < cols; ++j) {
    const auto d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

template <class Rng>
MatrixXc random_unitary(Eigen::Index d, Rng& rng) {
  return random_isometry(d, d, rng);
}

/// G G^+ / tr(G G^+) for a d x rank Ginibre G.
template <class Rng>
MatrixXc random_density_matrix(Eigen::Index d, Rng& rng, Eigen::Index rank = 0) {
  const MatrixXc g = ginibre(d, rank > 0 ? rank : d, rng);
  MatrixXc rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

/// Kraus operators {A_k} of a random trace-preserving channel, taken as
/// blocks of a Haar isometry C^d_in -> C^(count*d_out).
template <class Rng>
std::vector<MatrixXc> random_kraus_operators(Eigen::Index d_in, Eigen::Index d_out, int count, Rng& rng) {
  if (count < 1) throw DomainError("need at least one Kraus operator");
  const MatrixXc v = random_isometry(count * d_out, d_in, rng);
  std::vector<MatrixXc> ops;
  for (int k = 0; k < count; ++k) ops.push_back(v.block(k * d_out, 0, d_out, d_in));
  return ops;
}

}  // namespace qcsat
