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


#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcsat/entropy.hpp"
#include "qcsat/random_matrices.hpp"

namespace {

using qcsat::DensityMatrix;
using qcsat::KrausChannel;
using qcsat::LogBase;
using qcsat::MatrixXc;

constexpr double kH34 = 0.8112781244591328;  // H(3/4, 1/4) in bits

DensityMatrix random_state(Eigen::Index d, std::mt19937_64& rng, Eigen::Index rank = 0) {
  return DensityMatrix(qcsat::random_density_matrix(d, rng, rank), 1e-10);
}

Eigen::VectorXcd basis_vec(Eigen::Index d, Eigen::Index i) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
  v(i) = 1.0;
  return v;
}

TEST(Density, Validation) {
  MatrixXc m = MatrixXc::Identity(2, 2);
  EXPECT_THROW(DensityMatrix{m}, qcsat::DomainError);
  m << 0.5, 0.6, 0.6, 0.5;
  EXPECT_THROW(DensityMatrix{m}, qcsat::DomainError);
  m << 0.5, 0.1, 0.2, 0.5;
  EXPECT_THROW(DensityMatrix{m}, qcsat::DomainError);
  EXPECT_THROW(DensityMatrix(MatrixXc(2, 3)), qcsat::DomainError);
}

TEST(VonNeumann, Examples) {
  EXPECT_NEAR(qcsat::vn_entropy(DensityMatrix::pure(basis_vec(2, 0))), 0.0, 1e-15);
  EXPECT_NEAR(qcsat::vn_entropy(DensityMatrix::maximally_mixed(2)), 1.0, 1e-15);
  EXPECT_NEAR(qcsat::vn_entropy(DensityMatrix::diagonal({0.75, 0.25})), kH34, 1e-15);
  EXPECT_NEAR(qcsat::vn_entropy(DensityMatrix::maximally_mixed(2), LogBase::kE), std::log(2.0), 1e-15);
}

TEST(VonNeumann, UnitaryInvarianceAndLogmOracle) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 200; ++i) {
    const Eigen::Index d = 2 + i % 7;
    const auto rho = random_state(d, rng);
    const MatrixXc u = qcsat::random_unitary(d, rng);
    const DensityMatrix rotated(u * rho.matrix() * u.adjoint(), 1e-10);
    const double s = qcsat::vn_entropy(rho);
    EXPECT_NEAR(qcsat::vn_entropy(rotated), s, 1e-10);
    EXPECT_NEAR(s, qcsat_test::vn_entropy_logm(rho.matrix()), 1e-9);
  }
}

TEST(Relative, Examples) {
  const auto zero = DensityMatrix::pure(basis_vec(2, 0));
  const auto one = DensityMatrix::pure(basis_vec(2, 1));
  const auto mixed = DensityMatrix::maximally_mixed(2);
  EXPECT_NEAR(qcsat::relative_entropy(mixed, mixed), 0.0, 1e-15);
  EXPECT_NEAR(qcsat::relative_entropy(zero, mixed), 1.0, 1e-14);
  EXPECT_EQ(qcsat::relative_entropy(zero, one), std::numeric_limits<double>::infinity());
  EXPECT_THROW(qcsat::relative_entropy(zero, DensityMatrix::maximally_mixed(3)), qcsat::DomainError);
}

TEST(Relative, KleinInequalityAndLogmOracle) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    const Eigen::Index d = 2 + i % 7;
    const auto sigma = random_state(d, rng);
    const auto rho = random_state(d, rng);
    const double s = qcsat::relative_entropy(sigma, rho);
    EXPECT_GE(s, 0.0);
    EXPECT_GT(s, 1e-10);
    EXPECT_NEAR(s, qcsat_test::relative_entropy_logm(sigma.matrix(), rho.matrix()), 1e-8);
    EXPECT_LT(qcsat::relative_entropy(rho, rho), 1e-10);
  }
}

TEST(Relative, RankDeficientSupport) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 50; ++i) {
    const auto rho = random_state(4, rng, 2);
    const auto full = random_state(4, rng);
    EXPECT_EQ(qcsat::relative_entropy(full, rho), std::numeric_limits<double>::infinity());
    EXPECT_LT(std::abs(qcsat::relative_entropy(rho, full)), std::numeric_limits<double>::infinity());
  }
}

TEST(Channel, Validation) {
  EXPECT_THROW(KrausChannel({}), qcsat::DomainError);
  EXPECT_THROW(KrausChannel({2.0 * MatrixXc::Identity(2, 2)}), qcsat::DomainError);
  EXPECT_THROW(KrausChannel({MatrixXc::Identity(2, 2), MatrixXc::Identity(3, 3)}), qcsat::DomainError);
  const KrausChannel half({std::sqrt(0.5) * MatrixXc::Identity(2, 2)}, qcsat::ChannelCheck::kTraceNonIncreasing);
  EXPECT_FALSE(half.trace_preserving());
  EXPECT_THROW(half.apply(DensityMatrix::maximally_mixed(2)), qcsat::DomainError);
  EXPECT_TRUE(KrausChannel::computational_pvm(3).is_rank1_pvm());
  EXPECT_FALSE(KrausChannel::identity(3).is_rank1_pvm());
  EXPECT_FALSE(KrausChannel::completely_depolarizing(2).is_rank1_pvm());
}

TEST(Ohya, IdentityChannelGivesEntropy) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 50; ++i) {
    const auto rho = random_state(2 + i % 5, rng);
    EXPECT_NEAR(qcsat::ohya_mutual(rho, KrausChannel::identity(rho.dim())), qcsat::vn_entropy(rho), 1e-9);
  }
}

TEST(Ohya, DepolarizingChannelGivesZero) {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 20; ++i) {
    const auto rho = random_state(3, rng);
    EXPECT_NEAR(qcsat::ohya_mutual(rho, KrausChannel::completely_depolarizing(3)), 0.0, 1e-10);
  }
}

TEST(Ohya, PvmBoundOnRandomStates) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 200; ++i) {
    const Eigen::Index d = 2 + i % 7;
    const auto rho = random_state(d, rng);
    const auto channel = KrausChannel::pvm(qcsat::random_unitary(d, rng));
    const double i1 = qcsat::ohya_mutual(rho, channel);
    EXPECT_LE(i1, std::min(qcsat::vn_entropy(rho), qcsat::vn_entropy(channel.apply(rho))) + 1e-10);
  }
}

TEST(Ohya, DegenerateSearchIsSeededAndNeverLower) {
  std::mt19937_64 rng(73);
  const auto rho = DensityMatrix::diagonal({0.4, 0.4, 0.2});
  for (int i = 0; i < 10; ++i) {
    const KrausChannel channel(qcsat::random_kraus_operators(3, 3, 2, rng));
    const double plain = qcsat::ohya_mutual(rho, channel);
    const double a = qcsat::ohya_mutual(rho, channel, {64, 9, LogBase::kTwo});
    const double b = qcsat::ohya_mutual(rho, channel, {64, 9, LogBase::kTwo});
    EXPECT_GE(a, plain);
    EXPECT_EQ(a, b);
  }
  EXPECT_THROW(qcsat::ohya_mutual(rho, KrausChannel::identity(2)), qcsat::DomainError);
}

TEST(Holevo, Examples) {
  const qcsat::Ensemble e{{0.5, 0.5}, {DensityMatrix::pure(basis_vec(2, 0)), DensityMatrix::pure(basis_vec(2, 1))}};
  EXPECT_NEAR(qcsat::holevo_mutual(e, KrausChannel::identity(2)), 1.0, 1e-14);
  EXPECT_NEAR(qcsat::holevo_mutual(e, KrausChannel::completely_depolarizing(2)), 0.0, 1e-14);
  const qcsat::Ensemble single{{1.0}, {DensityMatrix::maximally_mixed(3)}};
  EXPECT_NEAR(qcsat::holevo_mutual(single, KrausChannel::identity(3)), 0.0, 1e-14);
  const qcsat::Ensemble bad{{0.5, 0.6}, e.states};
  EXPECT_THROW(qcsat::holevo_mutual(bad, KrausChannel::identity(2)), qcsat::DomainError);
}

TEST(Holevo, OrthogonalPureEnsembleMatchesOhya) {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> uni(0.05, 1.0);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Index d = 2 + i % 3;
    const MatrixXc u = qcsat::random_unitary(d, rng);
    std::vector<double> priors;
    double total = 0.0;
    for (Eigen::Index k = 0; k < d; ++k) total += priors.emplace_back(uni(rng));
    for (auto& p : priors) p /= total;
    qcsat::Ensemble e;
    e.priors = priors;
    for (Eigen::Index k = 0; k < d; ++k) e.states.push_back(DensityMatrix::pure(u.col(k)));
    const KrausChannel channel(qcsat::random_kraus_operators(d, d, 3, rng));
    EXPECT_NEAR(qcsat::ohya_mutual(e.mixture(), channel), qcsat::holevo_mutual(e, channel), 1e-10);
  }
}

TEST(Exchange, Examples) {
  std::mt19937_64 rng(83);
  const auto rho = random_state(3, rng);
  EXPECT_NEAR(qcsat::entropy_exchange(rho, KrausChannel::unitary(qcsat::random_unitary(3, rng))), 0.0, 1e-12);
  const auto pvm = KrausChannel::computational_pvm(2);
  const MatrixXc w = qcsat::exchange_matrix(DensityMatrix::maximally_mixed(2), pvm);
  EXPECT_NEAR(std::abs(w(0, 0) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(qcsat::entropy_exchange(DensityMatrix::maximally_mixed(2), pvm), 1.0, 1e-14);
  EXPECT_NEAR(qcsat::entropy_exchange(DensityMatrix::diagonal({0.75, 0.25}), pvm), kH34, 1e-14);
}

TEST(Exchange, GramMatrixIsAState) {
  std::mt19937_64 rng(89);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Index d = 2 + i % 4;
    const auto rho = random_state(d, rng);
    const KrausChannel channel(qcsat::random_kraus_operators(d, d, 1 + i % 5, rng));
    const MatrixXc w = qcsat::exchange_matrix(rho, channel);
    EXPECT_NEAR(w.trace().real(), 1.0, 1e-10);
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(w);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-10);
  }
}

TEST(Coherent, Examples) {
  const auto ci = qcsat::coherent_informations(DensityMatrix::maximally_mixed(2), KrausChannel::identity(2));
  EXPECT_NEAR(ci.i2, 1.0, 1e-14);
  EXPECT_NEAR(ci.i3, 2.0, 1e-14);
}

TEST(Coherent, DifferenceIsInputEntropy) {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Index d = 2 + i % 4;
    const auto rho = random_state(d, rng);
    const KrausChannel channel(qcsat::random_kraus_operators(d, d, 1 + i % 4, rng));
    const auto ci = qcsat::coherent_informations(rho, channel);
    EXPECT_NEAR(ci.i3 - ci.i2, qcsat::vn_entropy(rho), 1e-12);
  }
}

TEST(PvmReport, Examples) {
  const auto r = qcsat::pvm_entropy_report(DensityMatrix::maximally_mixed(2), KrausChannel::computational_pvm(2));
  EXPECT_LE(r.i1, 1.0 + 1e-10);
  EXPECT_NEAR(r.i2, 0.0, 1e-12);
  EXPECT_NEAR(r.i3, 1.0, 1e-12);
  EXPECT_TRUE(r.all_hold());

  std::mt19937_64 rng(101);
  const auto rho = random_state(4, rng);
  EXPECT_TRUE(qcsat::pvm_entropy_report(rho, KrausChannel::computational_pvm(4)).all_hold());
  EXPECT_THROW(qcsat::pvm_entropy_report(rho, KrausChannel::identity(4)), qcsat::DomainError);
}

TEST(PvmReport, RandomPairs) {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 200; ++i) {
    const Eigen::Index d = 2 + i % 7;
    const auto rho = random_state(d, rng);
    const auto report = qcsat::pvm_entropy_report(rho, KrausChannel::pvm(qcsat::random_unitary(d, rng)));
    EXPECT_TRUE(report.all_hold()) << "i1=" << report.i1 << " i2=" << report.i2 << " i3-s=" << report.i3 - report.s_rho;
  }
}

}  // namespace
