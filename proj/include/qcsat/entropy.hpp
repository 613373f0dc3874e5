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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qcsat/error.hpp"
#include "qcsat/random_matrices.hpp"

namespace qcsat {

enum class LogBase { kTwo, kE };

inline double log_in(double x, LogBase base) noexcept {
  return base == LogBase::kTwo ? std::log2(x) : std::log(x);
}

namespace detail {

inline constexpr double kNegativeEigenTol = 1e-10;
// Eigenvalues at or below this are treated as outside the support.
inline constexpr double kSupportTol = 1e-12;

inline Eigen::VectorXd clamped_eigenvalues(const MatrixXc& m, const char* what) {
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(m, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues();
  for (auto& v : ev) {
    if (v < -kNegativeEigenTol) {
      throw InvariantError(std::string(what) + " has eigenvalue " + std::to_string(v) + " below -1e-10");
    }
    v = std::max(v, 0.0);
  }
  return ev;
}

// -sum p log p over the nonzero entries.
inline double shannon(const Eigen::VectorXd& p, LogBase base) {
  double s = 0.0;
  for (double v : p)
    if (v > 0.0) s -= v * log_in(v, base);
  return s;
}

}  // namespace detail

/// Positive semidefinite, unit-trace Hermitian matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(MatrixXc m, double tol = 1e-12) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) throw DomainError("density matrix must be square and nonempty");
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol) throw DomainError("density matrix is not Hermitian");
    if (std::abs(m_.trace() - 1.0) > tol) throw DomainError("density matrix trace differs from 1");
    m_ = 0.5 * (m_ + m_.adjoint());
    try {
      eig_ = detail::clamped_eigenvalues(m_, "density matrix");
    } catch (const InvariantError& e) {
      throw DomainError(e.what());
    }
  }

  static DensityMatrix maximally_mixed(Eigen::Index d) {
    return DensityMatrix(MatrixXc::Identity(d, d) / static_cast<double>(d));
  }
  static DensityMatrix pure(const Eigen::VectorXcd& psi) {
    const Eigen::VectorXcd v = psi / psi.norm();
    return DensityMatrix(v * v.adjoint());
  }
  static DensityMatrix diagonal(const std::vector<double>& probs) {
    Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(probs.data(), static_cast<Eigen::Index>(probs.size()));
    return DensityMatrix(p.cast<std::complex<double>>().asDiagonal().toDenseMatrix());
  }

  Eigen::Index dim() const noexcept { return m_.rows(); }
  const MatrixXc& matrix() const noexcept { return m_; }
  /// Ascending eigenvalues, clamped at 0.
  const Eigen::VectorXd& eigenvalues() const noexcept { return eig_; }

 private:
  MatrixXc m_;
  Eigen::VectorXd eig_;
};

enum class ChannelCheck { kTracePreserving, kTraceNonIncreasing };

/// rho -> sum_j A_j rho A_j^+ .
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<MatrixXc> ops, ChannelCheck check = ChannelCheck::kTracePreserving)
      : ops_(std::move(ops)) {
    if (ops_.empty()) throw DomainError("channel needs at least one Kraus operator");
    const auto rows = ops_.front().rows(), cols = ops_.front().cols();
    if (rows == 0 || cols == 0) throw DomainError("Kraus operators must be nonempty");
    MatrixXc sum = MatrixXc::Zero(cols, cols);
    for (const auto& a : ops_) {
      if (a.rows() != rows || a.cols() != cols) throw DomainError("Kraus operators differ in shape");
      sum += a.adjoint() * a;
    }
    const MatrixXc id = MatrixXc::Identity(cols, cols);
    if (check == ChannelCheck::kTracePreserving) {
      if ((sum - id).cwiseAbs().maxCoeff() > 1e-10) throw DomainError("Kraus operators are not trace preserving");
      trace_preserving_ = true;
    } else {
      Eigen::SelfAdjointEigenSolver<MatrixXc> es(0.5 * (sum + sum.adjoint()), Eigen::EigenvaluesOnly);
      if (es.eigenvalues().maxCoeff() > 1.0 + 1e-10) throw DomainError("Kraus operators increase trace");
      trace_preserving_ = (sum - id).cwiseAbs().maxCoeff() <= 1e-10;
    }
  }

  static KrausChannel identity(Eigen::Index d) { return KrausChannel({MatrixXc::Identity(d, d)}); }
  static KrausChannel unitary(const MatrixXc& u) { return KrausChannel({u}); }

  /// rho -> I/d, with Kraus operators |i><j| / sqrt(d).
  static KrausChannel completely_depolarizing(Eigen::Index d) {
    std::vector<MatrixXc> ops;
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        MatrixXc a = MatrixXc::Zero(d, d);
        a(i, j) = s;
        ops.push_back(std::move(a));
      }
    return KrausChannel(std::move(ops));
  }

  /// Rank-1 projection-valued measure on the orthonormal columns of `basis`.
  static KrausChannel pvm(const MatrixXc& basis) {
    std::vector<MatrixXc> ops;
    for (Eigen::Index j = 0; j < basis.cols(); ++j) ops.push_back(basis.col(j) * basis.col(j).adjoint());
    return KrausChannel(std::move(ops));
  }
  static KrausChannel computational_pvm(Eigen::Index d) { return pvm(MatrixXc::Identity(d, d)); }

  const std::vector<MatrixXc>& operators() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  Eigen::Index input_dim() const noexcept { return ops_.front().cols(); }
  Eigen::Index output_dim() const noexcept { return ops_.front().rows(); }
  bool trace_preserving() const noexcept { return trace_preserving_; }

  MatrixXc apply_raw(const MatrixXc& rho) const {
    if (rho.rows() != input_dim() || rho.cols() != input_dim()) throw DomainError("channel input dimension mismatch");
    MatrixXc out = MatrixXc::Zero(output_dim(), output_dim());
    for (const auto& a : ops_) out += a * rho * a.adjoint();
    return 0.5 * (out + out.adjoint());
  }

  DensityMatrix apply(const DensityMatrix& rho) const {
    if (!trace_preserving_) throw DomainError("output of a trace-decreasing channel is not a state");
    return DensityMatrix(apply_raw(rho.matrix()), 1e-9);
  }

  /// Every operator is a rank-1 orthogonal projection, they are mutually
  /// orthogonal and sum to the identity.
  bool is_rank1_pvm(double tol = 1e-10) const {
    const auto d = input_dim();
    if (output_dim() != d || static_cast<Eigen::Index>(ops_.size()) != d) return false;
    MatrixXc sum = MatrixXc::Zero(d, d);
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      const auto& p = ops_[i];
      if ((p - p.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
      if ((p * p - p).cwiseAbs().maxCoeff() > tol) return false;
      if (std::abs(p.trace() - 1.0) > tol) return false;
      for (std::size_t j = 0; j < i; ++j)
        if ((p * ops_[j]).cwiseAbs().maxCoeff() > tol) return false;
      sum += p;
    }
    return (sum - MatrixXc::Identity(d, d)).cwiseAbs().maxCoeff() <= tol;
  }

 private:
  std::vector<MatrixXc> ops_;
  bool trace_preserving_ = false;
};

/// Priors lambda_n with signal states sigma_n.
struct Ensemble {
  std::vector<double> priors;
  std::vector<DensityMatrix> states;

  void validate() const {
    if (priors.empty() || priors.size() != states.size()) throw DomainError("ensemble priors and states differ in count");
    double total = 0.0;
    for (double p : priors) {
      if (p < 0.0) throw DomainError("ensemble prior is negative");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) throw DomainError("ensemble priors do not sum to 1");
    for (const auto& s : states)
      if (s.dim() != states.front().dim()) throw DomainError("ensemble states differ in dimension");
  }

  /// sigma = sum_n lambda_n sigma_n.
  DensityMatrix mixture() const {
    validate();
    MatrixXc m = MatrixXc::Zero(states.front().dim(), states.front().dim());
    for (std::size_t i = 0; i < priors.size(); ++i) m += priors[i] * states[i].matrix();
    return DensityMatrix(m, 1e-10);
  }
};

/// S(rho) = -tr rho log rho.
inline double vn_entropy(const DensityMatrix& rho, LogBase base = LogBase::kTwo) {
  return detail::shannon(rho.eigenvalues(), base);
}

/// Umegaki relative entropy S(sigma, rho) = tr sigma (log sigma - log rho),
/// +infinity when supp(sigma) is not contained in supp(rho).
inline double relative_entropy(const DensityMatrix& sigma, const DensityMatrix& rho, LogBase base = LogBase::kTwo) {
  if (sigma.dim() != rho.dim()) throw DomainError("relative entropy dimension mismatch");
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(rho.matrix());
  const auto& vecs = es.eigenvectors();
  double cross = 0.0;  // tr sigma log rho
  for (Eigen::Index j = 0; j < rho.dim(); ++j) {
    const double mu = es.eigenvalues()(j);
    const double overlap = (vecs.col(j).adjoint() * sigma.matrix() * vecs.col(j))(0, 0).real();
    if (mu <= detail::kSupportTol) {
      if (overlap > detail::kNegativeEigenTol) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += overlap * log_in(mu, base);
  }
  const double value = -vn_entropy(sigma, base) - cross;
  return std::max(value, 0.0);
}

/// sum_n w_n S(Lambda sigma_n, Lambda sum_m w_m sigma_m), skipping w_n = 0.
inline double weighted_output_divergence(const std::vector<double>& weights, const std::vector<MatrixXc>& states,
                                         const KrausChannel& channel, LogBase base = LogBase::kTwo) {
  if (weights.size() != states.size() || states.empty()) throw DomainError("weights and states differ in count");
  MatrixXc mix = MatrixXc::Zero(states.front().rows(), states.front().cols());
  for (std::size_t i = 0; i < states.size(); ++i) mix += weights[i] * states[i];
  const DensityMatrix out = channel.apply(DensityMatrix(mix, 1e-9));
  double total = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    total += weights[i] * relative_entropy(channel.apply(DensityMatrix(states[i], 1e-9)), out, base);
  }
  return total;
}

struct OhyaOptions {
  int degenerate_search_budget = 0;
  std::uint64_t seed = 0;
  LogBase base = LogBase::kTwo;
};

namespace detail {

// Descending eigenvalues with eigenvectors fixed up to phase: the first
// component of largest modulus is made real and positive.
inline std::pair<Eigen::VectorXd, MatrixXc> canonical_eigensystem(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(rho.matrix());
  const Eigen::Index d = rho.dim();
  Eigen::VectorXd vals(d);
  MatrixXc vecs(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    vals(j) = std::max(es.eigenvalues()(d - 1 - j), 0.0);
    Eigen::VectorXcd v = es.eigenvectors().col(d - 1 - j);
    Eigen::Index pivot = 0;
    for (Eigen::Index i = 1; i < d; ++i)
      if (std::abs(v(i)) > std::abs(v(pivot)) + 1e-12) pivot = i;
    v *= std::conj(v(pivot)) / std::abs(v(pivot));
    vecs.col(j) = v;
  }
  return {vals, vecs};
}

inline double decomposition_value(const Eigen::VectorXd& vals, const MatrixXc& vecs, const KrausChannel& channel,
                                  LogBase base) {
  std::vector<double> w;
  std::vector<MatrixXc> states;
  for (Eigen::Index j = 0; j < vals.size(); ++j) {
    w.push_back(vals(j));
    states.push_back(vecs.col(j) * vecs.col(j).adjoint());
  }
  return weighted_output_divergence(w, states, channel, base);
}

}  // namespace detail

/// Mutual entropy I1(rho; Lambda) = sum_n lambda_n S(Lambda E_n, Lambda rho)
/// over the orthogonal (spectral) decomposition rho = sum_n lambda_n E_n.
/// With a positive budget, random rotations inside each degenerate
/// eigenspace are also tried and the largest value is returned.
inline double ohya_mutual(const DensityMatrix& rho, const KrausChannel& channel, const OhyaOptions& options = {}) {
  if (rho.dim() != channel.input_dim()) throw DomainError("state and channel dimension mismatch");
  auto [vals, vecs] = detail::canonical_eigensystem(rho);
  double best = detail::decomposition_value(vals, vecs, channel, options.base);
  if (options.degenerate_search_budget <= 0) return best;

  // Blocks [begin, end) of equal positive eigenvalues.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> blocks;
  for (Eigen::Index i = 0; i < vals.size();) {
    Eigen::Index j = i + 1;
    while (j < vals.size() && std::abs(vals(j) - vals(i)) < 1e-10) ++j;
    if (j - i > 1 && vals(i) > detail::kSupportTol) blocks.emplace_back(i, j);
    i = j;
  }
  if (blocks.empty()) return best;
  std::mt19937_64 rng(options.seed);
  for (int trial = 0; trial < options.degenerate_search_budget; ++trial) {
    MatrixXc rotated = vecs;
    for (auto [b, e] : blocks) {
      const MatrixXc u = random_unitary(e - b, rng);
      rotated.middleCols(b, e - b) = vecs.middleCols(b, e - b) * u;
    }
    best = std::max(best, detail::decomposition_value(vals, rotated, channel, options.base));
  }
  return best;
}

/// Holevo quantity S(Lambda sigma) - sum_n lambda_n S(Lambda sigma_n).
inline double holevo_mutual(const Ensemble& ensemble, const KrausChannel& channel, LogBase base = LogBase::kTwo) {
  ensemble.validate();
  if (ensemble.states.front().dim() != channel.input_dim()) throw DomainError("ensemble and channel dimension mismatch");
  double value = vn_entropy(channel.apply(ensemble.mixture()), base);
  for (std::size_t i = 0; i < ensemble.priors.size(); ++i)
    value -= ensemble.priors[i] * vn_entropy(channel.apply(ensemble.states[i]), base);
  return value;
}

/// W_ij = tr(A_i rho A_j^+) / tr(Lambda rho), checked to be a state.
inline MatrixXc exchange_matrix(const DensityMatrix& rho, const KrausChannel& channel) {
  if (rho.dim() != channel.input_dim()) throw DomainError("state and channel dimension mismatch");
  const auto& ops = channel.operators();
  const auto k = static_cast<Eigen::Index>(ops.size());
  const double norm = channel.apply_raw(rho.matrix()).trace().real();
  if (!(norm > 0.0)) throw InvariantError("channel output has zero trace");
  MatrixXc w(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const MatrixXc left = ops[i] * rho.matrix();
    for (Eigen::Index j = 0; j < k; ++j) w(i, j) = (left * ops[j].adjoint()).trace() / norm;
  }
  if ((w - w.adjoint()).cwiseAbs().maxCoeff() > 1e-10) throw InvariantError("exchange matrix is not Hermitian");
  if (std::abs(w.trace() - 1.0) > 1e-10) throw InvariantError("exchange matrix trace differs from 1");
  detail::clamped_eigenvalues(0.5 * (w + w.adjoint()), "exchange matrix");
  return 0.5 * (w + w.adjoint());
}

/// S_e(rho, Lambda) = -tr W log W.
inline double entropy_exchange(const DensityMatrix& rho, const KrausChannel& channel, LogBase base = LogBase::kTwo) {
  return detail::shannon(detail::clamped_eigenvalues(exchange_matrix(rho, channel), "exchange matrix"), base);
}

struct CoherentInformations {
  double i2 = 0.0;  // S(Lambda rho) - S_e
  double i3 = 0.0;  // S(rho) + S(Lambda rho) - S_e
};

inline CoherentInformations coherent_informations(const DensityMatrix& rho, const KrausChannel& channel,
                                                  LogBase base = LogBase::kTwo) {
  const double s_out = vn_entropy(channel.apply(rho), base);
  const double s_e = entropy_exchange(rho, channel, base);
  const double i2 = s_out - s_e;
  return {i2, vn_entropy(rho, base) + i2};
}

/// Comparison of I1, I2 and I3 for a rank-1 PVM channel:
/// I1 <= min{S(rho), S(Lambda rho)}, I2 = 0 and I3 = S(rho).
struct PvmEntropyReport {
  double i1 = 0.0, i2 = 0.0, i3 = 0.0;
  double s_rho = 0.0, s_out = 0.0, s_e = 0.0;
  bool i1_bounded = false;
  bool i2_zero = false;
  bool i3_equals_s = false;

  bool all_hold() const noexcept { return i1_bounded && i2_zero && i3_equals_s; }
};

inline PvmEntropyReport pvm_entropy_report(const DensityMatrix& rho, const KrausChannel& channel,
                                      LogBase base = LogBase::kTwo, double tol = 1e-10) {
  if (!channel.is_rank1_pvm()) throw DomainError("channel is not a rank-1 projection-valued measure");
  PvmEntropyReport r;
  r.s_rho = vn_entropy(rho, base);
  r.s_out = vn_entropy(channel.apply(rho), base);
  r.s_e = entropy_exchange(rho, channel, base);
  r.i1 = ohya_mutual(rho, channel, {0, 0, base});
  r.i2 = r.s_out - r.s_e;
  r.i3 = r.s_rho + r.s_out - r.s_e;
  r.i1_bounded = r.i1 <= std::min(r.s_rho, r.s_out) + tol;
  r.i2_zero = std::abs(r.i2) < tol;
  r.i3_equals_s = std::abs(r.i3 - r.s_rho) < tol;
  return r;
}

}  // namespace qcsat
