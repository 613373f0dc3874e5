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
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcsat/error.hpp"

namespace qcsat {

using Matrix2c = Eigen::Matrix2cd;
using Complex = std::complex<double>;

namespace detail {

// Smallest eigenvalue of a 2x2 Hermitian matrix.
inline double min_eigenvalue_2x2(const Matrix2c& m) {
  const double a = m(0, 0).real(), d = m(1, 1).real();
  const double gap = std::hypot(a - d, 2.0 * std::abs(m(0, 1)));
  return 0.5 * (a + d - gap);
}

}  // namespace detail

/// Density matrix of a two-level system in the {e0, e1} basis. The
/// coherence is c = <e0|rho|e1>.
class TwoLevelState {
 public:
  explicit TwoLevelState(const Matrix2c& rho) : rho_(rho) {
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) throw DomainError("state is not Hermitian");
    if (std::abs(rho_.trace() - 1.0) > 1e-10) throw DomainError("state trace differs from 1");
    if (detail::min_eigenvalue_2x2(rho_) < -1e-10) throw DomainError("state has a negative eigenvalue");
  }

  /// |psi><psi| for psi = alpha0 e0 + alpha1 e1 (must be normalized).
  static TwoLevelState pure(Complex alpha0, Complex alpha1) {
    if (std::abs(std::norm(alpha0) + std::norm(alpha1) - 1.0) > 1e-12)
      throw DomainError("amplitudes must be normalized");
    Eigen::Vector2cd psi(alpha0, alpha1);
    return TwoLevelState(psi * psi.adjoint());
  }
  static TwoLevelState ground() { return pure(1.0, 0.0); }
  static TwoLevelState excited() { return pure(0.0, 1.0); }
  static TwoLevelState plus() { return pure(std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2); }

  const Matrix2c& matrix() const noexcept { return rho_; }
  double p0() const noexcept { return rho_(0, 0).real(); }
  double p1() const noexcept { return rho_(1, 1).real(); }
  Complex coherence() const noexcept { return rho_(0, 1); }

 private:
  Matrix2c rho_;
};

/// Damping rate gamma_- of the jump D = |e0><e1|; needs Re gamma_- > 0.
struct DissipativeParams {
  Complex gamma{1.0, 0.0};

  void validate() const {
    if (!(gamma.real() > 0.0)) throw DomainError("dissipative dynamics needs Re gamma > 0");
  }
};

/// Integer levels of H = (E0 + 1)|e0><e0| + E1|e1><e1|, E0 < E1.
struct HamiltonianParams {
  int e0 = 0;
  int e1 = 2;

  void validate() const {
    if (e0 >= e1) throw DomainError("Hamiltonian levels need E0 < E1");
  }
  /// Delta = (E0 + 1) - E1; the coherence rotates as exp(-i Delta t).
  int detuning() const noexcept { return e0 + 1 - e1; }
  std::optional<double> period() const {
    const int d = detuning();
    if (d == 0) return std::nullopt;
    return 2.0 * std::numbers::pi / std::abs(d);
  }
};

struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<double> p1;
  std::vector<double> abs_c;
  std::vector<Complex> coherence;
  Matrix2c final_state = Matrix2c::Zero();
  bool stationary = false;  // Hamiltonian case with Delta = 0

  std::size_t size() const noexcept { return times.size(); }

  void push(double t, const Matrix2c& rho) {
    times.push_back(t);
    p1.push_back(rho(1, 1).real());
    coherence.push_back(rho(0, 1));
    abs_c.push_back(std::abs(rho(0, 1)));
  }
};

/// d rho / dt = i Im(g) [rho, D^+D] - Re(g) {D^+D, rho} + 2 Re(g) D rho D^+,
/// with D^+D = |e1><e1|. The sandwich weight 2 Re(g) makes the flow trace
/// preserving and keeps |e0><e0| invariant.
inline Matrix2c generator_apply(const Matrix2c& rho, const DissipativeParams& params) {
  params.validate();
  const double re = params.gamma.real(), im = params.gamma.imag();
  Matrix2c n = Matrix2c::Zero();  // D^+ D
  n(1, 1) = 1.0;
  Matrix2c sandwich = Matrix2c::Zero();  // D rho D^+
  sandwich(0, 0) = rho(1, 1);
  const Complex i{0.0, 1.0};
  return i * im * (rho * n - n * rho) - re * (n * rho + rho * n) + 2.0 * re * sandwich;
}

inline Matrix2c generator_apply(const TwoLevelState& rho, const DissipativeParams& params) {
  return generator_apply(rho.matrix(), params);
}

namespace detail {

inline void check_time_grid(double t_final, double dt) {
  if (!(dt > 0.0)) throw DomainError("dt must be positive");
  if (!(t_final > 0.0)) throw DomainError("t_final must be positive");
}

inline std::size_t step_count(double t_final, double dt) {
  return static_cast<std::size_t>(std::ceil(t_final / dt - 1e-9));
}

inline void check_invariants(const Matrix2c& rho, double t) {
  const double drift = std::abs(rho.trace() - 1.0);
  if (drift > 1e-9) {
    throw InvariantError("trace drift " + std::to_string(drift) + " at t=" + std::to_string(t));
  }
  const double lo = min_eigenvalue_2x2(rho);
  if (lo < -1e-8) {
    throw InvariantError("negative eigenvalue " + std::to_string(lo) + " at t=" + std::to_string(t));
  }
}

}  // namespace detail

/// Classical RK4 with fixed step dt (the last step is shortened to land on
/// t_final). Aborts with InvariantError when trace or positivity drift.
inline TrajectoryRecord evolve_dissipative(const TwoLevelState& rho0, const DissipativeParams& params,
                                           double t_final, double dt) {
  params.validate();
  detail::check_time_grid(t_final, dt);
  const std::size_t steps = detail::step_count(t_final, dt);
  TrajectoryRecord rec;
  rec.times.reserve(steps + 1);
  Matrix2c rho = rho0.matrix();
  rec.push(0.0, rho);
  auto f = [&](const Matrix2c& r) { return generator_apply(r, params); };
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t_prev = static_cast<double>(k - 1) * dt;
    const double t = k == steps ? t_final : static_cast<double>(k) * dt;
    const double h = t - t_prev;
    const Matrix2c k1 = f(rho);
    const Matrix2c k2 = f(rho + 0.5 * h * k1);
    const Matrix2c k3 = f(rho + 0.5 * h * k2);
    const Matrix2c k4 = f(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    detail::check_invariants(rho, t);
    rec.push(t, rho);
  }
  rec.final_state = rho;
  return rec;
}

/// rho(t) = exp(-iHt) rho0 exp(iHt) for the diagonal Hamiltonian; only the
/// coherence moves, as c(t) = c(0) exp(-i Delta t).
inline Matrix2c hamiltonian_state(const TwoLevelState& rho0, const HamiltonianParams& params, double t) {
  params.validate();
  Matrix2c rho = rho0.matrix();
  const Complex phase = std::polar(1.0, -static_cast<double>(params.detuning()) * t);
  rho(0, 1) *= phase;
  rho(1, 0) = std::conj(rho(0, 1));
  return rho;
}

inline TrajectoryRecord evolve_hamiltonian(const TwoLevelState& rho0, const HamiltonianParams& params,
                                           double t_final, double dt) {
  params.validate();
  detail::check_time_grid(t_final, dt);
  const std::size_t steps = detail::step_count(t_final, dt);
  TrajectoryRecord rec;
  rec.times.reserve(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = k == steps ? t_final : static_cast<double>(k) * dt;
    rec.push(t, hamiltonian_state(rho0, params, t));
  }
  rec.final_state = hamiltonian_state(rho0, params, t_final);
  rec.stationary = params.detuning() == 0;
  return rec;
}

enum class Dynamics { kDamped, kOscillatory, kStationary };

inline const char* dynamics_name(Dynamics d) noexcept {
  switch (d) {
    case Dynamics::kDamped: return "DAMPED";
    case Dynamics::kOscillatory: return "OSCILLATORY";
    case Dynamics::kStationary: return "STATIONARY";
  }
  return "?";
}

/// DAMPED: p1 + |c| stays below decay_floor times its initial value over the
/// last half of the record. OSCILLATORY: Re c reaches its maximum, drops by
/// at least half its range, then comes back within 1e-6 of the maximum.
/// STATIONARY otherwise.
inline Dynamics classify(const TrajectoryRecord& record, double decay_floor = 0.01) {
  if (record.size() == 0) throw DomainError("cannot classify an empty trajectory");
  constexpr double kRecurrenceTol = 1e-6;

  const double initial = record.p1.front() + record.abs_c.front();
  if (initial > 0.0) {
    const double t_half = 0.5 * record.times.back();
    double sup = 0.0;
    for (std::size_t i = 0; i < record.size(); ++i)
      if (record.times[i] >= t_half) sup = std::max(sup, record.p1[i] + record.abs_c[i]);
    if (sup < decay_floor * initial) return Dynamics::kDamped;
  }

  double hi = -1.0, lo = 1.0;
  for (const auto& c : record.coherence) {
    hi = std::max(hi, c.real());
    lo = std::min(lo, c.real());
  }
  if (hi - lo > 10.0 * kRecurrenceTol) {
    const double far = hi - 0.5 * (hi - lo);
    int phase = 0;  // 0: seek peak, 1: seek departure, 2: seek return
    for (const auto& c : record.coherence) {
      const double s = c.real();
      if (phase == 0 && s >= hi - kRecurrenceTol) phase = 1;
      else if (phase == 1 && s < far) phase = 2;
      else if (phase == 2 && s >= hi - kRecurrenceTol) return Dynamics::kOscillatory;
    }
  }
  return Dynamics::kStationary;
}

enum class Discrimination { kQNonzero, kQZero, kInconclusive };

inline const char* discrimination_name(Discrimination d) noexcept {
  switch (d) {
    case Discrimination::kQNonzero: return "q_nonzero";
    case Discrimination::kQZero: return "q_zero";
    case Discrimination::kInconclusive: return "inconclusive";
  }
  return "?";
}

struct DiscriminatorOptions {
  DissipativeParams dissipative;
  HamiltonianParams hamiltonian;
  std::optional<double> t_final;  // default: 10/Re(gamma) or max(10, two periods)
  double dt = 1e-3;
  double decay_floor = 0.01;
};

struct DiscriminationResult {
  Discrimination decision = Discrimination::kInconclusive;
  Dynamics classification = Dynamics::kStationary;
  int dynamics_case = 0;  // 1: dissipative, 2: Hamiltonian
  double t_final = 0.0;
  TrajectoryRecord record;
};

/// Builds psi = sqrt(1 - q^2) e0 + q e1. Both amplitudes nonzero selects the
/// dissipative generator started from |psi><psi|; q = 0 selects the shifted
/// Hamiltonian probed with the coherent state |+><+|. q = 1 has alpha0 = 0,
/// which neither case covers.
inline DiscriminationResult discriminate(double q, const DiscriminatorOptions& options = {}) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("q must lie in [0, 1]");
  if (q == 1.0) throw DomainError("unsupported input q = 1: alpha0 = 0 is outside both dynamical cases");
  DiscriminationResult out;
  if (q > 0.0) {
    options.dissipative.validate();
    out.dynamics_case = 1;
    out.t_final = options.t_final.value_or(10.0 / options.dissipative.gamma.real());
    const auto psi = TwoLevelState::pure(std::sqrt(1.0 - q * q), q);
    out.record = evolve_dissipative(psi, options.dissipative, out.t_final, options.dt);
  } else {
    options.hamiltonian.validate();
    out.dynamics_case = 2;
    const auto period = options.hamiltonian.period();
    out.t_final = options.t_final.value_or(period ? std::max(10.0, 2.0 * *period) : 10.0);
    out.record = evolve_hamiltonian(TwoLevelState::plus(), options.hamiltonian, out.t_final, options.dt);
  }
  out.classification = classify(out.record, options.decay_floor);
  if (out.classification == Dynamics::kDamped) out.decision = Discrimination::kQNonzero;
  else if (out.classification == Dynamics::kOscillatory) out.decision = Discrimination::kQZero;
  return out;
}

}  // namespace qcsat
