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
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "qcsat/error.hpp"

namespace qcsat {

/// Logistic map g(x) = a x (1 - x) driven for `max_steps` steps; a crossing
/// is the first step whose value is strictly above `threshold`.
struct LogisticParams {
  double a = 3.71;
  int max_steps = 0;
  double threshold = 0.5;

  /// Default detection window J = {0, ..., 2n}.
  static LogisticParams for_variables(int n, double a = 3.71) { return {a, 2 * n, 0.5}; }

  void validate() const {
    if (!(a >= 0.0 && a <= 4.0)) throw DomainError("logistic parameter a must lie in [0, 4]");
    if (max_steps < 0) throw DomainError("max_steps must be non-negative");
  }
};

template <class Real>
struct BasicChaosTrajectory {
  std::vector<Real> xs;               // x_0 .. x_M
  std::optional<int> first_crossing;  // least m with x_m > threshold
};

using ChaosTrajectory = BasicChaosTrajectory<double>;
using MpReal = boost::multiprecision::mpfr_float;
using MpChaosTrajectory = BasicChaosTrajectory<MpReal>;

/// Iterates `step` from x0 and latches the first strict threshold crossing.
template <class Real, class Step>
BasicChaosTrajectory<Real> run_trajectory(Real x0, int max_steps, const Real& threshold, Step&& step) {
  BasicChaosTrajectory<Real> traj;
  traj.xs.reserve(static_cast<std::size_t>(max_steps) + 1);
  traj.xs.push_back(std::move(x0));
  if (traj.xs.back() > threshold) traj.first_crossing = 0;
  for (int m = 1; m <= max_steps; ++m) {
    traj.xs.push_back(step(traj.xs.back()));
    if (!traj.first_crossing && traj.xs.back() > threshold) traj.first_crossing = m;
  }
  return traj;
}

inline double logistic_step(double x, double a) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("logistic_step needs x in [0, 1]");
  if (!(a >= 0.0 && a <= 4.0)) throw DomainError("logistic parameter a must lie in [0, 4]");
  return a * x * (1.0 - x);
}

/// Diagonal qubit density diag(p0, p1) in the {|0>, |1>} basis.
struct QubitDensity {
  double p0 = 1.0;
  double p1 = 0.0;

  /// tr(rho sigma_3) with sigma_3 = diag(1, -1).
  double sigma3_expectation() const noexcept { return p0 - p1; }
};

/// rho = q^2 P_1 + (1 - q^2) P_0.
inline QubitDensity density_from_q(double q_squared) {
  if (!(q_squared >= 0.0 && q_squared <= 1.0)) throw DomainError("q^2 must lie in [0, 1]");
  return {1.0 - q_squared, q_squared};
}

/// rho_m = (I + x_m sigma_3) / 2, whose sigma_3 expectation is x_m.
inline QubitDensity amplified_density(double x_m) {
  if (!(x_m >= 0.0 && x_m <= 1.0)) throw DomainError("x_m must lie in [0, 1]");
  return {0.5 + 0.5 * x_m, 0.5 - 0.5 * x_m};
}

inline ChaosTrajectory iterate(double q_squared, const LogisticParams& params) {
  if (!(q_squared >= 0.0 && q_squared <= 1.0)) throw DomainError("q^2 must lie in [0, 1]");
  params.validate();
  const double a = params.a;
  return run_trajectory(q_squared, params.max_steps, params.threshold,
                        [a](double x) { return a * x * (1.0 - x); });
}

enum class Verdict { kSat, kUnsat };

inline const char* verdict_name(Verdict v) noexcept { return v == Verdict::kSat ? "SAT" : "UNSAT"; }

struct SatDecision {
  Verdict verdict = Verdict::kUnsat;
  ChaosTrajectory trajectory;
};

/// SAT iff the amplified trajectory crosses the threshold within max_steps.
/// q^2 = 0 is a fixed point, so UNSAT is never reported as SAT.
inline SatDecision decide_sat(double q_squared, const LogisticParams& params) {
  SatDecision d;
  d.trajectory = iterate(q_squared, params);
  d.verdict = d.trajectory.first_crossing ? Verdict::kSat : Verdict::kUnsat;
  return d;
}

/// Any crossing from x_0 = 2^-n needs m > (n - 1) / log2(a), because each
/// step multiplies x by at most a.
inline double growth_crossing_bound(int n, double a = 3.71) { return (n - 1) / std::log2(a); }

struct OracleParams {
  std::int64_t a_numerator = 371;
  std::int64_t a_denominator = 100;
  int max_steps = 0;
  int precision_bits = 0;  // 0: 64 + 2 * max_steps

  int effective_precision() const noexcept {
    return precision_bits > 0 ? precision_bits : 64 + 2 * max_steps;
  }
};

namespace detail {

class ScopedMpPrecision {
 public:
  explicit ScopedMpPrecision(int bits) : saved_(MpReal::default_precision()) {
    // digits10 large enough that MPFR allocates at least `bits` mantissa bits.
    MpReal::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 2);
  }
  ~ScopedMpPrecision() { MpReal::default_precision(saved_); }
  ScopedMpPrecision(const ScopedMpPrecision&) = delete;
  ScopedMpPrecision& operator=(const ScopedMpPrecision&) = delete;

 private:
  unsigned saved_;
};

}  // namespace detail

/// High-precision trajectory from the exact dyadic x_0 = r / 2^n with the
/// rational parameter a = a_numerator / a_denominator. Each step computes
/// (a_numerator * x (1 - x)) / a_denominator in MPFR arithmetic.
/// The working precision is process-global while the call runs.
inline MpChaosTrajectory iterate_oracle(std::uint64_t r, int n, const OracleParams& params) {
  if (params.max_steps < 0) throw DomainError("max_steps must be non-negative");
  if (n < 0 || n > 62 || r > (std::uint64_t{1} << n)) throw DomainError("oracle needs 0 <= r <= 2^n, n <= 62");
  if (params.a_denominator <= 0 || params.a_numerator < 0 || params.a_numerator > 4 * params.a_denominator)
    throw DomainError("oracle parameter a must lie in [0, 4]");
  const int bits = params.effective_precision();
  if (bits < 64 + 2 * params.max_steps) {
    throw DomainError("oracle precision " + std::to_string(bits) + " bits is below 64 + 2*max_steps = " +
                      std::to_string(64 + 2 * params.max_steps));
  }
  detail::ScopedMpPrecision guard(bits);
  MpReal x0 = MpReal(r);
  x0 = ldexp(x0, -n);
  const MpReal half = MpReal(1) / 2;
  const MpReal num = MpReal(params.a_numerator);
  const MpReal den = MpReal(params.a_denominator);
  return run_trajectory(std::move(x0), params.max_steps, half, [&](const MpReal& x) {
    MpReal y = num * x * (1 - x);
    return MpReal(y / den);
  });
}

inline ChaosTrajectory to_double(const MpChaosTrajectory& traj) {
  ChaosTrajectory out;
  out.first_crossing = traj.first_crossing;
  out.xs.reserve(traj.xs.size());
  for (const auto& x : traj.xs) out.xs.push_back(x.convert_to<double>());
  return out;
}

}  // namespace qcsat
