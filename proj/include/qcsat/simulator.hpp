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
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "qcsat/compiler.hpp"
#include "qcsat/detail/parallel.hpp"
#include "qcsat/error.hpp"
#include "qcsat/gates.hpp"
#include "qcsat/state_vector.hpp"

namespace qcsat {

struct SimulatorOptions {
  int width_cap = 26;    // 2^26 complex doubles = 1 GiB
  unsigned workers = 0;  // 0: hardware concurrency
};

/// |0...0> on `width` qubits, refused above the configured cap.
inline StateVector init_state(int width, const SimulatorOptions& options = {}) {
  if (width > options.width_cap) {
    throw CapacityError("register of " + std::to_string(width) + " qubits exceeds width cap " +
                        std::to_string(options.width_cap));
  }
  return StateVector::basis(width, 0);
}

inline StateVector init_state(const QubitLayout& layout, const SimulatorOptions& options = {}) {
  return init_state(layout.total, options);
}

namespace detail {

// Index of the k-th basis state whose bit `pos` is clear.
inline std::uint64_t insert_zero_bit(std::uint64_t k, int pos) noexcept {
  const std::uint64_t low = k & ((std::uint64_t{1} << pos) - 1);
  return ((k >> pos) << (pos + 1)) | low;
}

inline void apply_hadamard(StateVector& state, int wire, unsigned workers) {
  const int pos = state.width() - wire;
  const std::uint64_t mask = std::uint64_t{1} << pos;
  const double h = 1.0 / std::numbers::sqrt2;
  auto amps = state.amplitudes();
  parallel_for(state.size() / 2, workers, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t k = lo; k < hi; ++k) {
      const std::uint64_t i = insert_zero_bit(k, pos);
      const Amplitude a = amps[i];
      const Amplitude b = amps[i | mask];
      amps[i] = (a + b) * h;
      amps[i | mask] = (a - b) * h;
    }
  });
}

inline void apply_permutation(StateVector& state, const GateOp& op, unsigned workers) {
  const int width = state.width();
  const int pos = width - op.target();
  const std::uint64_t target = std::uint64_t{1} << pos;
  const auto cs = op.controls();
  // A control is satisfied when (index & mask) == want.
  std::uint64_t mask[2] = {0, 0}, want[2] = {0, 0};
  for (std::size_t i = 0; i < cs.size(); ++i) {
    mask[i] = std::uint64_t{1} << (width - cs[i]);
    want[i] = op.negate_controls[i] ? 0 : mask[i];
  }
  const GateKind kind = op.kind;
  auto amps = state.amplitudes();
  parallel_for(state.size() / 2, workers, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t k = lo; k < hi; ++k) {
      const std::uint64_t i = insert_zero_bit(k, pos);
      const bool c0 = (i & mask[0]) == want[0];
      const bool c1 = (i & mask[1]) == want[1];
      bool flip = false;
      switch (kind) {
        case GateKind::kNot: flip = true; break;
        case GateKind::kCn:
        case GateKind::kCopy: flip = c0; break;
        case GateKind::kCcn:
        case GateKind::kAnd: flip = c0 && c1; break;
        case GateKind::kOr: flip = c0 || c1; break;
        case GateKind::kHBlock: break;
      }
      if (flip) std::swap(amps[i], amps[i | target]);
    }
  });
}

}  // namespace detail

/// Applies one gate in place. Each amplitude pair is owned by one worker, so
/// the result does not depend on the worker count.
inline void apply_gate(StateVector& state, const GateOp& op, unsigned workers = 0) {
  validate_gate(op, state.width());
  if (op.kind == GateKind::kHBlock) {
    for (int w : op.wires) detail::apply_hadamard(state, w, workers);
  } else {
    detail::apply_permutation(state, op, workers);
  }
}

inline StateVector apply(StateVector state, const GateSequence& seq, const SimulatorOptions& options = {}) {
  if (seq.width() != state.width()) {
    throw DomainError("sequence width " + std::to_string(seq.width()) + " does not match state width " +
                      std::to_string(state.width()));
  }
  for (const auto& op : seq) apply_gate(state, op, options.workers);
  return state;
}

namespace detail {
inline void check_layout(const StateVector& state, const QubitLayout& layout) {
  if (state.width() != layout.total) throw DomainError("state width does not match layout");
}
}  // namespace detail

/// Probability of finding the result qubit in |1>, i.e. ||P_{n+mu,1} v||^2.
inline double success_probability(const StateVector& state, const QubitLayout& layout, unsigned workers = 0) {
  detail::check_layout(state, layout);
  const auto amps = state.amplitudes();
  // The result qubit is the least significant index bit.
  return detail::deterministic_sum(state.size() / 2, workers,
                                   [&](std::uint64_t k) { return std::norm(amps[2 * k + 1]); });
}

struct MeasurementOutcome {
  double probability = 0.0;
  std::optional<StateVector> post_state;
};

/// Projects onto result qubit = 1 and renormalizes; no post-state when the
/// projection vanishes.
inline MeasurementOutcome post_measure(const StateVector& state, const QubitLayout& layout, unsigned workers = 0) {
  MeasurementOutcome out;
  out.probability = success_probability(state, layout, workers);
  if (out.probability <= 0.0) return out;
  StateVector post(state.width());
  const double scale = 1.0 / std::sqrt(out.probability);
  for (std::uint64_t i = 1; i < state.size(); i += 2) post[i] = state[i] * scale;
  out.post_state = std::move(post);
  return out;
}

/// sqrt(successes / shots) from `shots` seeded Bernoulli draws.
inline double estimate_q(const StateVector& state, const QubitLayout& layout, std::uint64_t shots,
                         std::uint64_t seed, unsigned workers = 0) {
  if (shots == 0) throw DomainError("estimate_q needs at least one shot");
  const double p = success_probability(state, layout, workers);
  std::mt19937_64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < shots; ++s) {
    // 53-bit uniform in [0,1), independent of the standard library's distributions.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    hits += u < p ? 1 : 0;
  }
  return std::sqrt(static_cast<double>(hits) / static_cast<double>(shots));
}

}  // namespace qcsat
