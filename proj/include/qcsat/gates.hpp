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
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcsat/error.hpp"
#include "qcsat/state_vector.hpp"

namespace qcsat {

enum class GateKind : std::uint8_t { kNot, kCn, kCcn, kAnd, kOr, kCopy, kHBlock };

inline constexpr std::array<GateKind, 7> kAllGateKinds = {
    GateKind::kNot, GateKind::kCn,   GateKind::kCcn,   GateKind::kAnd,
    GateKind::kOr,  GateKind::kCopy, GateKind::kHBlock};

constexpr std::string_view gate_name(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::kNot: return "NOT";
    case GateKind::kCn: return "CN";
    case GateKind::kCcn: return "CCN";
    case GateKind::kAnd: return "AND";
    case GateKind::kOr: return "OR";
    case GateKind::kCopy: return "COPY";
    case GateKind::kHBlock: return "H_BLOCK";
  }
  return "?";
}

inline std::optional<GateKind> gate_kind_from_name(std::string_view name) noexcept {
  for (auto k : kAllGateKinds)
    if (gate_name(k) == name) return k;
  return std::nullopt;
}

/// Number of control wires; controls come first in `GateOp::wires`.
constexpr int control_count(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::kCn:
    case GateKind::kCopy: return 1;
    case GateKind::kCcn:
    case GateKind::kAnd:
    case GateKind::kOr: return 2;
    default: return 0;
  }
}

/// Symbolic gate: kind plus 1-based wires. For controlled and logical gates
/// the last wire is the target. A set `negate_controls[i]` means the gate
/// sees the complement of control i, i.e. the gate conjugated by NOT on it.
struct GateOp {
  GateKind kind = GateKind::kNot;
  std::vector<int> wires;
  std::vector<bool> negate_controls;

  static GateOp not_gate(int u) { return {GateKind::kNot, {u}, {}}; }
  static GateOp cn(int u, int v, bool neg_u = false) { return {GateKind::kCn, {u, v}, {neg_u}}; }
  static GateOp ccn(int u, int v, int w, bool neg_u = false, bool neg_v = false) {
    return {GateKind::kCcn, {u, v, w}, {neg_u, neg_v}};
  }
  static GateOp and_gate(int u, int v, int w, bool neg_u = false, bool neg_v = false) {
    return {GateKind::kAnd, {u, v, w}, {neg_u, neg_v}};
  }
  static GateOp or_gate(int u, int v, int w, bool neg_u = false, bool neg_v = false) {
    return {GateKind::kOr, {u, v, w}, {neg_u, neg_v}};
  }
  static GateOp copy(int u, int v, bool neg_u = false) { return {GateKind::kCopy, {u, v}, {neg_u}}; }
  static GateOp h_block(int k) {
    GateOp op{GateKind::kHBlock, {}, {}};
    for (int w = 1; w <= k; ++w) op.wires.push_back(w);
    return op;
  }

  bool is_permutation() const noexcept { return kind != GateKind::kHBlock; }
  bool has_negated_control() const noexcept {
    return std::find(negate_controls.begin(), negate_controls.end(), true) != negate_controls.end();
  }
  int target() const { return wires.back(); }
  std::span<const int> controls() const {
    return std::span<const int>(wires).first(static_cast<std::size_t>(control_count(kind)));
  }

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

/// Throws DomainError unless `op` is well formed for an N-qubit register.
inline void validate_gate(const GateOp& op, int width) {
  const auto name = std::string(gate_name(op.kind));
  const std::size_t controls = static_cast<std::size_t>(control_count(op.kind));
  if (op.kind == GateKind::kHBlock) {
    if (op.wires.empty()) throw DomainError("H_BLOCK needs at least one wire");
  } else if (op.wires.size() != controls + 1) {
    throw DomainError(name + " expects " + std::to_string(controls + 1) + " wires");
  }
  if (op.negate_controls.size() != controls)
    throw DomainError(name + " expects " + std::to_string(controls) + " negation flags");
  for (std::size_t i = 0; i < op.wires.size(); ++i) {
    if (op.wires[i] < 1 || op.wires[i] > width) {
      throw DomainError(name + " wire " + std::to_string(op.wires[i]) + " outside width " +
                        std::to_string(width));
    }
    for (std::size_t j = 0; j < i; ++j)
      if (op.wires[i] == op.wires[j]) throw DomainError(name + " wires must be distinct");
  }
}

namespace detail {

// Whether a permutation gate flips its target, given the (already negated)
// control bit values.
inline bool flips_target(GateKind kind, std::span<const bool> controls) noexcept {
  switch (kind) {
    case GateKind::kNot: return true;
    case GateKind::kOr: return controls[0] || controls[1];
    case GateKind::kCn:
    case GateKind::kCopy: return controls[0];
    case GateKind::kCcn:
    case GateKind::kAnd: return controls[0] && controls[1];
    case GateKind::kHBlock: return false;
  }
  return false;
}

}  // namespace detail

/// Basis action of a permutation gate on an N-bit input (bits[0] is wire 1).
/// The target bit t becomes t XOR f(controls), which reproduces the truth
/// tables |e1,e2,0> -> |e1,e2,f> and |e1,e2,1> -> |e1,e2,1-f>.
inline std::vector<std::uint8_t> gate_semantics(const GateOp& op, std::span<const std::uint8_t> bits) {
  validate_gate(op, static_cast<int>(bits.size()));
  if (!op.is_permutation()) throw DomainError("H_BLOCK has no basis-permutation semantics");
  std::vector<std::uint8_t> out(bits.begin(), bits.end());
  std::array<bool, 2> ctrl{};
  const auto cs = op.controls();
  for (std::size_t i = 0; i < cs.size(); ++i) ctrl[i] = (bits[cs[i] - 1] != 0) != op.negate_controls[i];
  if (detail::flips_target(op.kind, std::span<const bool>(ctrl.data(), cs.size())))
    out[op.target() - 1] ^= 1u;
  return out;
}

/// Same as gate_semantics on a packed basis index (wire 1 = MSB).
inline std::uint64_t gate_semantics_index(const GateOp& op, std::uint64_t index, int width) {
  std::array<bool, 2> ctrl{};
  const auto cs = op.controls();
  for (std::size_t i = 0; i < cs.size(); ++i)
    ctrl[i] = (((index >> (width - cs[i])) & 1u) != 0) != op.negate_controls[i];
  if (detail::flips_target(op.kind, std::span<const bool>(ctrl.data(), cs.size())))
    index ^= std::uint64_t{1} << (width - op.target());
  return index;
}

/// True iff the gate acts unitarily: for permutation gates the truth table on
/// the touched wires is a bijection; for H_BLOCK the 2x2 Hadamard is unitary.
inline bool gate_unitary_check(const GateOp& op) {
  const int k = static_cast<int>(op.wires.size());
  if (op.kind == GateKind::kHBlock) {
    const double h = 1.0 / std::numbers::sqrt2;
    const double m[2][2] = {{h, h}, {h, -h}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const double dot = m[i][0] * m[j][0] + m[i][1] * m[j][1];
        if (std::abs(dot - (i == j ? 1.0 : 0.0)) > 1e-15) return false;
      }
    return k >= 1;
  }
  GateOp local = op;
  for (int i = 0; i < k; ++i) local.wires[i] = i + 1;
  std::vector<bool> hit(std::size_t{1} << k, false);
  for (std::uint64_t in = 0; in < hit.size(); ++in) {
    const std::uint64_t out = gate_semantics_index(local, in, k);
    if (hit[out]) return false;
    hit[out] = true;
  }
  return true;
}

/// Ordered gate list over a register of `width` qubits, applied first to last.
class GateSequence {
 public:
  explicit GateSequence(int width) : width_(width) {
    if (width < 1) throw DomainError("sequence width must be positive");
  }

  void append(GateOp op) {
    validate_gate(op, width_);
    ops_.push_back(std::move(op));
  }

  void append(const GateSequence& other) {
    for (const auto& op : other.ops()) append(op);
  }

  int width() const noexcept { return width_; }
  const std::vector<GateOp>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  auto begin() const noexcept { return ops_.begin(); }
  auto end() const noexcept { return ops_.end(); }

  friend bool operator==(const GateSequence&, const GateSequence&) = default;

 private:
  int width_;
  std::vector<GateOp> ops_;
};

/// Rewrites negated controls as explicit NOT pairs around the gate.
inline GateSequence expand_negations(const GateSequence& seq) {
  GateSequence out(seq.width());
  for (const auto& op : seq) {
    if (!op.has_negated_control()) {
      out.append(op);
      continue;
    }
    const auto cs = op.controls();
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (op.negate_controls[i]) out.append(GateOp::not_gate(cs[i]));
    GateOp plain = op;
    std::fill(plain.negate_controls.begin(), plain.negate_controls.end(), false);
    out.append(plain);
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (op.negate_controls[i]) out.append(GateOp::not_gate(cs[i]));
  }
  return out;
}

/// Lowers logical gates to NOT/CN/CCN: AND = CCN, COPY = CN and
/// OR(u,v,w) = CN(u,w) CN(v,w) CCN(u,v,w). H_BLOCK passes through.
inline GateSequence to_elementary(const GateSequence& seq) {
  GateSequence out(seq.width());
  for (const auto& op : expand_negations(seq)) {
    switch (op.kind) {
      case GateKind::kAnd: out.append(GateOp::ccn(op.wires[0], op.wires[1], op.wires[2])); break;
      case GateKind::kCopy: out.append(GateOp::cn(op.wires[0], op.wires[1])); break;
      case GateKind::kOr:
        out.append(GateOp::ccn(op.wires[0], op.wires[1], op.wires[2]));
        out.append(GateOp::cn(op.wires[1], op.wires[2]));
        out.append(GateOp::cn(op.wires[0], op.wires[2]));
        break;
      default: out.append(op); break;
    }
  }
  return out;
}

/// Discrete Fourier basis vector xi(t): amplitude k is
/// 2^{-N/2} exp(2 pi i t k / 2^N).
inline StateVector fourier_state(std::uint64_t t, int width, int width_cap = 26) {
  if (width < 1 || width > width_cap || width > 30)
    throw CapacityError("fourier_state width " + std::to_string(width) + " exceeds cap");
  const std::uint64_t dim = std::uint64_t{1} << width;
  if (t >= dim) throw DomainError("fourier index t must be < 2^N");
  StateVector s(width);
  const double scale = std::pow(2.0, -0.5 * width);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    const std::uint64_t phase = (t * k) & (dim - 1);
    s[k] = std::polar(scale, step * static_cast<double>(phase));
  }
  return s;
}

}  // namespace qcsat
