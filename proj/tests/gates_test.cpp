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
#include <complex>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcsat/gates.hpp"
#include "qcsat/simulator.hpp"

namespace {

using qcsat::GateKind;
using qcsat::GateOp;
using qcsat::GateSequence;
using Bits = std::vector<std::uint8_t>;

Bits sem(const GateOp& op, Bits in) { return qcsat::gate_semantics(op, in); }

TEST(Semantics, TruthTableExamples) {
  EXPECT_EQ(sem(GateOp::and_gate(1, 2, 3), {1, 1, 0}), (Bits{1, 1, 1}));
  EXPECT_EQ(sem(GateOp::or_gate(1, 2, 3), {0, 0, 0}), (Bits{0, 0, 0}));
  EXPECT_EQ(sem(GateOp::not_gate(2), {0, 1, 0}), (Bits{0, 0, 0}));
  EXPECT_EQ(sem(GateOp::copy(1, 2), {1, 0}), (Bits{1, 1}));
}

TEST(Semantics, FullTruthTables) {
  for (int e1 = 0; e1 < 2; ++e1)
    for (int e2 = 0; e2 < 2; ++e2)
      for (int t = 0; t < 2; ++t) {
        const Bits in{static_cast<std::uint8_t>(e1), static_cast<std::uint8_t>(e2), static_cast<std::uint8_t>(t)};
        EXPECT_EQ(sem(GateOp::and_gate(1, 2, 3), in)[2], t ^ (e1 & e2));
        EXPECT_EQ(sem(GateOp::or_gate(1, 2, 3), in)[2], t ^ (e1 | e2));
        EXPECT_EQ(sem(GateOp::ccn(1, 2, 3), in)[2], t ^ (e1 & e2));
        EXPECT_EQ(sem(GateOp::or_gate(1, 2, 3, true, false), in)[2], t ^ ((1 - e1) | e2));
        EXPECT_EQ(sem(GateOp::and_gate(1, 2, 3, true, true), in)[2], t ^ ((1 - e1) & (1 - e2)));
      }
}

TEST(Semantics, WidthMismatchAndInvalidOps) {
  EXPECT_THROW(sem(GateOp::and_gate(1, 2, 4), {0, 0, 0}), qcsat::DomainError);
  EXPECT_THROW(qcsat::validate_gate(GateOp::and_gate(1, 1, 2), 3), qcsat::DomainError);
  EXPECT_THROW(qcsat::validate_gate(GateOp{GateKind::kCn, {1, 2, 3}, {false}}, 3), qcsat::DomainError);
  EXPECT_THROW(qcsat::validate_gate(GateOp{GateKind::kCn, {1, 2}, {}}, 3), qcsat::DomainError);
  EXPECT_THROW(qcsat::validate_gate(GateOp::not_gate(0), 3), qcsat::DomainError);
  EXPECT_THROW(sem(GateOp::h_block(1), {0}), qcsat::DomainError);
  GateSequence seq(2);
  EXPECT_THROW(seq.append(GateOp::copy(1, 3)), qcsat::DomainError);
}

TEST(Semantics, IndexFormMatchesBitForm) {
  const std::vector<GateOp> ops = {GateOp::not_gate(3),          GateOp::cn(4, 1, true),
                                   GateOp::ccn(2, 4, 3),         GateOp::and_gate(1, 3, 2, false, true),
                                   GateOp::or_gate(4, 2, 1, true), GateOp::copy(3, 4)};
  for (const auto& op : ops)
    for (std::uint64_t i = 0; i < 16; ++i) {
      const auto bits = qcsat_test::bits_of(i, 4);
      Bits b(bits.begin(), bits.end());
      const auto out = sem(op, b);
      std::vector<int> as_int(out.begin(), out.end());
      EXPECT_EQ(qcsat::gate_semantics_index(op, i, 4), qcsat_test::index_of(as_int));
      EXPECT_EQ(as_int, qcsat_test::truth_table_step(op, bits));
    }
}

TEST(Unitarity, EveryKindIsAPermutationAndInvolution) {
  EXPECT_TRUE(qcsat::gate_unitary_check(GateOp::and_gate(1, 2, 3)));
  EXPECT_TRUE(qcsat::gate_unitary_check(GateOp::or_gate(1, 2, 3)));
  EXPECT_TRUE(qcsat::gate_unitary_check(GateOp::cn(1, 2)));
  EXPECT_TRUE(qcsat::gate_unitary_check(GateOp::or_gate(3, 1, 2, true, true)));
  for (const auto& op : {GateOp::and_gate(1, 2, 3), GateOp::or_gate(1, 2, 3, true), GateOp::copy(2, 1),
                         GateOp::not_gate(2), GateOp::ccn(3, 2, 1)})
    for (std::uint64_t i = 0; i < 8; ++i)
      EXPECT_EQ(qcsat::gate_semantics_index(op, qcsat::gate_semantics_index(op, i, 3), 3), i);
}

// OR(u,v,w) = CN(u,w) CN(v,w) CCN(u,v,w), AND = CCN, COPY = CN as basis actions.
TEST(Embedding, ElementaryDecompositionMatchesLogicalGates) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int width = 5;
    GateSequence seq(width);
    std::uniform_int_distribution<int> wire(1, width), kind(0, 2);
    for (int g = 0; g < 6; ++g) {
      int u = wire(rng), v = wire(rng), w = wire(rng);
      while (v == u) v = wire(rng);
      while (w == u || w == v) w = wire(rng);
      const bool nu = rng() & 1, nv = rng() & 1;
      switch (kind(rng)) {
        case 0: seq.append(GateOp::or_gate(u, v, w, nu, nv)); break;
        case 1: seq.append(GateOp::and_gate(u, v, w, nu, nv)); break;
        default: seq.append(GateOp::copy(u, v, nu)); break;
      }
    }
    const auto elem = qcsat::to_elementary(seq);
    for (const auto& op : elem) {
      EXPECT_TRUE(op.kind == GateKind::kNot || op.kind == GateKind::kCn || op.kind == GateKind::kCcn);
      EXPECT_FALSE(op.has_negated_control());
    }
    const auto expanded = qcsat::expand_negations(seq);
    for (std::uint64_t i = 0; i < 32; ++i) {
      const auto bits = qcsat_test::bits_of(i, width);
      const auto ref = qcsat_test::classical_run(seq, bits);
      EXPECT_EQ(qcsat_test::classical_run(elem, bits), ref);
      EXPECT_EQ(qcsat_test::classical_run(expanded, bits), ref);
    }
  }
}

TEST(Embedding, OrDecompositionOrder) {
  GateSequence seq(3);
  seq.append(GateOp::or_gate(1, 2, 3));
  const auto elem = qcsat::to_elementary(seq);
  ASSERT_EQ(elem.size(), 3u);
  EXPECT_EQ(elem.ops()[0], GateOp::ccn(1, 2, 3));
  EXPECT_EQ(elem.ops()[1], GateOp::cn(2, 3));
  EXPECT_EQ(elem.ops()[2], GateOp::cn(1, 3));
}

TEST(Names, RoundTrip) {
  for (auto k : qcsat::kAllGateKinds) EXPECT_EQ(qcsat::gate_kind_from_name(qcsat::gate_name(k)), k);
  EXPECT_FALSE(qcsat::gate_kind_from_name("XOR").has_value());
}

TEST(Fourier, Examples) {
  const auto s0 = qcsat::fourier_state(0, 2);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(s0[k] - std::complex<double>(0.5, 0.0)), 0.0, 1e-15);
  const auto s1 = qcsat::fourier_state(1, 1);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(s1[0] - std::complex<double>(h, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s1[1] - std::complex<double>(-h, 0.0)), 0.0, 1e-15);
  EXPECT_THROW(qcsat::fourier_state(4, 2), qcsat::DomainError);
  EXPECT_THROW(qcsat::fourier_state(0, 27), qcsat::CapacityError);
}

TEST(Fourier, OrthonormalBasis) {
  for (int width = 1; width <= 5; ++width) {
    const std::uint64_t dim = std::uint64_t{1} << width;
    std::vector<qcsat::StateVector> states;
    for (std::uint64_t t = 0; t < dim; ++t) states.push_back(qcsat::fourier_state(t, width));
    for (std::uint64_t a = 0; a < dim; ++a) {
      EXPECT_NEAR(states[a].norm_squared(), 1.0, 1e-12);
      for (std::uint64_t b = 0; b < dim; ++b) {
        std::complex<double> ip = 0.0;
        for (std::uint64_t k = 0; k < dim; ++k) ip += std::conj(states[a][k]) * states[b][k];
        EXPECT_NEAR(std::abs(ip), a == b ? 1.0 : 0.0, 1e-12);
      }
    }
  }
}

TEST(HBlock, UniformSuperpositionOnLeadingWires) {
  GateSequence seq(3);
  seq.append(GateOp::h_block(2));
  const auto dense = qcsat_test::dense_run(seq);
  const auto state = qcsat::apply(qcsat::init_state(3), seq);
  for (Eigen::Index i = 0; i < 8; ++i) {
    EXPECT_NEAR(std::abs(state[static_cast<std::size_t>(i)] - dense(i)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(state[static_cast<std::size_t>(i)]), (i & 1) ? 0.0 : 0.5, 1e-14);
  }
}

}  // namespace
