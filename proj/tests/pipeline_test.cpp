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


#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcsat/pipeline.hpp"

namespace {

using qcsat::CnfInstance;
using qcsat::Engine;
using qcsat::SolveOptions;

SolveOptions with_engine(Engine e) {
  SolveOptions o;
  o.engine = e;
  return o;
}

TEST(Solve, SatisfiableTwoVariables) {
  const auto rep = qcsat::solve(CnfInstance(2, {{1, 2}}), with_engine(Engine::kBoth));
  EXPECT_EQ(qcsat::exit_code(rep), 10);
  EXPECT_NEAR(rep.probability, 0.75, 1e-12);
  EXPECT_EQ(rep.r, 3u);
  EXPECT_TRUE(rep.consistent);
  ASSERT_TRUE(rep.lindblad.has_value());
  EXPECT_EQ(rep.lindblad->decision, qcsat::Discrimination::kQNonzero);
}

TEST(Solve, Contradiction) {
  const auto rep = qcsat::solve(CnfInstance(1, {{1}, {-1}}), with_engine(Engine::kBoth));
  EXPECT_EQ(qcsat::exit_code(rep), 20);
  EXPECT_EQ(rep.probability, 0.0);
  EXPECT_EQ(rep.lindblad->decision, qcsat::Discrimination::kQZero);
}

TEST(Solve, CertainSuccessFallsBackToMeasurement) {
  const auto rep = qcsat::solve(CnfInstance(1, {{1, -1}}), with_engine(Engine::kLindblad));
  EXPECT_EQ(qcsat::exit_code(rep), 10);
  ASSERT_TRUE(rep.lindblad.has_value());
  EXPECT_FALSE(rep.lindblad->decision.has_value());
  EXPECT_FALSE(rep.lindblad->note.empty());
}

TEST(Solve, DegenerateHamiltonianIsReportedAsFailure) {
  auto opts = with_engine(Engine::kLindblad);
  opts.lindblad.hamiltonian = {0, 1};
  const auto rep = qcsat::solve(CnfInstance(1, {{1}, {-1}}), opts);
  EXPECT_FALSE(rep.consistent);
  EXPECT_EQ(qcsat::exit_code(rep), 2);
  EXPECT_EQ(qcsat::to_json(rep).at("status"), "FAILED");
}

TEST(Solve, TooFewStepsIsReportedAsFailure) {
  auto opts = with_engine(Engine::kChaos);
  opts.steps = 0;
  const auto rep = qcsat::solve(CnfInstance(3, {{1}, {2}, {3}}), opts);
  EXPECT_EQ(rep.verdict, qcsat::Verdict::kUnsat);
  EXPECT_FALSE(rep.consistent);
  EXPECT_EQ(qcsat::exit_code(rep), 2);
}

TEST(Solve, NeverSatForUnsatisfiable) {
  std::mt19937_64 rng(113);
  int unsat = 0;
  for (int i = 0; i < 300 && unsat < 30; ++i) {
    const auto inst = qcsat_test::random_instance(rng, 4, 14, 2);
    if (qcsat::compute_layout(inst).total > 20) continue;
    const auto rep = qcsat::solve(inst, with_engine(Engine::kChaos));
    EXPECT_TRUE(rep.consistent) << rep.diagnostic;
    if (rep.r == 0) {
      ++unsat;
      EXPECT_EQ(rep.verdict, qcsat::Verdict::kUnsat);
    }
  }
  EXPECT_GT(unsat, 0);
}

TEST(Solve, SampledAmplitudeIsReproducible) {
  auto opts = with_engine(Engine::kChaos);
  opts.shots = 4096;
  opts.seed = 77;
  const CnfInstance inst(3, {{1, 2}, {-1, 3}});
  const auto a = qcsat::solve(inst, opts);
  const auto b = qcsat::solve(inst, opts);
  EXPECT_EQ(a.q_squared, b.q_squared);
  EXPECT_EQ(qcsat::to_json(a).dump(), qcsat::to_json(b).dump());
}

TEST(Report, TimingsOnlyOnRequest) {
  const auto rep = qcsat::solve(CnfInstance(2, {{1, 2}}));
  EXPECT_FALSE(qcsat::to_json(rep).contains("timings_ms"));
  EXPECT_TRUE(qcsat::to_json(rep, true).contains("timings_ms"));
  EXPECT_EQ(qcsat::to_json(rep).at("instance").dump(),
            R"({"n":2,"m":1,"mu":1,"total_qubits":4,"gate_count":3})");
}

TEST(Report, WidthCapRefusal) {
  SolveOptions opts;
  opts.simulator.width_cap = 4;
  EXPECT_THROW(qcsat::solve(CnfInstance(3, {{1, 2}, {3}}), opts), qcsat::CapacityError);
}

}  // namespace
