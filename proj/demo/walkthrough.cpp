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

// Compiles a small instance, runs it on the simulator, and decides SAT with
// both engines.

#include <cstdio>
#include <iostream>

#include "qcsat/qcsat.hpp"

int main() {
  // (x1 v x2) ^ (~x1 v x3) ^ (~x2 v ~x3)
  const qcsat::CnfInstance inst(3, {{1, 2}, {-1, 3}, {-2, -3}});
  const auto circuit = qcsat::compile(inst);
  const auto& layout = circuit.layout;
  std::printf("n=%d m=%zu mu=%d qubits=%d gates=%zu\n", layout.n, inst.num_clauses(), layout.mu,
              layout.total, circuit.sequence.size());

  const auto state = qcsat::apply(qcsat::init_state(layout), circuit.sequence);
  const double p = qcsat::success_probability(state, layout);
  std::printf("q^2=%.6f  r=%.0f (enumeration: %llu)\n", p, p * 8.0,
              static_cast<unsigned long long>(qcsat::count_satisfying(inst)));

  const auto chaos = qcsat::decide_sat(p, qcsat::LogisticParams::for_variables(layout.n));
  std::printf("chaos: %s", qcsat::verdict_name(chaos.verdict));
  if (chaos.trajectory.first_crossing) std::printf(" at step %d", *chaos.trajectory.first_crossing);
  std::printf("\n");

  const auto lind = qcsat::discriminate(std::sqrt(p));
  std::printf("lindblad: %s (%s)\n", qcsat::discrimination_name(lind.decision),
              qcsat::dynamics_name(lind.classification));

  const auto unsat = qcsat::CnfInstance(1, {{1}, {-1}});
  const auto report = qcsat::solve(unsat, {});
  std::cout << qcsat::to_json(report).dump(2) << '\n';
  return 0;
}
