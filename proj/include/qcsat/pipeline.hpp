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

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "qcsat/amplifier.hpp"
#include "qcsat/cnf.hpp"
#include "qcsat/compiler.hpp"
#include "qcsat/json_io.hpp"
#include "qcsat/lindblad.hpp"
#include "qcsat/simulator.hpp"

namespace qcsat {

enum class Engine { kChaos, kLindblad, kBoth };

struct SolveOptions {
  Engine engine = Engine::kChaos;
  double a = 3.71;
  std::optional<int> steps;             // default 2n
  std::optional<std::uint64_t> shots;   // sample q instead of reading it exactly
  std::uint64_t seed = 0;
  DiscriminatorOptions lindblad;
  SimulatorOptions simulator;
  OracleOptions oracle;
};

struct ChaosOutcome {
  Verdict verdict = Verdict::kUnsat;
  std::optional<int> first_crossing;
  int steps = 0;
};

struct LindbladOutcome {
  std::optional<Discrimination> decision;  // absent when decided by direct measurement
  std::optional<Dynamics> classification;
  int dynamics_case = 0;
  std::string note;
};

struct StageTimings {
  double compile_ms = 0, simulate_ms = 0, oracle_ms = 0, decide_ms = 0;
};

/// Outcome of parse -> compile -> simulate -> amplify/discriminate, checked
/// against the brute-force count r.
struct PipelineReport {
  int n = 0;
  std::size_t m = 0;
  int mu = 0;
  int total_qubits = 0;
  std::size_t gate_count = 0;
  std::uint64_t r = 0;
  std::uint64_t two_pow_n = 0;
  double probability = 0.0;
  double q_squared = 0.0;
  std::optional<ChaosOutcome> chaos;
  std::optional<LindbladOutcome> lindblad;
  Verdict verdict = Verdict::kUnsat;
  bool consistent = true;
  std::string diagnostic;
  StageTimings timings;
};

/// 10 for SAT, 20 for UNSAT, 2 when an engine disagreed with the oracle.
inline int exit_code(const PipelineReport& report) {
  if (!report.consistent) return 2;
  return report.verdict == Verdict::kSat ? 10 : 20;
}

inline PipelineReport solve(const CnfInstance& instance, const SolveOptions& options = {}) {
  using Clock = std::chrono::steady_clock;
  auto ms_since = [](Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  };
  PipelineReport rep;
  rep.n = instance.num_variables();
  rep.m = instance.num_clauses();

  auto t0 = Clock::now();
  const CompiledCircuit circuit = compile(instance);
  rep.mu = circuit.layout.mu;
  rep.total_qubits = circuit.layout.total;
  rep.gate_count = circuit.sequence.size();
  rep.timings.compile_ms = ms_since(t0);

  t0 = Clock::now();
  {
    StateVector state = apply(init_state(circuit.layout, options.simulator), circuit.sequence, options.simulator);
    rep.probability = success_probability(state, circuit.layout, options.simulator.workers);
    if (options.shots) {
      const double q = estimate_q(state, circuit.layout, *options.shots, options.seed, options.simulator.workers);
      rep.q_squared = q * q;
    } else {
      rep.q_squared = rep.probability;
    }
  }
  rep.timings.simulate_ms = ms_since(t0);

  t0 = Clock::now();
  rep.r = count_satisfying(instance, options.oracle);
  rep.two_pow_n = std::uint64_t{1} << rep.n;
  rep.timings.oracle_ms = ms_since(t0);

  t0 = Clock::now();
  std::optional<Verdict> chaos_verdict, lindblad_verdict;
  if (options.engine != Engine::kLindblad) {
    LogisticParams params = LogisticParams::for_variables(rep.n, options.a);
    if (options.steps) params.max_steps = *options.steps;
    const SatDecision d = decide_sat(rep.q_squared, params);
    rep.chaos = ChaosOutcome{d.verdict, d.trajectory.first_crossing, params.max_steps};
    chaos_verdict = d.verdict;
  }
  if (options.engine != Engine::kChaos) {
    LindbladOutcome out;
    const double q = std::sqrt(rep.q_squared);
    if (rep.q_squared >= 1.0 - 1e-12) {
      out.note = "q = 1 lies outside both dynamical cases; decided by direct measurement";
      lindblad_verdict = Verdict::kSat;
    } else {
      const auto res = discriminate(q, options.lindblad);
      out.decision = res.decision;
      out.classification = res.classification;
      out.dynamics_case = res.dynamics_case;
      if (res.decision == Discrimination::kQNonzero) lindblad_verdict = Verdict::kSat;
      else if (res.decision == Discrimination::kQZero) lindblad_verdict = Verdict::kUnsat;
      else out.note = "discriminator was inconclusive";
    }
    rep.lindblad = std::move(out);
  }
  rep.timings.decide_ms = ms_since(t0);

  const Verdict truth = rep.r > 0 ? Verdict::kSat : Verdict::kUnsat;
  rep.verdict = chaos_verdict ? *chaos_verdict : lindblad_verdict.value_or(Verdict::kUnsat);
  if (options.engine != Engine::kChaos && !lindblad_verdict) {
    rep.consistent = false;
    rep.diagnostic = "lindblad engine produced no decision";
  } else if (chaos_verdict && lindblad_verdict && *chaos_verdict != *lindblad_verdict) {
    rep.consistent = false;
    rep.diagnostic = "chaos and lindblad engines disagree";
  } else if (rep.verdict != truth) {
    rep.consistent = false;
    rep.diagnostic = std::string("engine verdict ") + verdict_name(rep.verdict) + " contradicts oracle r=" +
                     std::to_string(rep.r);
  }
  return rep;
}

inline Json to_json(const PipelineReport& rep, bool include_timings = false) {
  Json j{{"instance", {{"n", rep.n}, {"m", rep.m}, {"mu", rep.mu}, {"total_qubits", rep.total_qubits},
                       {"gate_count", rep.gate_count}}},
         {"r", rep.r},
         {"two_pow_n", rep.two_pow_n},
         {"probability", rep.probability},
         {"q_squared", rep.q_squared}};
  if (rep.chaos) {
    Json crossing = nullptr;
    if (rep.chaos->first_crossing) crossing = *rep.chaos->first_crossing;
    j["chaos"] = {{"decision", verdict_name(rep.chaos->verdict)}, {"first_crossing", crossing},
                  {"steps", rep.chaos->steps}};
  }
  if (rep.lindblad) {
    Json l = Json::object();
    l["decision"] = rep.lindblad->decision ? Json(discrimination_name(*rep.lindblad->decision)) : Json(nullptr);
    l["classification"] =
        rep.lindblad->classification ? Json(dynamics_name(*rep.lindblad->classification)) : Json(nullptr);
    l["case"] = rep.lindblad->dynamics_case;
    if (!rep.lindblad->note.empty()) l["note"] = rep.lindblad->note;
    j["lindblad"] = std::move(l);
  }
  j["verdict"] = verdict_name(rep.verdict);
  j["status"] = rep.consistent ? "OK" : "FAILED";
  if (!rep.diagnostic.empty()) j["diagnostic"] = rep.diagnostic;
  if (include_timings) {
    j["timings_ms"] = {{"compile", rep.timings.compile_ms}, {"simulate", rep.timings.simulate_ms},
                       {"oracle", rep.timings.oracle_ms}, {"decide", rep.timings.decide_ms}};
  }
  return j;
}

}  // namespace qcsat
