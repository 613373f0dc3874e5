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

// qcsat command-line front end. Exit codes: 10 SAT, 20 UNSAT (solve),
// 2 engine/oracle disagreement, 1 any error, 0 otherwise.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcsat/qcsat.hpp"

namespace {

using qcsat::Json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qcsat::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

qcsat::CnfInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qcsat::Error("cannot open '" + path + "'");
  return qcsat::parse_dimacs(in);
}

struct GlobalFlags {
  bool json_only = false;
  std::string csv_path;
  std::optional<std::uint64_t> seed;
  int width_cap = 26;
  unsigned threads = 0;
};

// Writes CSV to --csv when given; otherwise prints it ahead of the JSON
// verdict unless --json asked for the verdict alone.
void emit(const GlobalFlags& g, const std::string& csv, const Json& verdict) {
  if (!g.csv_path.empty()) {
    std::ofstream out(g.csv_path, std::ios::binary);
    if (!out) throw qcsat::Error("cannot write '" + g.csv_path + "'");
    out << csv;
  } else if (!g.json_only) {
    std::cout << csv;
  }
  std::cout << verdict.dump() << '\n';
}

std::uint64_t require_seed(const GlobalFlags& g, const char* what) {
  if (!g.seed) throw qcsat::DomainError(std::string(what) + " is randomized and needs an explicit --seed");
  return *g.seed;
}

// "r/d" or a decimal. Dyadic fractions also report n = log2(d).
struct ParsedQ2 {
  double value = 0.0;
  std::optional<std::uint64_t> r;
  std::optional<int> n;
};

ParsedQ2 parse_q2(const std::string& text) {
  ParsedQ2 out;
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t used = 0;
      const std::uint64_t num = std::stoull(text.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument("numerator");
      const std::string den_text = text.substr(slash + 1);
      const std::uint64_t den = std::stoull(den_text, &used);
      if (used != den_text.size() || den == 0) throw std::invalid_argument("denominator");
      out.value = static_cast<double>(num) / static_cast<double>(den);
      if ((den & (den - 1)) == 0) {
        int n = 0;
        while ((std::uint64_t{1} << n) != den) ++n;
        out.r = num;
        out.n = n;
      }
    } else {
      std::size_t used = 0;
      out.value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing characters");
    }
  } catch (const std::exception&) {
    throw qcsat::DomainError("cannot parse --q2 '" + text + "' (expected r/d or a decimal)");
  }
  if (!(out.value >= 0.0 && out.value <= 1.0)) throw qcsat::DomainError("--q2 must lie in [0, 1]");
  return out;
}

std::string trajectory_csv(const qcsat::TrajectoryRecord& rec) {
  std::string csv = "t,p1,abs_c\n";
  for (std::size_t i = 0; i < rec.size(); ++i)
    csv += fmt17(rec.times[i]) + "," + fmt17(rec.p1[i]) + "," + fmt17(rec.abs_c[i]) + "\n";
  return csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcsat: SAT circuits on a state-vector simulator, chaotic amplification, "
               "dissipative discrimination and quantum mutual entropies"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_flag("--json", g.json_only, "Emit only the JSON result");
  app.add_option("--csv", g.csv_path, "Write trajectory CSV to this path");
  app.add_option("--seed", g.seed, "Seed for randomized paths");
  app.add_option("--width-cap", g.width_cap, "Maximum simulated qubit count")->check(CLI::Range(1, 30));
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Count satisfying assignments by enumeration");
  std::string oracle_file;
  int max_vars = 24;
  oracle->add_option("file", oracle_file, "DIMACS CNF file")->required();
  oracle->add_option("--max-vars", max_vars, "Refuse instances with more variables");

  // compile
  auto* compile_cmd = app.add_subcommand("compile", "Compile an instance to the SAT circuit");
  std::string compile_file;
  compile_cmd->add_option("file", compile_file, "DIMACS CNF file")->required();

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Run the circuit and read the success probability");
  std::string simulate_file;
  bool dump_amplitudes = false;
  std::optional<std::uint64_t> sim_shots;
  simulate->add_option("file", simulate_file, "DIMACS CNF file")->required();
  simulate->add_flag("--amplitudes", dump_amplitudes, "Include final amplitudes (width <= 12)");
  simulate->add_option("--shots", sim_shots, "Also estimate q from this many samples")->check(CLI::PositiveNumber);

  // amplify
  auto* amplify = app.add_subcommand("amplify", "Iterate the logistic map on q^2");
  std::string q2_text;
  double amp_a = 3.71;
  std::optional<int> amp_steps, amp_n, precision_bits;
  bool certify = false;
  amplify->add_option("--q2", q2_text, "q^2 as r/d or a decimal")->required();
  amplify->add_option("--a", amp_a, "Map parameter in [0, 4]");
  amplify->add_option("--steps", amp_steps, "Number of steps (default 2n)");
  amplify->add_option("--n", amp_n, "Variable count used for the default 2n steps");
  amplify->add_flag("--certify", certify, "Cross-check with the MPFR oracle (a = 371/100, q2 = r/2^n)");
  amplify->add_option("--precision-bits", precision_bits, "Oracle precision (default 64 + 2 steps)");

  // lindblad
  auto* lindblad = app.add_subcommand("lindblad", "Discriminate q via damping versus oscillation");
  double lq = 0.0, gamma_re = 1.0, gamma_im = 0.0, dt = 1e-3;
  int e0 = 0, e1 = 2;
  std::optional<double> t_final;
  lindblad->add_option("--q", lq, "Amplitude q in [0, 1)")->required();
  lindblad->add_option("--gamma-re", gamma_re, "Re gamma (> 0)");
  lindblad->add_option("--gamma-im", gamma_im, "Im gamma");
  lindblad->add_option("--e0", e0, "Integer level E0");
  lindblad->add_option("--e1", e1, "Integer level E1 > E0");
  lindblad->add_option("--t-final", t_final, "Integration horizon");
  lindblad->add_option("--dt", dt, "Time step");

  // entropy
  auto* entropy = app.add_subcommand("entropy", "Mutual-entropy metrics of a state and Kraus channel");
  std::string entropy_in;
  int budget = 0;
  entropy->add_option("--in", entropy_in, "JSON input file")->required();
  entropy->add_option("--budget", budget, "Random rotations tried inside degenerate eigenspaces");

  // solve
  auto* solve = app.add_subcommand("solve", "Full pipeline: compile, simulate, amplify, verify");
  std::string solve_file, engine_name = "chaos";
  double solve_a = 3.71;
  std::optional<int> solve_steps;
  std::optional<std::uint64_t> solve_shots;
  bool timings = false;
  solve->add_option("file", solve_file, "DIMACS CNF file")->required();
  solve->add_option("--engine", engine_name, "chaos | lindblad | both")
      ->check(CLI::IsMember({"chaos", "lindblad", "both"}));
  solve->add_option("--a", solve_a, "Map parameter in [0, 4]");
  solve->add_option("--steps", solve_steps, "Amplifier steps (default 2n)");
  solve->add_option("--gamma-re", gamma_re, "Re gamma (> 0)");
  solve->add_option("--gamma-im", gamma_im, "Im gamma");
  solve->add_option("--e0", e0, "Integer level E0");
  solve->add_option("--e1", e1, "Integer level E1 > E0");
  solve->add_option("--t-final", t_final, "Discriminator horizon");
  solve->add_option("--dt", dt, "Discriminator time step");
  solve->add_option("--shots", solve_shots, "Estimate q from samples")->check(CLI::PositiveNumber);
  solve->add_flag("--timings", timings, "Include wall-clock stage timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  qcsat::SimulatorOptions sim;
  sim.width_cap = g.width_cap;
  sim.workers = g.threads;

  try {
    if (*oracle) {
      const auto inst = load_instance(oracle_file);
      qcsat::OracleOptions opts;
      opts.max_variables = max_vars;
      opts.workers = g.threads;
      const auto r = qcsat::count_satisfying(inst, opts);
      const std::uint64_t total = std::uint64_t{1} << inst.num_variables();
      if (g.json_only) std::cout << Json{{"n", inst.num_variables()}, {"r", r}, {"two_pow_n", total}}.dump() << '\n';
      else std::cout << "r " << r << "\n2^n " << total << '\n';
      return 0;
    }

    if (*compile_cmd) {
      const auto inst = load_instance(compile_file);
      const auto circuit = qcsat::compile(inst);
      std::cout << qcsat::to_json(circuit, inst.num_clauses()).dump() << '\n';
      return 0;
    }

    if (*simulate) {
      const auto inst = load_instance(simulate_file);
      const auto circuit = qcsat::compile(inst);
      if (dump_amplitudes && circuit.layout.total > 12)
        throw qcsat::CapacityError("amplitude dump is limited to 12 qubits");
      const auto state = qcsat::apply(qcsat::init_state(circuit.layout, sim), circuit.sequence, sim);
      const double p = qcsat::success_probability(state, circuit.layout, sim.workers);
      Json out{{"probability", p},
               {"r_inferred", p * static_cast<double>(std::uint64_t{1} << inst.num_variables())},
               {"layout", qcsat::to_json(circuit.layout)}};
      if (sim_shots) {
        const auto seed = require_seed(g, "--shots");
        out["shots"] = *sim_shots;
        out["seed"] = seed;
        out["q_estimate"] = qcsat::estimate_q(state, circuit.layout, *sim_shots, seed, sim.workers);
      }
      if (dump_amplitudes) {
        Json amps = Json::array();
        for (const auto& a : state.amplitudes()) amps.push_back(Json::array({a.real(), a.imag()}));
        out["amplitudes"] = std::move(amps);
      }
      std::cout << out.dump() << '\n';
      return 0;
    }

    if (*amplify) {
      const auto q2 = parse_q2(q2_text);
      qcsat::LogisticParams params;
      params.a = amp_a;
      if (amp_steps) params.max_steps = *amp_steps;
      else if (amp_n) params.max_steps = 2 * *amp_n;
      else if (q2.n) params.max_steps = 2 * *q2.n;
      else throw qcsat::DomainError("--steps or --n is required when q2 is not of the form r/2^n");
      const auto decision = qcsat::decide_sat(q2.value, params);
      Json verdict = qcsat::verdict_json(decision);
      verdict["q2"] = q2.value;
      verdict["a"] = params.a;
      verdict["steps"] = params.max_steps;
      if (certify) {
        if (!q2.r) throw qcsat::DomainError("--certify needs q2 given as r/2^n");
        if (amp_a != 3.71) throw qcsat::DomainError("--certify uses a = 371/100");
        qcsat::OracleParams op;
        op.max_steps = params.max_steps;
        if (precision_bits) op.precision_bits = *precision_bits;
        const auto exact = qcsat::iterate_oracle(*q2.r, *q2.n, op);
        Json c{{"precision_bits", op.effective_precision()},
               {"first_crossing", exact.first_crossing ? Json(*exact.first_crossing) : Json(nullptr)},
               {"agrees", exact.first_crossing == decision.trajectory.first_crossing}};
        verdict["certificate"] = std::move(c);
      }
      std::string csv = "step,x\n";
      for (std::size_t m = 0; m < decision.trajectory.xs.size(); ++m)
        csv += std::to_string(m) + "," + fmt17(decision.trajectory.xs[m]) + "\n";
      emit(g, csv, verdict);
      return 0;
    }

    if (*lindblad) {
      qcsat::DiscriminatorOptions opts;
      opts.dissipative.gamma = {gamma_re, gamma_im};
      opts.hamiltonian = {e0, e1};
      opts.t_final = t_final;
      opts.dt = dt;
      const auto res = qcsat::discriminate(lq, opts);
      Json verdict{{"classification", qcsat::dynamics_name(res.classification)},
                   {"decision", qcsat::discrimination_name(res.decision)},
                   {"case", res.dynamics_case},
                   {"t_final", res.t_final}};
      emit(g, trajectory_csv(res.record), verdict);
      return 0;
    }

    if (*entropy) {
      const auto req = qcsat::entropy_request_from_json(Json::parse(read_file(entropy_in)));
      Json out = qcsat::entropy_metrics_json(req);
      if (budget > 0) {
        const auto seed = require_seed(g, "--budget");
        out["I1"] = qcsat::ohya_mutual(req.rho, req.channel, {budget, seed, req.base});
        out["I1_search"] = {{"budget", budget}, {"seed", seed}};
      }
      std::cout << out.dump() << '\n';
      return 0;
    }

    if (*solve) {
      const auto inst = load_instance(solve_file);
      qcsat::SolveOptions opts;
      opts.engine = engine_name == "both"       ? qcsat::Engine::kBoth
                    : engine_name == "lindblad" ? qcsat::Engine::kLindblad
                                                : qcsat::Engine::kChaos;
      opts.a = solve_a;
      opts.steps = solve_steps;
      if (solve_shots) {
        opts.shots = solve_shots;
        opts.seed = require_seed(g, "--shots");
      }
      opts.lindblad.dissipative.gamma = {gamma_re, gamma_im};
      opts.lindblad.hamiltonian = {e0, e1};
      opts.lindblad.t_final = t_final;
      opts.lindblad.dt = dt;
      opts.simulator = sim;
      opts.oracle.workers = g.threads;
      const auto report = qcsat::solve(inst, opts);
      std::cout << qcsat::to_json(report, timings).dump() << '\n';
      if (!report.consistent) std::cerr << "qcsat: " << report.diagnostic << '\n';
      return qcsat::exit_code(report);
    }
  } catch (const Json::exception& e) {
    std::cerr << "qcsat: invalid JSON: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qcsat: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
