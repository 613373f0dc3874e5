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

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcsat/amplifier.hpp"
#include "qcsat/cnf.hpp"
#include "qcsat/compiler.hpp"
#include "qcsat/entropy.hpp"
#include "qcsat/error.hpp"
#include "qcsat/gates.hpp"

namespace qcsat {

using Json = nlohmann::ordered_json;

// Instances: {"n": int, "clauses": [[signed ints]]}.

inline Json to_json(const CnfInstance& instance) {
  Json clauses = Json::array();
  for (const auto& c : instance.clauses()) {
    Json lits = Json::array();
    for (const auto& lit : c) lits.push_back(lit.to_dimacs());
    clauses.push_back(std::move(lits));
  }
  return Json{{"n", instance.num_variables()}, {"clauses", std::move(clauses)}};
}

inline CnfInstance instance_from_json(const Json& j) {
  try {
    std::vector<Clause> clauses;
    for (const auto& c : j.at("clauses")) {
      std::vector<Literal> lits;
      for (const auto& v : c) {
        const int value = v.get<int>();
        if (value == 0) throw DomainError("literal 0 is not allowed");
        lits.push_back(Literal::from_dimacs(value));
      }
      clauses.emplace_back(std::move(lits));
    }
    return CnfInstance(j.at("n").get<int>(), std::move(clauses));
  } catch (const Json::exception& e) {
    throw ParseError(0, std::string("invalid instance JSON: ") + e.what());
  }
}

// Gate sequences: {"width": N, "ops": [{"kind", "wires", "neg"}]}.

inline Json to_json(const GateOp& op) {
  Json neg = Json::array();
  for (bool b : op.negate_controls) neg.push_back(b);
  return Json{{"kind", gate_name(op.kind)}, {"wires", op.wires}, {"neg", std::move(neg)}};
}

inline Json to_json(const GateSequence& seq) {
  Json ops = Json::array();
  for (const auto& op : seq) ops.push_back(to_json(op));
  return Json{{"width", seq.width()}, {"ops", std::move(ops)}};
}

inline GateSequence sequence_from_json(const Json& j) {
  try {
    GateSequence seq(j.at("width").get<int>());
    for (const auto& o : j.at("ops")) {
      const auto name = o.at("kind").get<std::string>();
      const auto kind = gate_kind_from_name(name);
      if (!kind) throw ParseError(0, "unknown gate kind '" + name + "'");
      GateOp op{*kind, o.at("wires").get<std::vector<int>>(), {}};
      for (const auto& b : o.at("neg")) op.negate_controls.push_back(b.get<bool>());
      seq.append(std::move(op));
    }
    return seq;
  } catch (const Json::exception& e) {
    throw ParseError(0, std::string("invalid circuit JSON: ") + e.what());
  }
}

inline Json to_json(const QubitLayout& layout) {
  return Json{{"n", layout.n},       {"mu", layout.mu},           {"total", layout.total},
              {"s", layout.s},       {"s_final", layout.s_final}, {"work", layout.work}};
}

inline Json to_json(const CompiledCircuit& circuit, std::size_t num_clauses) {
  const auto elementary = to_elementary(circuit.sequence);
  Json summary{{"n", circuit.layout.n},
               {"m", num_clauses},
               {"mu", circuit.layout.mu},
               {"total_qubits", circuit.layout.total},
               {"gate_count", circuit.sequence.size()},
               {"elementary_gate_count", elementary.size()}};
  return Json{{"summary", std::move(summary)},
              {"layout", to_json(circuit.layout)},
              {"circuit", to_json(circuit.sequence)}};
}

// Complex matrices: rows of entries, each entry [re, im] or a bare real.

inline MatrixXc matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) throw ParseError(0, "matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  MatrixXc m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw ParseError(0, "ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& e = row[static_cast<std::size_t>(c)];
      if (e.is_number()) {
        m(r, c) = e.get<double>();
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(r, c) = {e[0].get<double>(), e[1].get<double>()};
      } else {
        throw ParseError(0, "matrix entry must be a number or [re, im]");
      }
    }
  }
  return m;
}

inline Json to_json(const MatrixXc& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Input of the entropy metrics command:
/// {"rho": matrix, "channel": {"kraus": [matrix, ...]}, "base": 2 | "e"}.
struct EntropyRequest {
  DensityMatrix rho;
  KrausChannel channel;
  LogBase base = LogBase::kTwo;
};

inline EntropyRequest entropy_request_from_json(const Json& j) {
  if (!j.contains("rho") || !j.contains("channel") || !j.at("channel").contains("kraus"))
    throw ParseError(0, "entropy input needs \"rho\" and \"channel\": {\"kraus\": [...]}");
  LogBase base = LogBase::kTwo;
  if (j.contains("base")) {
    const auto& b = j.at("base");
    if (b.is_string() && b.get<std::string>() == "e") base = LogBase::kE;
    else if (b.is_number() && b.get<double>() == 2.0) base = LogBase::kTwo;
    else if (b.is_string() && b.get<std::string>() == "2") base = LogBase::kTwo;
    else throw ParseError(0, "base must be 2 or \"e\"");
  }
  std::vector<MatrixXc> ops;
  for (const auto& k : j.at("channel").at("kraus")) ops.push_back(matrix_from_json(k));
  return {DensityMatrix(matrix_from_json(j.at("rho")), 1e-10), KrausChannel(std::move(ops)), base};
}

/// {S, S_out, S_e, I1, I2, I3, pvm_report}; pvm_report is null unless the
/// channel is a rank-1 PVM.
inline Json entropy_metrics_json(const EntropyRequest& req) {
  const double s = vn_entropy(req.rho, req.base);
  const double s_out = vn_entropy(req.channel.apply(req.rho), req.base);
  const double s_e = entropy_exchange(req.rho, req.channel, req.base);
  const auto ci = coherent_informations(req.rho, req.channel, req.base);
  const double i1 = ohya_mutual(req.rho, req.channel, {0, 0, req.base});
  Json pvm = nullptr;
  if (req.channel.is_rank1_pvm()) {
    const auto r = pvm_entropy_report(req.rho, req.channel, req.base);
    pvm = Json{{"i1_le_min_entropies", r.i1_bounded}, {"i2_zero", r.i2_zero}, {"i3_equals_s", r.i3_equals_s},
              {"all_hold", r.all_hold()}};
  }
  return Json{{"S", s}, {"S_out", s_out}, {"S_e", s_e}, {"I1", i1}, {"I2", ci.i2}, {"I3", ci.i3}, {"pvm_report", pvm}};
}

inline Json verdict_json(const SatDecision& d) {
  Json crossing = nullptr;
  if (d.trajectory.first_crossing) crossing = *d.trajectory.first_crossing;
  return Json{{"decision", verdict_name(d.verdict)}, {"first_crossing", crossing}};
}

}  // namespace qcsat
