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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcsat/cnf.hpp"
#include "qcsat/error.hpp"
#include "qcsat/gates.hpp"

namespace qcsat {

/// Register layout of the SAT circuit: variable qubits 1..n, then mu dust
/// qubits holding clause and partial-conjunction values, then the result
/// qubit s_final = n + mu + 1.
///
/// Clause k (0-based) owns work qubits [s[k], s[k] + work[k]) where
/// work[k] = card(C_k) + delta(1, card(C_k)) - 1. For k >= 2 the qubit
/// just before s[k] receives a partial conjunction from the AND chain,
/// which is why s[1] carries the extra "- 1" that later offsets do not.
struct QubitLayout {
  int n = 0;
  int mu = 0;
  int total = 0;
  std::vector<int> s;
  int s_final = 0;
  std::vector<int> work;

  std::size_t num_clauses() const noexcept { return s.size(); }
  /// Wire holding the truth value of clause k once its fragment has run.
  int clause_result(std::size_t k) const { return s.at(k) + work.at(k) - 1; }

  friend bool operator==(const QubitLayout&, const QubitLayout&) = default;
};

inline int unit_delta(std::size_t card) noexcept { return card == 1 ? 1 : 0; }

inline QubitLayout compute_layout(const CnfInstance& instance) {
  const std::size_t m = instance.num_clauses();
  if (m == 0) throw DomainError("layout requires at least one clause");
  QubitLayout layout;
  layout.n = instance.num_variables();
  layout.s.resize(m);
  layout.work.resize(m);
  auto step = [&](std::size_t k) {
    const std::size_t card = instance.clause(k).size();
    return static_cast<int>(card) + unit_delta(card);
  };
  for (std::size_t k = 0; k < m; ++k) layout.work[k] = step(k) - 1;

  layout.s[0] = layout.n + 1;
  if (m >= 2) layout.s[1] = layout.s[0] + step(0) - 1;
  for (std::size_t i = 2; i < m; ++i) layout.s[i] = layout.s[i - 1] + step(i - 1);
  const int s_end = layout.s[m - 1] - 1 + step(m - 1);

  layout.mu = s_end - 1 - layout.n;
  layout.total = layout.n + layout.mu + 1;
  layout.s_final = layout.total;
  return layout;
}

/// Closed-form dust count sum_k [card(C_k) + delta(1, card(C_k))] - 2,
/// valid for m >= 2.
inline int dust_count_closed_form(const CnfInstance& instance) {
  if (instance.num_clauses() < 2) throw DomainError("closed-form dust count needs m >= 2");
  int sum = 0;
  for (const auto& c : instance.clauses()) sum += static_cast<int>(c.size()) + unit_delta(c.size());
  return sum - 2;
}

/// OR-chain writing the truth value of clause k into its last work qubit.
/// Negated literals become negated controls. A unit clause is COPYed; the
/// two-literal tautology {x, not x} sets its work qubit with a NOT.
inline GateSequence compile_clause(const CnfInstance& instance, std::size_t k, const QubitLayout& layout) {
  if (k >= instance.num_clauses() || k >= layout.num_clauses())
    throw DomainError("clause index " + std::to_string(k) + " out of range");
  std::vector<Literal> lits = instance.clause(k).literals();
  const int first = layout.s[k];
  GateSequence frag(layout.total);

  if (lits.size() == 1) {
    frag.append(GateOp::copy(lits[0].variable, first, lits[0].negated));
  } else {
    if (lits[0].variable == lits[1].variable) {
      for (std::size_t j = 2; j < lits.size(); ++j) {
        if (lits[j].variable != lits[0].variable) {
          std::swap(lits[1], lits[j]);
          break;
        }
      }
    }
    if (lits[0].variable == lits[1].variable) {
      // Only {x, not x} remains here: the clause is constantly true.
      frag.append(GateOp::not_gate(first));
    } else {
      frag.append(GateOp::or_gate(lits[0].variable, lits[1].variable, first, lits[0].negated,
                                  lits[1].negated));
      for (std::size_t i = 2; i < lits.size(); ++i) {
        const int prev = first + static_cast<int>(i) - 2;
        frag.append(GateOp::or_gate(lits[i].variable, prev, prev + 1, lits[i].negated, false));
      }
    }
  }

  const int last = frag.ops().back().target();
  const int limit = k + 1 < layout.num_clauses() ? layout.s[k + 1] : layout.s_final;
  if (last != layout.clause_result(k) || last >= limit) {
    throw InvariantError("clause " + std::to_string(k) + " overflows its work region");
  }
  return frag;
}

struct CompiledCircuit {
  QubitLayout layout;
  GateSequence sequence;
};

/// Hadamard block on the variable qubits, one OR fragment per clause, then
/// a left-to-right AND chain over the clause results ending on s_final.
inline CompiledCircuit compile(const CnfInstance& instance) {
  QubitLayout layout = compute_layout(instance);
  GateSequence seq(layout.total);
  seq.append(GateOp::h_block(layout.n));
  const std::size_t m = instance.num_clauses();
  for (std::size_t k = 0; k < m; ++k) seq.append(compile_clause(instance, k, layout));

  if (m == 1) {
    seq.append(GateOp::copy(layout.clause_result(0), layout.s_final));
  } else {
    // 1-based s_j is layout.s[j - 1].
    auto s1 = [&](std::size_t j) { return layout.s[j - 1]; };
    for (std::size_t k = 1; k + 1 < m; ++k)
      seq.append(GateOp::and_gate(s1(k + 1) - 1, s1(k + 2) - 2, s1(k + 2) - 1));
    seq.append(GateOp::and_gate(s1(m) - 1, layout.s_final - 1, layout.s_final));
  }
  return {std::move(layout), std::move(seq)};
}

}  // namespace qcsat
