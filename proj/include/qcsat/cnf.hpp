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
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcsat/detail/parallel.hpp"
#include "qcsat/error.hpp"

namespace qcsat {

/// A Boolean variable x_k (1-based) or its negation.
struct Literal {
  int variable = 1;
  bool negated = false;

  /// Signed DIMACS form: +k for x_k, -k for its negation.
  int to_dimacs() const noexcept { return negated ? -variable : variable; }
  static Literal from_dimacs(int value) noexcept { return {std::abs(value), value < 0}; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Nonempty set of literals, kept in input order. Tautologies are allowed,
/// repeated literals are not.
class Clause {
 public:
  explicit Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
    if (literals_.empty()) throw DomainError("clause must contain at least one literal");
    for (std::size_t i = 0; i < literals_.size(); ++i) {
      if (literals_[i].variable < 1) throw DomainError("literal variable index must be >= 1");
      for (std::size_t j = 0; j < i; ++j) {
        if (literals_[i] == literals_[j]) {
          throw DomainError("duplicate literal " + std::to_string(literals_[i].to_dimacs()) +
                            " in clause");
        }
      }
    }
  }

  Clause(std::initializer_list<int> dimacs) : Clause(from_ints(dimacs)) {}

  std::size_t size() const noexcept { return literals_.size(); }
  const std::vector<Literal>& literals() const noexcept { return literals_; }
  const Literal& operator[](std::size_t i) const { return literals_[i]; }
  auto begin() const noexcept { return literals_.begin(); }
  auto end() const noexcept { return literals_.end(); }

  bool is_tautology() const noexcept {
    for (const auto& a : literals_)
      for (const auto& b : literals_)
        if (a.variable == b.variable && a.negated != b.negated) return true;
    return false;
  }

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  static std::vector<Literal> from_ints(std::initializer_list<int> values) {
    std::vector<Literal> out;
    for (int v : values) out.push_back(Literal::from_dimacs(v));
    return out;
  }

  std::vector<Literal> literals_;
};

/// n Boolean variables and an ordered list of m >= 1 clauses over them.
class CnfInstance {
 public:
  CnfInstance(int num_variables, std::vector<Clause> clauses)
      : n_(num_variables), clauses_(std::move(clauses)) {
    if (n_ < 1) throw DomainError("instance needs at least one variable");
    if (clauses_.empty()) throw DomainError("instance needs at least one clause");
    for (const auto& c : clauses_)
      for (const auto& lit : c)
        if (lit.variable > n_) {
          throw DomainError("variable " + std::to_string(lit.variable) + " exceeds n=" +
                            std::to_string(n_));
        }
  }

  int num_variables() const noexcept { return n_; }
  std::size_t num_clauses() const noexcept { return clauses_.size(); }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  const Clause& clause(std::size_t k) const { return clauses_.at(k); }

  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;

 private:
  int n_;
  std::vector<Clause> clauses_;
};

/// Truth values for x_1..x_n.
struct Assignment {
  std::vector<std::uint8_t> bits;

  /// Assignment encoded in the low n bits of `index`, x_1 in the most
  /// significant position (the same order as basis labels e_i).
  static Assignment from_index(std::uint64_t index, int n) {
    Assignment a;
    a.bits.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) a.bits[k - 1] = static_cast<std::uint8_t>((index >> (n - k)) & 1u);
    return a;
  }

  std::uint64_t to_index() const noexcept {
    std::uint64_t index = 0;
    for (auto b : bits) index = (index << 1) | (b & 1u);
    return index;
  }
};

inline bool evaluate(const CnfInstance& instance, const Assignment& a) {
  if (a.bits.size() != static_cast<std::size_t>(instance.num_variables()))
    throw DomainError("assignment length does not match variable count");
  for (const auto& clause : instance.clauses()) {
    bool satisfied = false;
    for (const auto& lit : clause) {
      const bool value = a.bits[lit.variable - 1] != 0;
      if (value != lit.negated) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

/// Clause tests compiled to masks over an n-bit assignment index. A clause
/// holds iff (index & positive) != 0 or (~index & negative) != 0.
class ClauseMasks {
 public:
  explicit ClauseMasks(const CnfInstance& instance) : n_(instance.num_variables()) {
    if (n_ > 63) throw CapacityError("mask evaluation supports at most 63 variables");
    masks_.reserve(instance.num_clauses());
    for (const auto& clause : instance.clauses()) {
      std::uint64_t pos = 0, neg = 0;
      for (const auto& lit : clause) {
        const std::uint64_t bit = std::uint64_t{1} << (n_ - lit.variable);
        (lit.negated ? neg : pos) |= bit;
      }
      masks_.emplace_back(pos, neg);
    }
  }

  bool satisfied(std::uint64_t index) const noexcept {
    for (const auto& [pos, neg] : masks_)
      if ((index & pos) == 0 && (~index & neg) == 0) return false;
    return true;
  }

 private:
  int n_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> masks_;
};

struct OracleOptions {
  int max_variables = 24;
  unsigned workers = 0;  // 0: hardware concurrency
};

/// Number r of satisfying assignments, by exhaustive enumeration.
inline std::uint64_t count_satisfying(const CnfInstance& instance, const OracleOptions& options = {}) {
  const int n = instance.num_variables();
  if (n > options.max_variables) {
    throw CapacityError("brute-force count refused: n=" + std::to_string(n) + " exceeds limit " +
                        std::to_string(options.max_variables));
  }
  const ClauseMasks masks(instance);
  const std::uint64_t total = std::uint64_t{1} << n;
  const unsigned workers = detail::resolve_workers(options.workers);
  std::vector<std::uint64_t> partial(workers, 0);
  // Chunk k of the range always lands in partial[k]; integer sums are order-free.
  const std::uint64_t chunk = (total + workers - 1) / workers;
  detail::parallel_for(workers, workers, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t w = lo; w < hi; ++w) {
      const std::uint64_t begin = std::min(total, w * chunk);
      const std::uint64_t end = std::min(total, begin + chunk);
      std::uint64_t count = 0;
      for (std::uint64_t i = begin; i < end; ++i) count += masks.satisfied(i) ? 1 : 0;
      partial[w] = count;
    }
  }, 1);
  std::uint64_t r = 0;
  for (auto c : partial) r += c;
  return r;
}

/// Parses DIMACS CNF. Comment lines start with `c`; a `%` line ends input.
inline CnfInstance parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  long declared_n = -1, declared_m = -1;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const char lead = line[first];
    if (lead == 'c') continue;
    if (lead == '%') break;
    if (lead == 'p') {
      if (header_line != 0) throw ParseError(line_no, "duplicate problem line");
      std::istringstream hs(line.substr(first));
      std::string p, fmt, extra;
      if (!(hs >> p >> fmt >> declared_n >> declared_m) || p != "p" || fmt != "cnf" || (hs >> extra)) {
        throw ParseError(line_no, "malformed header, expected 'p cnf <n> <m>'");
      }
      if (declared_n < 1 || declared_m < 1) {
        throw ParseError(line_no, "header requires n >= 1 and m >= 1");
      }
      header_line = line_no;
      continue;
    }
    if (header_line == 0) throw ParseError(line_no, "clause data before 'p cnf' header");

    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      char* end = nullptr;
      const long value = std::strtol(token.c_str(), &end, 10);
      if (end == token.c_str() || *end != '\0') {
        throw ParseError(line_no, "unexpected token '" + token + "'");
      }
      if (value == 0) {
        if (pending.empty()) throw ParseError(line_no, "empty clause");
        if (static_cast<long>(clauses.size()) >= declared_m) {
          throw ParseError(line_no, "more clauses than the declared m=" + std::to_string(declared_m));
        }
        try {
          clauses.emplace_back(std::move(pending));
        } catch (const DomainError& e) {
          throw ParseError(line_no, e.what());
        }
        pending.clear();
        continue;
      }
      if (std::labs(value) > declared_n) {
        throw ParseError(line_no, "variable " + std::to_string(std::labs(value)) + " exceeds n=" +
                                      std::to_string(declared_n));
      }
      if (pending.empty()) pending_line = line_no;
      pending.push_back(Literal::from_dimacs(static_cast<int>(value)));
    }
  }
  if (header_line == 0) throw ParseError(line_no, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(pending_line, "clause not terminated by 0");
  if (static_cast<long>(clauses.size()) != declared_m) {
    throw ParseError(line_no, "clause count mismatch: header declares " + std::to_string(declared_m) +
                                  ", found " + std::to_string(clauses.size()));
  }
  return CnfInstance(static_cast<int>(declared_n), std::move(clauses));
}

inline CnfInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

inline std::string render_dimacs(const CnfInstance& instance) {
  std::ostringstream out;
  out << "p cnf " << instance.num_variables() << ' ' << instance.num_clauses() << '\n';
  for (const auto& clause : instance.clauses()) {
    for (const auto& lit : clause) out << lit.to_dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace qcsat
