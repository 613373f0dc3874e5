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
#include <thread>
#include <vector>

namespace qcsat::detail {

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, count) into contiguous chunks, one per worker. Each index is
// visited by exactly one worker, so disjoint writes stay deterministic.
template <class Fn>
void parallel_for(std::uint64_t count, unsigned workers, Fn&& fn,
                  std::uint64_t grain = std::uint64_t{1} << 15) {
  workers = resolve_workers(workers);
  const std::uint64_t useful = std::max<std::uint64_t>(1, count / std::max<std::uint64_t>(1, grain));
  const auto n = static_cast<unsigned>(std::min<std::uint64_t>(workers, useful));
  if (n <= 1) {
    fn(std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(n - 1);
  const std::uint64_t chunk = (count + n - 1) / n;
  for (unsigned w = 1; w < n; ++w) {
    const std::uint64_t lo = std::min(count, w * chunk);
    const std::uint64_t hi = std::min(count, lo + chunk);
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  fn(std::uint64_t{0}, std::min(count, chunk));
  for (auto& t : pool) t.join();
}

// Sum of `term(i)` over [0, count) with a fixed chunk layout, so the result
// is bit-identical for every worker count.
template <class Term>
double deterministic_sum(std::uint64_t count, unsigned workers, Term&& term) {
  constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;
  const std::uint64_t chunks = (count + kChunk - 1) / kChunk;
  std::vector<double> partial(chunks, 0.0);
  parallel_for(chunks, workers, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t c = lo; c < hi; ++c) {
      const std::uint64_t begin = c * kChunk;
      const std::uint64_t end = std::min(count, begin + kChunk);
      double s = 0.0;
      for (std::uint64_t i = begin; i < end; ++i) s += term(i);
      partial[c] = s;
    }
  }, 4);
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace qcsat::detail
