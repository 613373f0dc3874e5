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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcsat/error.hpp"

namespace qcsat {

using Amplitude = std::complex<double>;

/// 2^N amplitudes over N qubits. Qubit 1 is the most significant bit of the
/// array index, so wire w of an N-qubit register maps to bit (N - w).
class StateVector {
 public:
  static constexpr int kMaxWidth = 40;

  explicit StateVector(int width) : width_(checked(width)), amps_(std::size_t{1} << width_) {}

  StateVector(int width, std::vector<Amplitude> amps) : width_(checked(width)), amps_(std::move(amps)) {
    if (amps_.size() != (std::size_t{1} << width_))
      throw DomainError("amplitude count does not match 2^width");
  }

  static StateVector basis(int width, std::uint64_t index) {
    StateVector s(width);
    s.amps_.at(index) = 1.0;
    return s;
  }

  int width() const noexcept { return width_; }
  std::uint64_t size() const noexcept { return amps_.size(); }

  Amplitude& operator[](std::uint64_t i) { return amps_[i]; }
  const Amplitude& operator[](std::uint64_t i) const { return amps_[i]; }

  std::span<Amplitude> amplitudes() noexcept { return amps_; }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }

  /// Bit mask of 1-based wire `w`.
  std::uint64_t wire_mask(int w) const {
    if (w < 1 || w > width_) throw DomainError("wire " + std::to_string(w) + " outside register");
    return std::uint64_t{1} << (width_ - w);
  }

  double norm_squared() const noexcept {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
  }

 private:
  static int checked(int width) {
    if (width < 1 || width > kMaxWidth) throw DomainError("state width must be in [1, 40]");
    return width;
  }

  int width_;
  std::vector<Amplitude> amps_;
};

}  // namespace qcsat
