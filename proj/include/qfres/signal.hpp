// Copyright 2026 The qfres Authors
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

#include "qfres/register.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qfres {

/// Hyper-cubic array of non-negative samples, stored in basis-index order
/// (axis 0 varies fastest; for images axis 1 is the row).
class Signal {
  public:
    /// `values.size()` must be N0^dims with N0 = 2^n0 (n0 = 0 is a single
    /// sample, which cannot be encoded). `rates` is empty or holds one
    /// sampling rate (Hz) per axis. When `levels` (L) is set every value must
    /// be an integer in [0, L-1].
    Signal(int dims, std::vector<double> values, std::vector<double> rates = {},
           std::optional<int> levels = std::nullopt);

    [[nodiscard]] int dims() const noexcept { return dims_; }
    [[nodiscard]] int qubits_per_axis() const noexcept { return n0_; }
    [[nodiscard]] std::size_t extent() const noexcept {
        return std::size_t{1} << n0_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept {
        return values_;
    }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] std::span<const double> rates() const noexcept {
        return rates_;
    }
    [[nodiscard]] std::optional<int> levels() const noexcept { return levels_; }

    /// Σ values
    [[nodiscard]] double intensity() const;

    [[nodiscard]] RegisterLayout layout(int cap = kDefaultQubitCap) const {
        return make_layout(dims_, n0_, cap);
    }

  private:
    int dims_;
    int n0_ = 0;
    std::vector<double> values_;
    std::vector<double> rates_;
    std::optional<int> levels_;
};

} // namespace qfres
