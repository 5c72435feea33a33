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

#include "qfres/signal.hpp"

#include "qfres/errors.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace qfres {

Signal::Signal(int dims, std::vector<double> values, std::vector<double> rates,
               std::optional<int> levels)
    : dims_(dims), values_(std::move(values)), rates_(std::move(rates)),
      levels_(levels) {
    if (dims_ < 1) {
        throw ArgumentError("signal needs at least one axis");
    }
    const std::size_t n = values_.size();
    if (!std::has_single_bit(n)) {
        throw ArgumentError("signal of " + std::to_string(n) +
                            " samples is not a power-of-two hyper-cube");
    }
    const int total_bits = std::countr_zero(n);
    if (total_bits % dims_ != 0) {
        throw ArgumentError(std::to_string(n) + " samples cannot form a " +
                            std::to_string(dims_) +
                            "-dimensional square array with power-of-two "
                            "extent");
    }
    n0_ = total_bits / dims_;
    if (!rates_.empty() && rates_.size() != static_cast<std::size_t>(dims_)) {
        throw ArgumentError("expected one sampling rate per axis");
    }
    if (levels_ && *levels_ < 2) {
        throw ArgumentError("bit depth needs at least two levels");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw ArgumentError("signal contains a non-finite sample");
        }
        if (v < 0.0) {
            throw EncodingError(
                "signal contains a negative sample; shift it to be "
                "non-negative before encoding");
        }
        if (levels_ && (v != std::floor(v) || v > *levels_ - 1)) {
            throw ArgumentError("sample " + std::to_string(v) +
                                " is not a level in [0, L-1]");
        }
    }
}

double Signal::intensity() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0);
}

} // namespace qfres
