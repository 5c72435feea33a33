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

#include "kernels_internal.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace qfres::kernels {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void hadamard(std::span<Amplitude> v, int q) {
    const std::size_t half = v.size() / 2;
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t i0 = insert_zero_bit(i, q);
        const std::size_t i1 = i0 | bit;
        const Amplitude a = v[i0];
        const Amplitude b = v[i1];
        v[i0] = (a + b) * kInvSqrt2;
        v[i1] = (a - b) * kInvSqrt2;
    }
}

void controlled_phase(std::span<Amplitude> v, int a, int b, Amplitude phase) {
    const auto [lo, hi] = std::minmax(a, b);
    const std::size_t quarter = v.size() / 4;
    const std::size_t mask = (std::size_t{1} << lo) | (std::size_t{1} << hi);
    for (std::size_t i = 0; i < quarter; ++i) {
        v[insert_zero_bits(i, lo, hi) | mask] *= phase;
    }
}

void swap(std::span<Amplitude> v, int a, int b) {
    const auto [lo, hi] = std::minmax(a, b);
    const std::size_t quarter = v.size() / 4;
    const std::size_t lo_bit = std::size_t{1} << lo;
    const std::size_t hi_bit = std::size_t{1} << hi;
    for (std::size_t i = 0; i < quarter; ++i) {
        const std::size_t base = insert_zero_bits(i, lo, hi);
        std::swap(v[base | lo_bit], v[base | hi_bit]);
    }
}

void cnot(std::span<Amplitude> v, int control, int target) {
    const auto [lo, hi] = std::minmax(control, target);
    const std::size_t quarter = v.size() / 4;
    const std::size_t c_bit = std::size_t{1} << control;
    const std::size_t t_bit = std::size_t{1} << target;
    for (std::size_t i = 0; i < quarter; ++i) {
        const std::size_t base = insert_zero_bits(i, lo, hi) | c_bit;
        std::swap(v[base], v[base | t_bit]);
    }
}

void accumulate_norm(std::span<const Amplitude> v, std::span<double> out) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] += std::norm(v[i]);
    }
}

constexpr KernelTable kScalar{"scalar",        &hadamard, &controlled_phase,
                              &swap,           &cnot,     &accumulate_norm};

} // namespace

const KernelTable &scalar() { return kScalar; }

} // namespace qfres::kernels
