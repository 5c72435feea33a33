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

#include "qfres/kernels.hpp"

#include <cstddef>

namespace qfres::kernels {

/// Spreads `i` so that bit `q` of the result is zero.
constexpr std::size_t insert_zero_bit(std::size_t i, int q) noexcept {
    const std::size_t low = i & ((std::size_t{1} << q) - 1);
    return ((i >> q) << (q + 1)) | low;
}

/// Requires lo < hi.
constexpr std::size_t insert_zero_bits(std::size_t i, int lo, int hi) noexcept {
    return insert_zero_bit(insert_zero_bit(i, lo), hi);
}

#if defined(QFRES_HAVE_AVX2)
const KernelTable &avx2_table();
#endif

} // namespace qfres::kernels
