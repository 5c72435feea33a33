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

/**
 * @file
 * Classical reference resamplers. These work directly on sample values and
 * share no code with the simulated circuits they are compared against.
 */
#pragma once

#include "qfres/signal.hpp"

namespace qfres::oracles {

/// Mean over non-overlapping hyper-cubic blocks of side 2^ntilde.
/// Requires 0 < ntilde < n0.
Signal block_average(const Signal &signal, int ntilde);

/// Repeats every sample 2^ntilde consecutive times along each axis.
Signal nn_interpolate(const Signal &signal, int ntilde);

/// (S * w)[stride * m] with the unnormalised rectangular kernel of ones.
/// Only stride == kernel_side (a power of two dividing N0) is supported.
Signal strided_rect_convolution(const Signal &signal, std::size_t kernel_side,
                                std::size_t stride);

} // namespace qfres::oracles
