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
 * Amplitude-vector kernels used by the simulation engine.
 *
 * Each kernel acts in place on a dense vector of 2^n complex amplitudes,
 * addressing qubits by bit position in the basis index. A scalar reference
 * table is always available; SIMD tables are compiled per target and chosen
 * once at runtime. Set QFRES_KERNELS=scalar to force the reference path.
 *
 * Kernels do not validate their arguments: vector length must be a power of
 * two (at least 4 for two-qubit kernels) and qubit positions must be distinct
 * and in range.
 */
#pragma once

#include <complex>
#include <span>

namespace qfres::kernels {

using Amplitude = std::complex<double>;

struct KernelTable {
    const char *name;
    /// H on qubit q.
    void (*hadamard)(std::span<Amplitude> v, int q);
    /// Multiplies amplitudes whose bits `a` and `b` are both set by `phase`.
    void (*controlled_phase)(std::span<Amplitude> v, int a, int b,
                             Amplitude phase);
    void (*swap)(std::span<Amplitude> v, int a, int b);
    void (*cnot)(std::span<Amplitude> v, int control, int target);
    /// out[i] += |v[i]|^2
    void (*accumulate_norm)(std::span<const Amplitude> v,
                            std::span<double> out);
};

const KernelTable &scalar();

/// Null when the AVX2 variant was not built or the CPU lacks AVX2.
const KernelTable *avx2();

/// The table selected for this process (first call decides).
const KernelTable &active();

} // namespace qfres::kernels
