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
 * Register layouts and little-endian index arithmetic.
 *
 * A d-dimensional signal with N0 = 2^n0 samples per axis lives in a register
 * of d subregisters of n0 qubits. Subregister s holds the coordinate along
 * axis s and occupies global qubit positions [s*n0, (s+1)*n0); subregister
 * d-1 holds the most significant qubits. Inside a subregister, position q
 * carries weight 2^q of the axis coordinate.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qfres {

/// Default upper bound on the number of simulated qubits.
inline constexpr int kDefaultQubitCap = 24;

using BasisIndex = std::uint64_t;

/// One coordinate per axis; role-specialised as input (e), frequency (k),
/// output (m) or upsampled (w) indices by the caller.
using IndexTuple = std::vector<std::uint64_t>;

struct QubitId {
    int subregister = 0; ///< s in [0, d)
    int position = 0;    ///< q in [0, n0)
};

class RegisterLayout;

/// Throws ArgumentError for nonpositive inputs, CapacityError when d*n0 > cap.
RegisterLayout make_layout(int d, int n0, int cap = kDefaultQubitCap);

class RegisterLayout {
  public:
    RegisterLayout() = default;

    [[nodiscard]] int dims() const noexcept { return dims_; }
    [[nodiscard]] int qubits_per_axis() const noexcept { return n0_; }
    [[nodiscard]] int total_qubits() const noexcept { return dims_ * n0_; }
    [[nodiscard]] std::uint64_t samples_per_axis() const noexcept {
        return std::uint64_t{1} << n0_;
    }
    [[nodiscard]] std::uint64_t size() const noexcept {
        return std::uint64_t{1} << total_qubits();
    }

    friend bool operator==(const RegisterLayout &,
                           const RegisterLayout &) = default;

  private:
    friend RegisterLayout make_layout(int d, int n0, int cap);
    RegisterLayout(int d, int n0) : dims_(d), n0_(n0) {}

    int dims_ = 1;
    int n0_ = 1;
};

/// Σ_i e_i N0^i.
BasisIndex tuple_to_index(const RegisterLayout &layout, const IndexTuple &e);
IndexTuple index_to_tuple(const RegisterLayout &layout, BasisIndex index);

/// s*n0 + q.
int global_position(const RegisterLayout &layout, QubitId qid);

} // namespace qfres
