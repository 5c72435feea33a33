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
 * Value types for simulated register states.
 *
 * A MixedState on n qubits stores its density matrix row-major; engine
 * kernels treat it as a 2n-qubit vector whose high n bits index the row.
 * Because of that, mixed states obey 2n <= cap.
 */
#pragma once

#include "qfres/kernels.hpp"
#include "qfres/register.hpp"

#include <complex>
#include <span>
#include <vector>

namespace qfres {

using Amplitude = std::complex<double>;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kDistributionTol = 1e-9;

class PureState {
  public:
    /// |0...0>.
    static PureState zero(const RegisterLayout &layout);
    static PureState basis(const RegisterLayout &layout, BasisIndex index);
    /// Checks length 2^n and unit norm within kUnitaryTol.
    static PureState from_amplitudes(const RegisterLayout &layout,
                                     std::vector<Amplitude> amplitudes);

    [[nodiscard]] const RegisterLayout &layout() const noexcept {
        return layout_;
    }
    [[nodiscard]] int num_qubits() const noexcept {
        return layout_.total_qubits();
    }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amplitudes_;
    }
    /// In-place access for unitary updates.
    [[nodiscard]] std::span<Amplitude> data() noexcept { return amplitudes_; }

    [[nodiscard]] double norm_squared() const;

  private:
    PureState(RegisterLayout layout, std::vector<Amplitude> amplitudes)
        : layout_(layout), amplitudes_(std::move(amplitudes)) {}

    RegisterLayout layout_;
    std::vector<Amplitude> amplitudes_;
};

class MixedState {
  public:
    static MixedState from_pure(const PureState &state,
                                int cap = kDefaultQubitCap);
    /// Checks shape, unit trace and Hermiticity within kUnitaryTol.
    static MixedState from_matrix(const RegisterLayout &layout,
                                  std::vector<Amplitude> density,
                                  int cap = kDefaultQubitCap);

    [[nodiscard]] const RegisterLayout &layout() const noexcept {
        return layout_;
    }
    [[nodiscard]] int num_qubits() const noexcept {
        return layout_.total_qubits();
    }
    [[nodiscard]] std::uint64_t dimension() const noexcept {
        return layout_.size();
    }
    [[nodiscard]] Amplitude at(std::uint64_t row, std::uint64_t col) const {
        return density_[row * dimension() + col];
    }
    [[nodiscard]] std::span<const Amplitude> density() const noexcept {
        return density_;
    }
    [[nodiscard]] std::span<Amplitude> data() noexcept { return density_; }

    [[nodiscard]] Amplitude trace() const;
    /// max |rho_ij - conj(rho_ji)|
    [[nodiscard]] double hermiticity_error() const;

  private:
    MixedState(RegisterLayout layout, std::vector<Amplitude> density)
        : layout_(layout), density_(std::move(density)) {}

    RegisterLayout layout_;
    std::vector<Amplitude> density_;
};

class Distribution {
  public:
    /// Checks entries >= 0 and sum = 1 within kDistributionTol.
    static Distribution from_probabilities(const RegisterLayout &layout,
                                           std::vector<double> probabilities);

    [[nodiscard]] const RegisterLayout &layout() const noexcept {
        return layout_;
    }
    [[nodiscard]] std::span<const double> probabilities() const noexcept {
        return probabilities_;
    }
    [[nodiscard]] double operator[](std::size_t i) const {
        return probabilities_[i];
    }
    [[nodiscard]] std::size_t size() const noexcept {
        return probabilities_.size();
    }
    [[nodiscard]] double sum() const;

  private:
    Distribution(RegisterLayout layout, std::vector<double> probabilities)
        : layout_(layout), probabilities_(std::move(probabilities)) {}

    RegisterLayout layout_;
    std::vector<double> probabilities_;
};

} // namespace qfres
