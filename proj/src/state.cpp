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

#include "qfres/state.hpp"

#include "qfres/errors.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace qfres {

PureState PureState::zero(const RegisterLayout &layout) {
    return basis(layout, 0);
}

PureState PureState::basis(const RegisterLayout &layout, BasisIndex index) {
    if (index >= layout.size()) {
        throw ArgumentError("basis index " + std::to_string(index) +
                            " is out of range");
    }
    std::vector<Amplitude> amplitudes(layout.size());
    amplitudes[index] = 1.0;
    return PureState(layout, std::move(amplitudes));
}

PureState PureState::from_amplitudes(const RegisterLayout &layout,
                                     std::vector<Amplitude> amplitudes) {
    if (amplitudes.size() != layout.size()) {
        throw ArgumentError("expected " + std::to_string(layout.size()) +
                            " amplitudes, got " +
                            std::to_string(amplitudes.size()));
    }
    PureState state(layout, std::move(amplitudes));
    if (std::abs(state.norm_squared() - 1.0) > kUnitaryTol) {
        throw ArgumentError("amplitudes are not normalised");
    }
    return state;
}

double PureState::norm_squared() const {
    return std::accumulate(
        amplitudes_.begin(), amplitudes_.end(), 0.0,
        [](double acc, const Amplitude &a) { return acc + std::norm(a); });
}

MixedState MixedState::from_pure(const PureState &state, int cap) {
    const auto amps = state.amplitudes();
    const std::size_t dim = amps.size();
    std::vector<Amplitude> density(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            density[i * dim + j] = amps[i] * std::conj(amps[j]);
        }
    }
    return from_matrix(state.layout(), std::move(density), cap);
}

MixedState MixedState::from_matrix(const RegisterLayout &layout,
                                   std::vector<Amplitude> density, int cap) {
    if (2 * layout.total_qubits() > cap) {
        throw CapacityError("density matrix on " +
                            std::to_string(layout.total_qubits()) +
                            " qubits exceeds the cap of " + std::to_string(cap) +
                            " vector qubits");
    }
    const auto dim = layout.size();
    if (density.size() != dim * dim) {
        throw ArgumentError("density matrix has the wrong size");
    }
    MixedState state(layout, std::move(density));
    if (std::abs(state.trace() - 1.0) > kUnitaryTol) {
        throw ArgumentError("density matrix does not have unit trace");
    }
    if (state.hermiticity_error() > kUnitaryTol) {
        throw ArgumentError("density matrix is not Hermitian");
    }
    return state;
}

Amplitude MixedState::trace() const {
    Amplitude t = 0.0;
    const auto dim = dimension();
    for (std::uint64_t i = 0; i < dim; ++i) {
        t += density_[i * dim + i];
    }
    return t;
}

double MixedState::hermiticity_error() const {
    double worst = 0.0;
    const auto dim = dimension();
    for (std::uint64_t i = 0; i < dim; ++i) {
        for (std::uint64_t j = i; j < dim; ++j) {
            worst = std::max(worst, std::abs(density_[i * dim + j] -
                                             std::conj(density_[j * dim + i])));
        }
    }
    return worst;
}

Distribution Distribution::from_probabilities(const RegisterLayout &layout,
                                              std::vector<double> probabilities) {
    if (probabilities.size() != layout.size()) {
        throw ArgumentError("expected " + std::to_string(layout.size()) +
                            " probabilities, got " +
                            std::to_string(probabilities.size()));
    }
    for (double p : probabilities) {
        if (!(p >= 0.0)) {
            throw ArgumentError("negative or NaN probability");
        }
    }
    Distribution dist(layout, std::move(probabilities));
    if (std::abs(dist.sum() - 1.0) > kDistributionTol) {
        throw ArgumentError("probabilities do not sum to one");
    }
    return dist;
}

double Distribution::sum() const {
    return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
}

} // namespace qfres
