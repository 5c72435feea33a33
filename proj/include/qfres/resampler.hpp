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
 * Frequency-domain resampling circuits.
 *
 * Downsampling: H on every qubit, QFT per axis, trace out the ntilde most
 * significant qubits of every axis, inverse QFT per axis on what is left, H
 * on every remaining qubit.
 *
 * Upsampling: ntilde padding qubits per axis start in |0>, H on every qubit,
 * QFT per axis on the input qubits, SWAP the padding qubits in as the new most
 * significant qubits of each axis, inverse QFT per enlarged axis, H on every
 * qubit. The C-NOT variant drops both Hadamard layers and instead fans the
 * most significant input qubit of each axis out onto that axis' padding
 * qubits after they have been moved into place.
 *
 * Reported output intensities keep decoded values on the input scale:
 * I_in / 2^(d*ntilde) when downsampling (block means), I_in * 2^(d*ntilde)
 * when upsampling (replicated samples).
 */
#pragma once

#include "qfres/codec.hpp"
#include "qfres/signal.hpp"
#include "qfres/state.hpp"

#include <cstdint>
#include <vector>

namespace qfres {

enum class Direction { Down, Up };
enum class DownsamplePath { BranchSum, DensityMatrix };
enum class UpsampleVariant { SwapPadding, Cnot };

struct ResampleParams {
    int ntilde = 1;
    int cap = kDefaultQubitCap;

    /// 2^ntilde
    [[nodiscard]] std::uint64_t factor() const noexcept {
        return std::uint64_t{1} << ntilde;
    }
    /// n0 - ntilde or n0 + ntilde.
    [[nodiscard]] int output_qubits_per_axis(int n0, Direction dir) const noexcept {
        return dir == Direction::Down ? n0 - ntilde : n0 + ntilde;
    }
};

/// Reduced fraction input_qubits / output_qubits.
struct QubitRatio {
    std::int64_t numerator = 1;
    std::int64_t denominator = 1;

    [[nodiscard]] double value() const noexcept {
        return static_cast<double>(numerator) /
               static_cast<double>(denominator);
    }
    friend bool operator==(const QubitRatio &, const QubitRatio &) = default;
};

QubitRatio qubit_ratio(int input_qubits, int output_qubits);

struct ResampleResult {
    Distribution distribution;
    RegisterLayout output_layout;
    double output_intensity = 0.0;
    QubitRatio ratio;
    std::vector<double> output_rates;
};

ResampleResult downsample(const EncodedSignal &input,
                          const ResampleParams &params,
                          DownsamplePath path = DownsamplePath::BranchSum);

/// The reduced density operator produced by the downsampling circuit.
MixedState downsample_state(const PureState &state,
                            const ResampleParams &params);

struct UpsampleOutput {
    PureState state;
    ResampleResult result;
};

UpsampleOutput upsample(const EncodedSignal &input, const ResampleParams &params,
                        UpsampleVariant variant = UpsampleVariant::SwapPadding);

/// Upsample by ntilde, then downsample the (pure) result by ntilde.
ResampleResult roundtrip_up_down(const EncodedSignal &input,
                                 const ResampleParams &params);

/// Decoded output values with the output intensity and rates attached.
Signal to_signal(const ResampleResult &result);

/// Splits the signal into (N0/patch_side)^d hyper-cubic patches, encodes and
/// resamples each one on its own and stitches the decoded patches back
/// together in place. All-zero patches stay zero.
Signal patch_resample(const Signal &signal, std::size_t patch_side,
                      Direction direction, const ResampleParams &params);

} // namespace qfres
