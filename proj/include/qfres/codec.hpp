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
 * Amplitude encoding of signals and reconstruction from measurements.
 *
 * A signal S with intensity I = Σ S_e is stored as the state with
 * amplitudes sqrt(S_e / I). The intensity is returned to the caller, which
 * keeps it classically; decoding multiplies measured probabilities by the
 * output intensity that the resampler reports.
 */
#pragma once

#include "qfres/histogram.hpp"
#include "qfres/signal.hpp"
#include "qfres/state.hpp"

#include <optional>
#include <vector>

namespace qfres {

struct EncodedSignal {
    PureState state;
    double intensity;
    std::vector<double> rates;
};

/// Throws EncodingError for an all-zero signal.
EncodedSignal encode(const Signal &signal, int cap = kDefaultQubitCap);

/// value_m = intensity * p_m. When `expected` is given the distribution must
/// have that layout.
Signal decode_exact(const Distribution &dist, double intensity,
                    const std::optional<RegisterLayout> &expected = {},
                    std::vector<double> rates = {});

struct Reconstruction {
    Signal signal;
    /// 2 * intensity * sqrt(f (1 - f) / M) per sample.
    std::vector<double> half_widths;
};

/// Point estimates intensity * f_m, rounded and clipped to [0, L-1] when
/// `levels` is given, with the normal-approximation interval half-widths.
Reconstruction reconstruct_from_shots(const ShotHistogram &hist,
                                      double intensity,
                                      std::optional<int> levels = std::nullopt,
                                      std::vector<double> rates = {});

} // namespace qfres
