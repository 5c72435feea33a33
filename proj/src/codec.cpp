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

#include "qfres/codec.hpp"

#include "qfres/errors.hpp"

#include <algorithm>
#include <cmath>

namespace qfres {

EncodedSignal encode(const Signal &signal, int cap) {
    const auto layout = signal.layout(cap);
    const double intensity = signal.intensity();
    if (!(intensity > 0.0)) {
        throw EncodingError("cannot encode a signal with zero intensity");
    }
    std::vector<Amplitude> amplitudes(signal.size());
    std::transform(signal.values().begin(), signal.values().end(),
                   amplitudes.begin(),
                   [intensity](double v) { return std::sqrt(v / intensity); });
    return {PureState::from_amplitudes(layout, std::move(amplitudes)),
            intensity,
            {signal.rates().begin(), signal.rates().end()}};
}

Signal decode_exact(const Distribution &dist, double intensity,
                    const std::optional<RegisterLayout> &expected,
                    std::vector<double> rates) {
    if (expected && !(*expected == dist.layout())) {
        throw ArgumentError("distribution layout does not match the expected "
                            "signal shape");
    }
    std::vector<double> values(dist.size());
    std::transform(dist.probabilities().begin(), dist.probabilities().end(),
                   values.begin(), [intensity](double p) { return intensity * p; });
    return Signal(dist.layout().dims(), std::move(values), std::move(rates));
}

Reconstruction reconstruct_from_shots(const ShotHistogram &hist,
                                      double intensity,
                                      std::optional<int> levels,
                                      std::vector<double> rates) {
    if (hist.shots == 0) {
        throw ArgumentError("cannot reconstruct from zero shots");
    }
    if (levels && *levels < 2) {
        throw ArgumentError("bit depth needs at least two levels");
    }
    const auto f = hist.frequencies();
    const double m = static_cast<double>(hist.shots);
    std::vector<double> values(f.size());
    std::vector<double> half_widths(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        double estimate = intensity * f[i];
        if (levels) {
            estimate = std::clamp(std::round(estimate), 0.0,
                                  static_cast<double>(*levels - 1));
        }
        values[i] = estimate;
        half_widths[i] = 2.0 * intensity * std::sqrt(f[i] * (1.0 - f[i]) / m);
    }
    return {Signal(hist.layout.dims(), std::move(values), std::move(rates),
                   levels),
            std::move(half_widths)};
}

} // namespace qfres
