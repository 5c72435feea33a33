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

#include "qfres/resampler.hpp"

#include "qfres/engine.hpp"
#include "qfres/errors.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace qfres {
namespace {

void check_down(const RegisterLayout &layout, const ResampleParams &params) {
    if (params.ntilde <= 0 || params.ntilde >= layout.qubits_per_axis()) {
        throw ArgumentError("downsampling needs 0 < ntilde < n0 (ntilde=" +
                            std::to_string(params.ntilde) + ", n0=" +
                            std::to_string(layout.qubits_per_axis()) + ")");
    }
}

std::vector<double> scale_rates(const std::vector<double> &rates,
                                double factor) {
    std::vector<double> out = rates;
    for (auto &r : out) {
        r *= factor;
    }
    return out;
}

// H and the per-axis QFT on the encoding register, in place.
PureState to_frequency_domain(PureState state) {
    return md_qft(hadamard_all(std::move(state)));
}

void hadamard_layer(detail::GateSink &sink, int n) {
    for (int q = 0; q < n; ++q) {
        sink.hadamard(q);
    }
}

} // namespace

QubitRatio qubit_ratio(int input_qubits, int output_qubits) {
    const auto g = std::gcd(input_qubits, output_qubits);
    return {input_qubits / g, output_qubits / g};
}

MixedState downsample_state(const PureState &state,
                            const ResampleParams &params) {
    check_down(state.layout(), params);
    auto rho = discard_top(to_frequency_domain(state), params.ntilde, params.cap);
    return hadamard_all(md_qft(std::move(rho), /*inverse=*/true));
}

ResampleResult downsample(const EncodedSignal &input,
                          const ResampleParams &params, DownsamplePath path) {
    const auto &layout = input.state.layout();
    check_down(layout, params);
    const int d = layout.dims();
    const int n0 = layout.qubits_per_axis();
    const int n1 = n0 - params.ntilde;
    const auto out_layout = make_layout(d, n1, params.cap);

    std::vector<double> probs;
    if (path == DownsamplePath::DensityMatrix) {
        auto dist = probabilities(downsample_state(input.state, params));
        probs.assign(dist.probabilities().begin(), dist.probabilities().end());
    } else {
        // Every traced-out basis value t leaves an unnormalised branch on the
        // kept qubits; the remaining gates act on kept qubits only, so the
        // output probabilities are the sum of the branch probabilities.
        const auto freq = to_frequency_domain(input.state);
        const auto amps = freq.amplitudes();
        const auto split = detail::split_top_qubits(d, n0, params.ntilde);
        const auto &k = kernels::active();
        probs.assign(split.kept.size(), 0.0);
        std::vector<Amplitude> branch(split.kept.size());
        for (const BasisIndex offset : split.traced) {
            for (std::size_t i = 0; i < branch.size(); ++i) {
                branch[i] = amps[split.kept[i] | offset];
            }
            detail::PureSink sink(branch);
            detail::emit_md_qft(sink, d, n1, /*inverse=*/true);
            hadamard_layer(sink, d * n1);
            k.accumulate_norm(branch, probs);
        }
    }

    const double block = std::ldexp(1.0, d * params.ntilde);
    return {Distribution::from_probabilities(out_layout, std::move(probs)),
            out_layout,
            input.intensity / block,
            qubit_ratio(d * n0, d * n1),
            scale_rates(input.rates,
                        1.0 / static_cast<double>(params.factor()))};
}

UpsampleOutput upsample(const EncodedSignal &input,
                        const ResampleParams &params, UpsampleVariant variant) {
    const auto &layout = input.state.layout();
    if (params.ntilde < 1) {
        throw ArgumentError("upsampling needs ntilde >= 1");
    }
    const int d = layout.dims();
    const int n0 = layout.qubits_per_axis();
    const int n1 = n0 + params.ntilde;
    const auto out_layout = make_layout(d, n1, params.cap);

    // Encoding register in the low d*n0 bits, padding register (all |0>)
    // above it until the SWAP network moves it into place.
    std::vector<Amplitude> amps(out_layout.size());
    std::copy(input.state.amplitudes().begin(), input.state.amplitudes().end(),
              amps.begin());
    detail::PureSink sink(amps);
    if (variant == UpsampleVariant::SwapPadding) {
        hadamard_layer(sink, d * n1);
        detail::emit_md_qft(sink, d, n0, false);
        detail::emit_padding_moves(sink, d, n0, params.ntilde);
        detail::emit_md_qft(sink, d, n1, true);
        hadamard_layer(sink, d * n1);
    } else {
        detail::emit_md_qft(sink, d, n0, false);
        detail::emit_padding_moves(sink, d, n0, params.ntilde);
        for (int s = 0; s < d; ++s) {
            const int msb = s * n1 + n0 - 1;
            for (int p = 0; p < params.ntilde; ++p) {
                sink.cnot(msb, s * n1 + n0 + p);
            }
        }
        detail::emit_md_qft(sink, d, n1, true);
    }

    auto state = PureState::from_amplitudes(out_layout, std::move(amps));
    auto dist = probabilities(state);
    const double block = std::ldexp(1.0, d * params.ntilde);
    ResampleResult result{std::move(dist), out_layout, input.intensity * block,
                          qubit_ratio(d * n0, d * n1),
                          scale_rates(input.rates,
                                      static_cast<double>(params.factor()))};
    return {std::move(state), std::move(result)};
}

ResampleResult roundtrip_up_down(const EncodedSignal &input,
                                 const ResampleParams &params) {
    auto up = upsample(input, params);
    const EncodedSignal widened{std::move(up.state),
                                up.result.output_intensity,
                                up.result.output_rates};
    return downsample(widened, params);
}

Signal to_signal(const ResampleResult &result) {
    return decode_exact(result.distribution, result.output_intensity,
                        result.output_layout, result.output_rates);
}

Signal patch_resample(const Signal &signal, std::size_t patch_side,
                      Direction direction, const ResampleParams &params) {
    const std::size_t extent = signal.extent();
    if (patch_side < 2 || !std::has_single_bit(patch_side) ||
        extent % patch_side != 0) {
        throw ArgumentError("patch side " + std::to_string(patch_side) +
                            " must be a power of two >= 2 dividing N0 = " +
                            std::to_string(extent));
    }
    const int patch_bits = std::countr_zero(patch_side);
    if (direction == Direction::Down &&
        (params.ntilde <= 0 || params.ntilde >= patch_bits)) {
        throw ArgumentError("downsampling patches of side " +
                            std::to_string(patch_side) +
                            " needs 0 < ntilde < " + std::to_string(patch_bits));
    }
    if (direction == Direction::Up && params.ntilde < 1) {
        throw ArgumentError("upsampling needs ntilde >= 1");
    }

    const std::size_t d = signal.dims();
    const std::size_t patches_per_axis = extent / patch_side;
    const std::size_t out_side = direction == Direction::Down
                                     ? patch_side >> params.ntilde
                                     : patch_side << params.ntilde;
    const std::size_t out_extent = patches_per_axis * out_side;

    // Multi-index helpers, axis 0 fastest.
    const auto flat = [d](const std::vector<std::size_t> &c, std::size_t ext) {
        std::size_t off = 0;
        for (std::size_t i = d; i-- > 0;) {
            off = off * ext + c[i];
        }
        return off;
    };
    const auto advance = [](std::vector<std::size_t> &c, std::size_t ext) {
        for (auto &x : c) {
            if (++x < ext) {
                return true;
            }
            x = 0;
        }
        return false;
    };

    std::size_t out_size = 1;
    for (std::size_t i = 0; i < d; ++i) {
        out_size *= out_extent;
    }
    std::vector<double> out(out_size, 0.0);
    std::vector<std::size_t> patch(d, 0);
    std::vector<std::size_t> inner(d);
    std::vector<std::size_t> global(d);
    do {
        std::vector<double> values;
        std::fill(inner.begin(), inner.end(), 0);
        do {
            for (std::size_t i = 0; i < d; ++i) {
                global[i] = patch[i] * patch_side + inner[i];
            }
            values.push_back(signal[flat(global, extent)]);
        } while (advance(inner, patch_side));

        const Signal piece(static_cast<int>(d), std::move(values));
        std::vector<double> resampled;
        if (piece.intensity() > 0.0) {
            const auto encoded = encode(piece, params.cap);
            const auto result = direction == Direction::Down
                                    ? downsample(encoded, params)
                                    : upsample(encoded, params).result;
            const auto decoded = to_signal(result);
            resampled.assign(decoded.values().begin(), decoded.values().end());
        } else {
            std::size_t n = 1;
            for (std::size_t i = 0; i < d; ++i) {
                n *= out_side;
            }
            resampled.assign(n, 0.0);
        }

        std::size_t k = 0;
        std::fill(inner.begin(), inner.end(), 0);
        do {
            for (std::size_t i = 0; i < d; ++i) {
                global[i] = patch[i] * out_side + inner[i];
            }
            out[flat(global, out_extent)] = resampled[k++];
        } while (advance(inner, out_side));
    } while (advance(patch, patches_per_axis));

    const double factor = static_cast<double>(params.factor());
    std::vector<double> rates(signal.rates().begin(), signal.rates().end());
    for (auto &r : rates) {
        r = direction == Direction::Down ? r / factor : r * factor;
    }
    return Signal(static_cast<int>(d), std::move(out), std::move(rates));
}

} // namespace qfres
