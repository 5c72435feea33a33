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

#include "qfres/engine.hpp"

#include "qfres/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

namespace qfres {
namespace detail {

PureSink::PureSink(std::span<Amplitude> v)
    : v_(v), k_(kernels::active()) {}

void PureSink::hadamard(int q) { k_.hadamard(v_, q); }
void PureSink::controlled_phase(int a, int b, Amplitude phase) {
    k_.controlled_phase(v_, a, b, phase);
}
void PureSink::swap(int a, int b) { k_.swap(v_, a, b); }
void PureSink::cnot(int control, int target) { k_.cnot(v_, control, target); }

MixedSink::MixedSink(std::span<Amplitude> rho, int n)
    : rho_(rho), n_(n), k_(kernels::active()) {}

// Row qubit q sits at bit n + q of the flattened index, column qubit q at
// bit q. Rows get U, columns get conj(U).
void MixedSink::hadamard(int q) {
    k_.hadamard(rho_, n_ + q);
    k_.hadamard(rho_, q);
}
void MixedSink::controlled_phase(int a, int b, Amplitude phase) {
    k_.controlled_phase(rho_, n_ + a, n_ + b, phase);
    k_.controlled_phase(rho_, a, b, std::conj(phase));
}
void MixedSink::swap(int a, int b) {
    k_.swap(rho_, n_ + a, n_ + b);
    k_.swap(rho_, a, b);
}
void MixedSink::cnot(int control, int target) {
    k_.cnot(rho_, n_ + control, n_ + target);
    k_.cnot(rho_, control, target);
}

namespace {

Amplitude rotation(int k, bool inverse) {
    const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, k);
    return std::polar(1.0, inverse ? -angle : angle);
}

} // namespace

void emit_qft(GateSink &sink, int base, int width, bool inverse) {
    if (!inverse) {
        for (int j = width - 1; j >= 0; --j) {
            sink.hadamard(base + j);
            for (int k = j - 1; k >= 0; --k) {
                sink.controlled_phase(base + k, base + j,
                                      rotation(j - k + 1, false));
            }
        }
        for (int j = 0; j < width / 2; ++j) {
            sink.swap(base + j, base + width - 1 - j);
        }
        return;
    }
    for (int j = 0; j < width / 2; ++j) {
        sink.swap(base + j, base + width - 1 - j);
    }
    for (int j = 0; j < width; ++j) {
        for (int k = 0; k < j; ++k) {
            sink.controlled_phase(base + k, base + j, rotation(j - k + 1, true));
        }
        sink.hadamard(base + j);
    }
}

void emit_md_qft(GateSink &sink, int d, int n0, bool inverse) {
    for (int s = 0; s < d; ++s) {
        emit_qft(sink, s * n0, n0, inverse);
    }
}

void emit_padding_moves(GateSink &sink, int d, int n0, int ntilde) {
    const int n1 = n0 + ntilde;
    const int total = d * n1;
    // occupant[pos] is the destination of the qubit currently at pos.
    std::vector<int> occupant(total);
    for (int pos = 0; pos < total; ++pos) {
        if (pos < d * n0) {
            occupant[pos] = (pos / n0) * n1 + pos % n0;
        } else {
            const int rel = pos - d * n0;
            occupant[pos] = (rel / ntilde) * n1 + n0 + rel % ntilde;
        }
    }
    for (int target = 0; target < total; ++target) {
        const auto it = std::find(occupant.begin() + target, occupant.end(),
                                  target);
        const int from = static_cast<int>(it - occupant.begin());
        if (from != target) {
            sink.swap(target, from);
            std::swap(occupant[target], occupant[from]);
        }
    }
}

TraceSplit split_top_qubits(int d, int n0, int ntilde) {
    const int n1 = n0 - ntilde;
    std::vector<int> kept_pos;
    std::vector<int> traced_pos;
    for (int s = 0; s < d; ++s) {
        for (int q = 0; q < n0; ++q) {
            (q < n1 ? kept_pos : traced_pos).push_back(s * n0 + q);
        }
    }
    const auto deposit = [](std::uint64_t value, const std::vector<int> &pos) {
        BasisIndex out = 0;
        for (std::size_t b = 0; b < pos.size(); ++b) {
            out |= ((value >> b) & 1U) << pos[b];
        }
        return out;
    };
    TraceSplit split;
    split.kept.resize(std::size_t{1} << kept_pos.size());
    split.traced.resize(std::size_t{1} << traced_pos.size());
    for (std::size_t i = 0; i < split.kept.size(); ++i) {
        split.kept[i] = deposit(i, kept_pos);
    }
    for (std::size_t t = 0; t < split.traced.size(); ++t) {
        split.traced[t] = deposit(t, traced_pos);
    }
    return split;
}

} // namespace detail

namespace {

void check_subregister(const RegisterLayout &layout, int s) {
    if (s < 0 || s >= layout.dims()) {
        throw ArgumentError("subregister " + std::to_string(s) +
                            " is not in the layout");
    }
}

void check_discard(const RegisterLayout &layout, int ntilde) {
    if (ntilde <= 0 || ntilde >= layout.qubits_per_axis()) {
        throw ArgumentError("discarding " + std::to_string(ntilde) +
                            " of " + std::to_string(layout.qubits_per_axis()) +
                            " qubits per axis; need 0 < ntilde < n0");
    }
}

template <class State, class Body> State with_sink(State state, Body &&body) {
    if constexpr (std::is_same_v<State, PureState>) {
        detail::PureSink sink(state.data());
        body(sink);
    } else {
        detail::MixedSink sink(state.data(), state.num_qubits());
        body(sink);
    }
    return state;
}

template <class State> State hadamard_all_impl(State state) {
    const int n = state.num_qubits();
    return with_sink(std::move(state), [n](detail::GateSink &sink) {
        for (int q = 0; q < n; ++q) {
            sink.hadamard(q);
        }
    });
}

template <class State> State qft_impl(State state, int s, bool inverse) {
    const auto layout = state.layout();
    check_subregister(layout, s);
    const int n0 = layout.qubits_per_axis();
    return with_sink(std::move(state), [&](detail::GateSink &sink) {
        detail::emit_qft(sink, s * n0, n0, inverse);
    });
}

template <class State> State md_qft_impl(State state, bool inverse) {
    const auto layout = state.layout();
    return with_sink(std::move(state), [&](detail::GateSink &sink) {
        detail::emit_md_qft(sink, layout.dims(), layout.qubits_per_axis(),
                            inverse);
    });
}

template <class State>
State cnot_impl(State state, QubitId control, QubitId target) {
    const int c = global_position(state.layout(), control);
    const int t = global_position(state.layout(), target);
    if (c == t) {
        throw ArgumentError("CNOT control and target are the same qubit");
    }
    return with_sink(std::move(state),
                                  [&](detail::GateSink &sink) { sink.cnot(c, t); });
}

} // namespace

PureState hadamard_all(PureState state) {
    return hadamard_all_impl(std::move(state));
}
MixedState hadamard_all(MixedState state) {
    return hadamard_all_impl(std::move(state));
}

PureState qft(PureState state, int s, bool inverse) {
    return qft_impl(std::move(state), s, inverse);
}
MixedState qft(MixedState state, int s, bool inverse) {
    return qft_impl(std::move(state), s, inverse);
}

PureState md_qft(PureState state, bool inverse) {
    return md_qft_impl(std::move(state), inverse);
}
MixedState md_qft(MixedState state, bool inverse) {
    return md_qft_impl(std::move(state), inverse);
}

PureState apply_cnot(PureState state, QubitId control, QubitId target) {
    return cnot_impl(std::move(state), control, target);
}
MixedState apply_cnot(MixedState state, QubitId control, QubitId target) {
    return cnot_impl(std::move(state), control, target);
}

MixedState discard_top(const PureState &state, int ntilde, int cap) {
    const auto &layout = state.layout();
    check_discard(layout, ntilde);
    const auto out_layout =
        make_layout(layout.dims(), layout.qubits_per_axis() - ntilde, cap);
    const auto split = detail::split_top_qubits(
        layout.dims(), layout.qubits_per_axis(), ntilde);
    const std::size_t dim = split.kept.size();
    const auto amps = state.amplitudes();
    std::vector<Amplitude> density(dim * dim);
    std::vector<Amplitude> branch(dim);
    for (const BasisIndex offset : split.traced) {
        for (std::size_t i = 0; i < dim; ++i) {
            branch[i] = amps[split.kept[i] | offset];
        }
        for (std::size_t i = 0; i < dim; ++i) {
            if (branch[i] == Amplitude{}) {
                continue;
            }
            Amplitude *row = density.data() + i * dim;
            for (std::size_t j = 0; j < dim; ++j) {
                row[j] += branch[i] * std::conj(branch[j]);
            }
        }
    }
    return MixedState::from_matrix(out_layout, std::move(density), cap);
}

MixedState discard_top(const MixedState &state, int ntilde, int cap) {
    const auto &layout = state.layout();
    check_discard(layout, ntilde);
    const auto out_layout =
        make_layout(layout.dims(), layout.qubits_per_axis() - ntilde, cap);
    const auto split = detail::split_top_qubits(
        layout.dims(), layout.qubits_per_axis(), ntilde);
    const std::size_t dim = split.kept.size();
    std::vector<Amplitude> density(dim * dim);
    for (const BasisIndex offset : split.traced) {
        for (std::size_t i = 0; i < dim; ++i) {
            const BasisIndex row = split.kept[i] | offset;
            for (std::size_t j = 0; j < dim; ++j) {
                density[i * dim + j] += state.at(row, split.kept[j] | offset);
            }
        }
    }
    return MixedState::from_matrix(out_layout, std::move(density), cap);
}

PureState append_padding(const PureState &state, int ntilde, PadState pad,
                         int cap) {
    const auto &layout = state.layout();
    if (ntilde < 1) {
        throw ArgumentError("padding needs ntilde >= 1");
    }
    const auto out_layout =
        make_layout(layout.dims(), layout.qubits_per_axis() + ntilde, cap);
    const auto amps = state.amplitudes();
    const std::size_t pad_dim = std::size_t{1} << (layout.dims() * ntilde);
    std::vector<Amplitude> out(out_layout.size());
    // Padding register occupies the high bits until the SWAP network runs.
    if (pad == PadState::Zero) {
        std::copy(amps.begin(), amps.end(), out.begin());
    } else {
        const double scale = 1.0 / std::sqrt(static_cast<double>(pad_dim));
        for (std::size_t p = 0; p < pad_dim; ++p) {
            std::transform(amps.begin(), amps.end(),
                           out.begin() + p * amps.size(),
                           [scale](Amplitude a) { return a * scale; });
        }
    }
    detail::PureSink sink(out);
    detail::emit_padding_moves(sink, layout.dims(), layout.qubits_per_axis(),
                               ntilde);
    return PureState::from_amplitudes(out_layout, std::move(out));
}

Distribution probabilities(const PureState &state) {
    std::vector<double> p(state.amplitudes().size(), 0.0);
    kernels::active().accumulate_norm(state.amplitudes(), p);
    return Distribution::from_probabilities(state.layout(), std::move(p));
}

Distribution probabilities(const MixedState &state) {
    const auto dim = state.dimension();
    std::vector<double> p(dim);
    for (std::uint64_t i = 0; i < dim; ++i) {
        // Rounding can leave diagonal entries at -1e-17.
        p[i] = std::max(0.0, state.at(i, i).real());
    }
    return Distribution::from_probabilities(state.layout(), std::move(p));
}

} // namespace qfres
