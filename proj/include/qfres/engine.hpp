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
 * Dense statevector / density-operator simulation of the resampling circuits.
 *
 * Operations take states by value and return the updated state, so callers
 * can either keep the input (copy) or hand it over with std::move.
 *
 * The QFT on a subregister of N = 2^n0 samples has matrix elements
 * <k|F|e> = N^{-1/2} exp(+2*pi*i*k*e/N). It is applied as a Hadamard /
 * controlled-phase sweep followed by the qubit-reversal swaps, never as a
 * dense matrix.
 */
#pragma once

#include "qfres/register.hpp"
#include "qfres/state.hpp"

#include <span>
#include <vector>

namespace qfres {

PureState hadamard_all(PureState state);
MixedState hadamard_all(MixedState state);

/// One-dimensional QFT (or its inverse) on subregister `s`.
PureState qft(PureState state, int s, bool inverse = false);
MixedState qft(MixedState state, int s, bool inverse = false);

/// QFT on every subregister.
PureState md_qft(PureState state, bool inverse = false);
MixedState md_qft(MixedState state, bool inverse = false);

PureState apply_cnot(PureState state, QubitId control, QubitId target);
MixedState apply_cnot(MixedState state, QubitId control, QubitId target);

/// Partial trace over the `ntilde` most significant qubits of every
/// subregister. Requires 0 < ntilde < n0; the result has n0 - ntilde qubits
/// per axis.
MixedState discard_top(const PureState &state, int ntilde,
                       int cap = kDefaultQubitCap);
MixedState discard_top(const MixedState &state, int ntilde,
                       int cap = kDefaultQubitCap);

enum class PadState { Zero, Plus };

/// Inserts `ntilde` fresh qubits as the new most significant qubits of every
/// subregister (tensor product followed by the SWAP network that moves them
/// into place).
PureState append_padding(const PureState &state, int ntilde,
                         PadState pad = PadState::Zero,
                         int cap = kDefaultQubitCap);

Distribution probabilities(const PureState &state);
Distribution probabilities(const MixedState &state);

namespace detail {

/// Receives the gate stream of a circuit fragment. Qubit arguments are bit
/// positions of the underlying register.
class GateSink {
  public:
    virtual ~GateSink() = default;
    virtual void hadamard(int q) = 0;
    virtual void controlled_phase(int a, int b, Amplitude phase) = 0;
    virtual void swap(int a, int b) = 0;
    virtual void cnot(int control, int target) = 0;
};

/// Applies gates to a pure amplitude vector.
class PureSink final : public GateSink {
  public:
    explicit PureSink(std::span<Amplitude> v);
    void hadamard(int q) override;
    void controlled_phase(int a, int b, Amplitude phase) override;
    void swap(int a, int b) override;
    void cnot(int control, int target) override;

  private:
    std::span<Amplitude> v_;
    const kernels::KernelTable &k_;
};

/// Applies U rho U^dagger to a row-major density matrix on n qubits.
class MixedSink final : public GateSink {
  public:
    MixedSink(std::span<Amplitude> rho, int n);
    void hadamard(int q) override;
    void controlled_phase(int a, int b, Amplitude phase) override;
    void swap(int a, int b) override;
    void cnot(int control, int target) override;

  private:
    std::span<Amplitude> rho_;
    int n_;
    const kernels::KernelTable &k_;
};

/// QFT (or inverse) on qubits [base, base + width).
void emit_qft(GateSink &sink, int base, int width, bool inverse);

/// QFT on every subregister of a (d, n0) register.
void emit_md_qft(GateSink &sink, int d, int n0, bool inverse);

/// SWAP network taking a register laid out as E_0..E_{d-1} (n0 qubits each)
/// followed by P_0..P_{d-1} (ntilde qubits each) to U_0..U_{d-1}, where
/// U_i = E_i then P_i (P_i most significant).
void emit_padding_moves(GateSink &sink, int d, int n0, int ntilde);

/// Basis-index offsets for the kept qubits (q < n0 - ntilde) and the traced
/// qubits (q >= n0 - ntilde) of every subregister. Any index of the full
/// register equals kept[i] | traced[t] for a unique pair (i, t).
struct TraceSplit {
    std::vector<BasisIndex> kept;
    std::vector<BasisIndex> traced;
};
TraceSplit split_top_qubits(int d, int n0, int ntilde);

} // namespace detail

} // namespace qfres
