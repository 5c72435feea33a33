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
 * The command layer behind the `qfres` executable. Each command validates
 * its configuration, runs the pipeline, writes its files and returns what it
 * wrote so callers (and tests) can inspect it without re-reading files.
 *
 * Every resampled output `<out>` is paired with `<out>.meta.json`.
 */
#pragma once

#include "qfres/analysis.hpp"
#include "qfres/codec.hpp"
#include "qfres/resampler.hpp"
#include "qfres/signal.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace qfres::cli {

enum class Mode { Exact, Shots };

struct RunConfig {
    std::filesystem::path input;
    std::filesystem::path output;
    int dims = 1;
    int ntilde = 1;
    Mode mode = Mode::Exact;
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;
    std::optional<std::size_t> patch;
    /// Bits per sample c; L = 2^c levels.
    std::optional<int> bit_depth;
    /// Shots mode only: sample in batches of `shots` until the mean MSE
    /// drops to this value.
    std::optional<double> mse_target;
    /// Sampling rate applied to every axis.
    std::optional<double> rate;
    DownsamplePath path = DownsamplePath::BranchSum;
    UpsampleVariant variant = UpsampleVariant::SwapPadding;
    int cap = kDefaultQubitCap;
};

/// Throws ConfigError when the flags contradict each other.
void validate(const RunConfig &config);

struct RunSummary {
    Signal output;
    /// Empty in exact mode.
    std::vector<double> half_widths;
    nlohmann::json metadata;
};

RunSummary cmd_down(const RunConfig &config);
RunSummary cmd_up(const RunConfig &config);

/// 512 samples at 256 Hz on [0 s, 2 s) of round(255 (sinc(8 (t - 1)) + 1) / 2),
/// with sinc(x) = sin(pi x) / (pi x); 256 levels.
Signal sinc_signal();

struct DemoStage {
    Signal exact;
    Reconstruction shots;
    std::uint64_t shot_count = 0;
    std::uint64_t seed = 0;
    int qubits = 0;
    double rate = 0.0;
};

struct DemoResult {
    Signal input;
    DemoStage down;
    DemoStage up;
    nlohmann::json metadata;
};

/// Down by 3 qubits to 6 (32 Hz), then up by 4 qubits to 10 (512 Hz), each
/// stage exact and with 256^2 * 2^n shots. `config.output` is a directory
/// that receives input.csv, {down,up}_{exact,shots}.csv and demo.meta.json.
/// The up stage re-encodes the exact downsampled signal.
DemoResult cmd_demo_sinc(const RunConfig &config);

struct AdvantageConfig {
    int dims = 1;
    int bit_depth = 1;
    /// Defaults to 1 / L^2.
    std::optional<double> mse_target;
    int n0_min = 2;
    int n0_max = 16;
    int ntilde_min = 1;
    int ntilde_max = 15;
};

/// Writes the advantage-map CSV to `out`. Throws ConfigError when the grid
/// holds no valid cell.
std::vector<AdvantageCell> cmd_advantage(const AdvantageConfig &config,
                                         std::ostream &out);

} // namespace qfres::cli
