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

#include "qfres/commands.hpp"

#include "qfres/errors.hpp"
#include "qfres/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

namespace qfres::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kSincSamples = 512;
constexpr double kSincRate = 256.0;
constexpr int kSincLevels = 256;
constexpr int kDemoDiscard = 3;
constexpr int kDemoPad = 4;

std::optional<int> levels_from(const RunConfig &config) {
    if (!config.bit_depth) {
        return std::nullopt;
    }
    return 1 << *config.bit_depth;
}

const char *mode_name(Mode mode) {
    return mode == Mode::Exact ? "exact" : "shots";
}

json ratio_json(const QubitRatio &r) {
    return {{"numerator", r.numerator},
            {"denominator", r.denominator},
            {"value", r.value()}};
}

std::vector<double> to_vector(std::span<const double> s) {
    return {s.begin(), s.end()};
}

void write_json(const fs::path &path, const json &doc) {
    std::ofstream out(path);
    if (!out) {
        throw IoError(path.string(), "cannot open for writing");
    }
    out << doc.dump(2) << '\n';
    out.flush();
    if (!out) {
        throw IoError(path.string(), "write failed");
    }
}

fs::path meta_path(const fs::path &output) {
    return fs::path(output.string() + ".meta.json");
}

ShotHistogram draw(const Distribution &dist, double output_intensity,
                   const RunConfig &config) {
    if (config.mse_target) {
        return adaptive_sample(dist, *config.mse_target, output_intensity,
                               *config.shots, config.seed);
    }
    return sample_shots(dist, *config.shots, config.seed);
}

RunSummary run(const RunConfig &config, Direction direction) {
    validate(config);
    std::vector<double> rates;
    if (config.rate) {
        rates.assign(static_cast<std::size_t>(config.dims), *config.rate);
    }
    const auto input =
        io::read_signal(config.input, config.dims, rates, levels_from(config));
    const auto levels = config.bit_depth ? levels_from(config) : input.levels();
    const ResampleParams params{config.ntilde, config.cap};
    const bool down = direction == Direction::Down;

    json meta = {
        {"command", down ? "down" : "up"},
        {"input", config.input.string()},
        {"output", config.output.string()},
        {"dims", input.dims()},
        {"ntilde", config.ntilde},
        {"mode", mode_name(config.mode)},
        {"input_intensity", input.intensity()},
        {"input_qubits_per_axis", input.qubits_per_axis()},
        {"input_rates", to_vector(input.rates())},
    };
    if (down) {
        meta["path"] = config.path == DownsamplePath::BranchSum ? "branch-sum"
                                                                : "density-matrix";
    } else {
        meta["variant"] = config.variant == UpsampleVariant::SwapPadding
                              ? "swap-padding"
                              : "cnot";
    }

    if (config.patch) {
        const auto out = patch_resample(input, *config.patch, direction, params);
        meta["patch"] = *config.patch;
        meta["output_qubits_per_axis"] = out.qubits_per_axis();
        meta["output_rates"] = to_vector(out.rates());
        io::write_signal(config.output, out, levels);
        write_json(meta_path(config.output), meta);
        return {out, {}, std::move(meta)};
    }

    const auto encoded = encode(input, config.cap);
    const auto result =
        down ? downsample(encoded, params, config.path)
             : upsample(encoded, params, config.variant).result;
    const int n_in = input.dims() * input.qubits_per_axis();
    const int n_out = result.output_layout.total_qubits();
    meta["output_qubits_per_axis"] = result.output_layout.qubits_per_axis();
    meta["input_qubits"] = n_in;
    meta["output_qubits"] = n_out;
    meta["ratio"] = ratio_json(result.ratio);
    meta["output_intensity"] = result.output_intensity;
    meta["output_rates"] = result.output_rates;

    RunSummary summary{to_signal(result), {}, {}};
    if (config.mode == Mode::Shots) {
        const auto hist = draw(result.distribution, result.output_intensity, config);
        auto rec = reconstruct_from_shots(hist, result.output_intensity, levels,
                                          result.output_rates);
        meta["shots"] = hist.shots;
        meta["seed"] = hist.seed;
        meta["mean_mse"] = mean_mse(hist, result.output_intensity);
        meta["mse_bound"] = mse_bound(hist, result.output_intensity);
        if (config.mse_target) {
            meta["mse_target"] = *config.mse_target;
            meta["batch"] = *config.shots;
        }
        meta["half_widths"] = rec.half_widths;
        summary.output = std::move(rec.signal);
        summary.half_widths = std::move(rec.half_widths);
    }
    io::write_signal(config.output, summary.output, levels);
    write_json(meta_path(config.output), meta);
    summary.metadata = std::move(meta);
    return summary;
}

DemoStage run_stage(const Signal &input, Direction direction, int ntilde,
                    std::uint64_t seed) {
    const auto encoded = encode(input);
    const ResampleParams params{ntilde};
    const auto result = direction == Direction::Down
                            ? downsample(encoded, params)
                            : upsample(encoded, params).result;
    const int n = result.output_layout.total_qubits();
    const auto shots = std::uint64_t{kSincLevels} * kSincLevels << n;
    const auto hist = sample_shots(result.distribution, shots, seed);
    return {to_signal(result),
            reconstruct_from_shots(hist, result.output_intensity, std::nullopt,
                                   result.output_rates),
            shots,
            seed,
            n,
            result.output_rates.front()};
}

json stage_json(const DemoStage &stage, const fs::path &exact,
                const fs::path &shots) {
    return {{"qubits", stage.qubits},
            {"rate", stage.rate},
            {"intensity", stage.exact.intensity()},
            {"shots", stage.shot_count},
            {"seed", stage.seed},
            {"exact_file", exact.filename().string()},
            {"shots_file", shots.filename().string()},
            {"half_widths", stage.shots.half_widths}};
}

} // namespace

void validate(const RunConfig &config) {
    if (config.input.empty() || config.output.empty()) {
        throw ConfigError("--input and --output are required");
    }
    if (config.dims < 1) {
        throw ConfigError("--dims must be at least 1");
    }
    if (config.ntilde < 1) {
        throw ConfigError("--discard/--pad must be at least 1");
    }
    if (config.mode == Mode::Shots && !config.shots) {
        throw ConfigError("--mode shots requires --shots");
    }
    if (config.mode == Mode::Exact && config.shots) {
        throw ConfigError("--shots is only valid with --mode shots");
    }
    if (config.shots && *config.shots == 0) {
        throw ConfigError("--shots must be at least 1");
    }
    if (config.mse_target && config.mode != Mode::Shots) {
        throw ConfigError("--mse-target is only valid with --mode shots");
    }
    if (config.mse_target && !(*config.mse_target > 0.0)) {
        throw ConfigError("--mse-target must be positive");
    }
    if (config.patch && config.mode == Mode::Shots) {
        throw ConfigError("--patch is only supported in exact mode");
    }
    if (config.bit_depth && (*config.bit_depth < 1 || *config.bit_depth > 16)) {
        throw ConfigError("--bit-depth must be in [1, 16]");
    }
    if (config.rate && !(*config.rate > 0.0)) {
        throw ConfigError("--rate must be positive");
    }
}

RunSummary cmd_down(const RunConfig &config) {
    return run(config, Direction::Down);
}

RunSummary cmd_up(const RunConfig &config) {
    return run(config, Direction::Up);
}

Signal sinc_signal() {
    std::vector<double> values(kSincSamples);
    for (int k = 0; k < kSincSamples; ++k) {
        const double x = 8.0 * (k / kSincRate - 1.0);
        const double sinc =
            x == 0.0 ? 1.0 : std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
        values[k] = std::round((kSincLevels - 1) * (sinc + 1.0) / 2.0);
    }
    return Signal(1, std::move(values), {kSincRate}, kSincLevels);
}

DemoResult cmd_demo_sinc(const RunConfig &config) {
    if (config.output.empty()) {
        throw ConfigError("--output (a directory) is required");
    }
    std::error_code ec;
    fs::create_directories(config.output, ec);
    if (ec) {
        throw IoError(config.output.string(), ec.message());
    }
    const fs::path dir = config.output;

    auto input = sinc_signal();
    auto down = run_stage(input, Direction::Down, kDemoDiscard, config.seed);
    auto up = run_stage(down.exact, Direction::Up, kDemoPad, config.seed + 1);
    DemoResult demo{std::move(input), std::move(down), std::move(up), {}};

    io::write_csv(dir / "input.csv", demo.input);
    io::write_csv(dir / "down_exact.csv", demo.down.exact);
    io::write_csv(dir / "down_shots.csv", demo.down.shots.signal);
    io::write_csv(dir / "up_exact.csv", demo.up.exact);
    io::write_csv(dir / "up_shots.csv", demo.up.shots.signal);

    demo.metadata = {
        {"command", "demo-sinc"},
        {"input",
         {{"qubits", demo.input.qubits_per_axis()},
          {"rate", kSincRate},
          {"levels", kSincLevels},
          {"intensity", demo.input.intensity()},
          {"file", "input.csv"}}},
        {"down", stage_json(demo.down, dir / "down_exact.csv",
                            dir / "down_shots.csv")},
        {"up", stage_json(demo.up, dir / "up_exact.csv", dir / "up_shots.csv")},
    };
    demo.metadata["down"]["ntilde"] = kDemoDiscard;
    demo.metadata["up"]["ntilde"] = kDemoPad;
    write_json(dir / "demo.meta.json", demo.metadata);
    return demo;
}

std::vector<AdvantageCell> cmd_advantage(const AdvantageConfig &config,
                                         std::ostream &out) {
    if (config.dims < 1 || config.bit_depth < 1) {
        throw ConfigError("--dims and --bit-depth must be at least 1");
    }
    const double delta2 = config.mse_target.value_or(
        std::ldexp(1.0, -2 * config.bit_depth));
    if (!(delta2 > 0.0)) {
        throw ConfigError("--mse-target must be positive");
    }
    std::vector<AdvantageCell> cells;
    try {
        cells = advantage_map(config.dims, config.bit_depth, delta2,
                              config.n0_min, config.n0_max, config.ntilde_min,
                              config.ntilde_max);
    } catch (const ArgumentError &e) {
        throw ConfigError(e.what());
    }
    if (cells.empty()) {
        throw ConfigError("advantage grid holds no cell with 1 <= ntilde < n0");
    }
    write_advantage_csv(out, cells);
    return cells;
}

} // namespace qfres::cli
