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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

enum ExitCode { kOk = 0, kConfig = 2, kIo = 3, kCapacity = 4 };

void add_run_options(CLI::App &cmd, qfres::cli::RunConfig &cfg,
                     const std::string &ntilde_flag, const std::string &ntilde_help) {
    static const std::map<std::string, qfres::cli::Mode> modes{
        {"exact", qfres::cli::Mode::Exact}, {"shots", qfres::cli::Mode::Shots}};
    cmd.add_option("--input", cfg.input, "Input signal (.csv or .pgm)")->required();
    cmd.add_option("--output", cfg.output, "Output signal (.csv or .pgm)")->required();
    cmd.add_option("--dims", cfg.dims, "Signal dimensions (PGM implies 2)");
    cmd.add_option(ntilde_flag, cfg.ntilde, ntilde_help)->required();
    cmd.add_option("--mode", cfg.mode, "exact or shots")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    cmd.add_option("--shots", cfg.shots, "Shots M (batch size with --mse-target)");
    cmd.add_option("--seed", cfg.seed, "RNG seed for shots mode");
    cmd.add_option("--patch", cfg.patch, "Resample patches of this side independently");
    cmd.add_option("--bit-depth", cfg.bit_depth, "Bits per sample c (L = 2^c levels)");
    cmd.add_option("--mse-target", cfg.mse_target,
                   "Sample until the mean MSE reaches this value");
    cmd.add_option("--rate", cfg.rate, "Sampling rate (Hz) of every axis");
    cmd.add_option("--cap", cfg.cap, "Simulation cap in qubits");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum frequency resampling simulator"};
    app.require_subcommand(1);

    qfres::cli::RunConfig down_cfg;
    auto *down = app.add_subcommand("down", "Downsample a signal");
    add_run_options(*down, down_cfg, "--discard", "Qubits discarded per axis");
    static const std::map<std::string, qfres::DownsamplePath> paths{
        {"branch-sum", qfres::DownsamplePath::BranchSum},
        {"density-matrix", qfres::DownsamplePath::DensityMatrix}};
    down->add_option("--engine", down_cfg.path, "branch-sum or density-matrix")
        ->transform(CLI::CheckedTransformer(paths, CLI::ignore_case));

    qfres::cli::RunConfig up_cfg;
    auto *up = app.add_subcommand("up", "Upsample a signal");
    add_run_options(*up, up_cfg, "--pad", "Qubits padded per axis");
    static const std::map<std::string, qfres::UpsampleVariant> variants{
        {"swap", qfres::UpsampleVariant::SwapPadding},
        {"cnot", qfres::UpsampleVariant::Cnot}};
    up->add_option("--variant", up_cfg.variant, "swap or cnot")
        ->transform(CLI::CheckedTransformer(variants, CLI::ignore_case));

    qfres::cli::RunConfig demo_cfg;
    auto *demo = app.add_subcommand("demo-sinc", "Sinc down/up demonstration");
    demo->add_option("--output", demo_cfg.output, "Output directory")->required();
    demo->add_option("--seed", demo_cfg.seed, "RNG seed");

    qfres::cli::AdvantageConfig adv_cfg;
    std::string adv_out;
    auto *adv = app.add_subcommand("advantage", "Tabulate the downsampling cost ratio");
    adv->add_option("--dims", adv_cfg.dims, "Signal dimensions");
    adv->add_option("--bit-depth", adv_cfg.bit_depth, "Bits per sample c");
    adv->add_option("--mse-target", adv_cfg.mse_target, "Target mean MSE (default 1/L^2)");
    adv->add_option("--n0-min", adv_cfg.n0_min);
    adv->add_option("--n0-max", adv_cfg.n0_max);
    adv->add_option("--ntilde-min", adv_cfg.ntilde_min);
    adv->add_option("--ntilde-max", adv_cfg.ntilde_max);
    adv->add_option("--output", adv_out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    try {
        if (*down) {
            qfres::cli::cmd_down(down_cfg);
        } else if (*up) {
            qfres::cli::cmd_up(up_cfg);
        } else if (*demo) {
            qfres::cli::cmd_demo_sinc(demo_cfg);
        } else if (adv_out.empty()) {
            qfres::cli::cmd_advantage(adv_cfg, std::cout);
        } else {
            std::ofstream out(adv_out);
            if (!out) {
                throw qfres::IoError(adv_out, "cannot open for writing");
            }
            qfres::cli::cmd_advantage(adv_cfg, out);
        }
    } catch (const qfres::IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const qfres::CapacityError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCapacity;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    }
    return kOk;
}
