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
 * Signal files.
 *
 * CSV: a header row, then one row per sample. One-dimensional signals use
 * `index,value`; d >= 2 uses `i0,...,i{d-1},value`. Rows may come in any
 * order but every sample must appear exactly once.
 *
 * PGM: two-dimensional signals only. P2 and P5 are read, P2 is written.
 * Axis 0 is the column, axis 1 the row.
 */
#pragma once

#include "qfres/signal.hpp"

#include <filesystem>
#include <optional>
#include <vector>

namespace qfres::io {

enum class Format { Csv, Pgm };

/// From the extension (.csv or .pgm, case-insensitive); IoError otherwise.
Format format_for(const std::filesystem::path &path);

Signal read_csv(const std::filesystem::path &path, int dims,
                std::vector<double> rates = {},
                std::optional<int> levels = std::nullopt);
void write_csv(const std::filesystem::path &path, const Signal &signal);

/// The signal carries levels = maxval + 1.
Signal read_pgm(const std::filesystem::path &path,
                std::vector<double> rates = {});
/// Values are rounded and clipped to [0, levels - 1]. Without `levels` the
/// signal's own levels are used, else maxval = max(255, ceil(max value)).
void write_pgm(const std::filesystem::path &path, const Signal &signal,
               std::optional<int> levels = std::nullopt);

Signal read_signal(const std::filesystem::path &path, int dims,
                   std::vector<double> rates = {},
                   std::optional<int> levels = std::nullopt);
/// `levels` only affects PGM output.
void write_signal(const std::filesystem::path &path, const Signal &signal,
                  std::optional<int> levels = std::nullopt);

} // namespace qfres::io
