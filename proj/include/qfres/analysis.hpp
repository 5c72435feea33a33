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
 * Shot sampling, mean-square-error statistics and the cost model used to
 * locate the region where quantum downsampling beats a classical pass.
 *
 * Sampling uses std::mt19937_64. Uniform variates are built from the top 53
 * bits of one draw and mapped through the cumulative distribution, so counts
 * depend only on the seed and not on the standard library.
 */
#pragma once

#include "qfres/histogram.hpp"
#include "qfres/resampler.hpp"
#include "qfres/state.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace qfres {

/// M independent draws from `dist`. Throws ArgumentError for M = 0.
ShotHistogram sample_shots(const Distribution &dist, std::uint64_t shots,
                           std::uint64_t seed);

/// Mean over all outcomes of 4 I^2 f (1 - f) / M.
double mean_mse(const ShotHistogram &hist, double output_intensity);

/// 4 <O>^2 2^(d n1) / M with <O> = output_intensity / 2^(d n1); mean_mse
/// never exceeds it.
double mse_bound(const ShotHistogram &hist, double output_intensity);

/// ceil(4 magnitude^2 2^(d n1) / delta2). Pass the mean output value for the
/// signal-dependent count or the level count L for the worst case.
std::uint64_t shots_required(double magnitude, double delta2, int d, int n1);

/// Draws `batch` shots at a time until mean_mse <= delta2. Batch k uses a
/// seed derived from (seed, k); the returned histogram records `seed`.
ShotHistogram adaptive_sample(const Distribution &dist, double delta2,
                              double output_intensity, std::uint64_t batch,
                              std::uint64_t seed);

struct AdvantageParams {
    int d = 1;
    int c = 1; ///< bit depth, L = 2^c
    double delta2 = 1.0;
    int n0 = 1;
    int ntilde = 1;
};

struct AdvantageBounds {
    double lower = 0.0;
    int upper = 0;

    [[nodiscard]] bool empty() const noexcept { return lower >= upper; }
};

/// lower = (2c + 3 + 2 log2 n0 + log2(d / delta2)) / d, upper = n0.
AdvantageBounds advantage_bounds(int d, int c, double delta2, int n0);

/// Classical over quantum cost. Down: 2^(d n0) / (8 d L^2 n0^2 2^(d n1) /
/// delta2). Up: 2^(d n1) / (8 d L^2 n1^2 2^(d n1) / delta2).
double complexity_ratio(const AdvantageParams &params, Direction direction);

struct AdvantageCell {
    int n0 = 0;
    int ntilde = 0;
    double ratio = 0.0;
    double lower_bound = 0.0;
    bool in_advantage_region = false;
};

/// Downsampling ratios over n0 in [n0_min, n0_max] and ntilde in
/// [ntilde_min, ntilde_max]; cells with ntilde >= n0 are skipped. Rows are
/// ordered by n0, then ntilde.
std::vector<AdvantageCell> advantage_map(int d, int c, double delta2,
                                         int n0_min, int n0_max,
                                         int ntilde_min, int ntilde_max);

/// Header `n0,ntilde,ratio,lower_bound,in_advantage_region`, one row per cell.
void write_advantage_csv(std::ostream &out,
                         const std::vector<AdvantageCell> &cells);

} // namespace qfres
