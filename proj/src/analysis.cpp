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

#include "qfres/analysis.hpp"

#include "qfres/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

namespace qfres {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double uniform53(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require_positive(double value, const char *name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ArgumentError(std::string(name) + " must be positive and finite");
    }
}

int outcome_qubits(const ShotHistogram &hist) {
    return hist.layout.total_qubits();
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

ShotHistogram sample_shots(const Distribution &dist, std::uint64_t shots,
                           std::uint64_t seed) {
    if (shots == 0) {
        throw ArgumentError("shot count must be at least 1");
    }
    const auto p = dist.probabilities();
    std::vector<double> cdf(p.size());
    std::partial_sum(p.begin(), p.end(), cdf.begin());
    const double total = cdf.back();
    // Last outcome with non-zero mass, the target when rounding pushes u*total
    // onto the end of the table.
    std::size_t last = p.size() - 1;
    while (last > 0 && p[last] <= 0.0) {
        --last;
    }

    std::mt19937_64 rng(seed);
    ShotHistogram hist{dist.layout(), std::vector<std::uint64_t>(p.size(), 0),
                       shots, seed};
    for (std::uint64_t i = 0; i < shots; ++i) {
        const double u = uniform53(rng) * total;
        auto idx = static_cast<std::size_t>(
            std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        hist.counts[std::min(idx, last)] += 1;
    }
    return hist;
}

double mean_mse(const ShotHistogram &hist, double output_intensity) {
    if (hist.shots == 0) {
        throw ArgumentError("histogram holds no shots");
    }
    const double m = static_cast<double>(hist.shots);
    double acc = 0.0;
    for (const auto c : hist.counts) {
        const double f = static_cast<double>(c) / m;
        acc += f * (1.0 - f);
    }
    return 4.0 * output_intensity * output_intensity * acc /
           (m * static_cast<double>(hist.counts.size()));
}

double mse_bound(const ShotHistogram &hist, double output_intensity) {
    if (hist.shots == 0) {
        throw ArgumentError("histogram holds no shots");
    }
    const double k = std::ldexp(1.0, outcome_qubits(hist));
    const double mean_output = output_intensity / k;
    return 4.0 * mean_output * mean_output * k /
           static_cast<double>(hist.shots);
}

std::uint64_t shots_required(double magnitude, double delta2, int d, int n1) {
    require_positive(delta2, "delta2");
    if (magnitude < 0.0 || d < 1 || n1 < 0) {
        throw ArgumentError("shots_required needs magnitude >= 0, d >= 1, n1 >= 0");
    }
    const double m =
        std::ceil(4.0 * magnitude * magnitude * std::ldexp(1.0, d * n1) / delta2);
    return static_cast<std::uint64_t>(std::max(m, 1.0));
}

ShotHistogram adaptive_sample(const Distribution &dist, double delta2,
                              double output_intensity, std::uint64_t batch,
                              std::uint64_t seed) {
    require_positive(delta2, "delta2");
    if (batch == 0) {
        throw ArgumentError("batch size must be at least 1");
    }
    auto hist = sample_shots(dist, batch, splitmix64(seed));
    for (std::uint64_t k = 1; mean_mse(hist, output_intensity) > delta2; ++k) {
        hist = merge(hist, sample_shots(dist, batch, splitmix64(seed + k)));
    }
    hist.seed = seed;
    return hist;
}

AdvantageBounds advantage_bounds(int d, int c, double delta2, int n0) {
    require_positive(delta2, "delta2");
    if (d < 1 || c < 1 || n0 < 1) {
        throw ArgumentError("advantage bounds need d, c, n0 >= 1");
    }
    const double lower =
        (2.0 * c + 3.0 + 2.0 * std::log2(static_cast<double>(n0)) +
         std::log2(static_cast<double>(d) / delta2)) /
        static_cast<double>(d);
    return {lower, n0};
}

double complexity_ratio(const AdvantageParams &params, Direction direction) {
    require_positive(params.delta2, "delta2");
    const int d = params.d;
    if (d < 1 || params.c < 1 || params.n0 < 1 || params.ntilde < 1) {
        throw ArgumentError("complexity ratio needs d, c, n0, ntilde >= 1");
    }
    // Everything in log2 so large registers stay finite.
    const double log_common = std::log2(params.delta2) - 3.0 -
                              std::log2(static_cast<double>(d)) - 2.0 * params.c;
    if (direction == Direction::Down) {
        if (params.ntilde >= params.n0) {
            throw ArgumentError("downsampling needs ntilde < n0");
        }
        return std::exp2(static_cast<double>(d) * params.ntilde + log_common -
                         2.0 * std::log2(static_cast<double>(params.n0)));
    }
    const double n1 = static_cast<double>(params.n0 + params.ntilde);
    return std::exp2(log_common - 2.0 * std::log2(n1));
}

std::vector<AdvantageCell> advantage_map(int d, int c, double delta2,
                                         int n0_min, int n0_max,
                                         int ntilde_min, int ntilde_max) {
    if (n0_min > n0_max || ntilde_min > ntilde_max) {
        throw ArgumentError("advantage map ranges must be non-empty");
    }
    std::vector<AdvantageCell> cells;
    for (int n0 = std::max(n0_min, 1); n0 <= n0_max; ++n0) {
        const auto bounds = advantage_bounds(d, c, delta2, n0);
        for (int nt = std::max(ntilde_min, 1); nt <= ntilde_max && nt < n0; ++nt) {
            const double ratio =
                complexity_ratio({d, c, delta2, n0, nt}, Direction::Down);
            cells.push_back({n0, nt, ratio, bounds.lower, nt >= bounds.lower});
        }
    }
    return cells;
}

void write_advantage_csv(std::ostream &out,
                         const std::vector<AdvantageCell> &cells) {
    out << "n0,ntilde,ratio,lower_bound,in_advantage_region\n";
    for (const auto &cell : cells) {
        out << cell.n0 << ',' << cell.ntilde << ',' << format_number(cell.ratio)
            << ',' << format_number(cell.lower_bound) << ','
            << (cell.in_advantage_region ? 1 : 0) << '\n';
    }
}

} // namespace qfres
