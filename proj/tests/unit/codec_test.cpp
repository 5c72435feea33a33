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
#include "qfres/codec.hpp"
#include "qfres/engine.hpp"
#include "qfres/errors.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

namespace qfres {
namespace {

TEST(Signal, Validation) {
    EXPECT_THROW(Signal(1, {1, 2, 3}), ArgumentError);
    EXPECT_THROW(Signal(2, {1, 2, 3, 4, 5, 6, 7, 8}), ArgumentError);
    EXPECT_THROW(Signal(1, {1, -2}), EncodingError);
    EXPECT_THROW(Signal(1, {1, NAN}), ArgumentError);
    EXPECT_THROW(Signal(1, {1, 2}, {1.0, 2.0}), ArgumentError);
    EXPECT_THROW(Signal(1, {1, 2.5}, {}, 4), ArgumentError);
    EXPECT_THROW(Signal(1, {1, 4}, {}, 4), ArgumentError);
    EXPECT_NO_THROW(Signal(1, {1, 3}, {}, 4));
    const Signal s(2, {1, 2, 3, 4}, {10.0, 20.0});
    EXPECT_EQ(s.extent(), 2u);
    EXPECT_EQ(s.intensity(), 10.0);
}

TEST(Encode, Uniform) {
    const auto enc = encode(Signal(1, {1, 1, 1, 1}));
    EXPECT_EQ(enc.intensity, 4.0);
    for (const auto &a : enc.state.amplitudes()) {
        EXPECT_NEAR(a.real(), 0.5, 1e-15);
    }
}

TEST(Encode, Ramp) {
    const auto enc = encode(Signal(1, {0, 1, 2, 3}));
    EXPECT_EQ(enc.intensity, 6.0);
    const double expected[] = {0, std::sqrt(1.0 / 6), std::sqrt(2.0 / 6), std::sqrt(3.0 / 6)};
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(enc.state.amplitudes()[i].real(), expected[i], 1e-15);
        EXPECT_EQ(enc.state.amplitudes()[i].imag(), 0.0);
    }
}

TEST(Encode, RejectsZeroSignal) {
    EXPECT_THROW(encode(Signal(1, {0, 0, 0, 0})), EncodingError);
}

TEST(Encode, ProbabilitiesEqualNormalisedValues) {
    std::mt19937_64 rng(21);
    for (int d = 1; d <= 3; ++d) {
        for (int n0 = 1; n0 <= 3; ++n0) {
            const auto s = testing::random_signal(rng, d, n0);
            const auto p = probabilities(encode(s).state);
            for (std::size_t i = 0; i < s.size(); ++i) {
                EXPECT_NEAR(p[i], s[i] / s.intensity(), 1e-12);
            }
        }
    }
}

TEST(DecodeExact, Examples) {
    const auto l = make_layout(1, 2);
    const auto uniform = Distribution::from_probabilities(l, {0.25, 0.25, 0.25, 0.25});
    const auto s = decode_exact(uniform, 4.0, l);
    for (const auto v : s.values()) {
        EXPECT_EQ(v, 1.0);
    }
    const auto indicator = Distribution::from_probabilities(l, {0, 0, 1, 0});
    const auto t = decode_exact(indicator, 5.0);
    EXPECT_EQ(t[2], 5.0);
    EXPECT_EQ(t[0], 0.0);
    EXPECT_THROW(decode_exact(uniform, 4.0, make_layout(2, 2)), ArgumentError);
}

TEST(DecodeExact, RoundTrip) {
    std::mt19937_64 rng(22);
    for (int d = 1; d <= 3; ++d) {
        for (int n0 = 1; n0 <= 3; ++n0) {
            const auto s = testing::random_signal(rng, d, n0);
            const auto enc = encode(s);
            const auto back = decode_exact(probabilities(enc.state), enc.intensity);
            for (std::size_t i = 0; i < s.size(); ++i) {
                EXPECT_NEAR(back[i], s[i], 1e-9 * s[i] + 1e-15);
            }
        }
    }
}

ShotHistogram histogram(const RegisterLayout &l, std::vector<std::uint64_t> counts) {
    std::uint64_t m = 0;
    for (const auto c : counts) {
        m += c;
    }
    return {l, std::move(counts), m, 0};
}

TEST(ReconstructFromShots, DegenerateFrequenciesHaveZeroWidth) {
    const auto l = make_layout(1, 1);
    const auto rec = reconstruct_from_shots(histogram(l, {10, 0}), 3.0, 4);
    EXPECT_EQ(rec.half_widths[0], 0.0);
    EXPECT_EQ(rec.half_widths[1], 0.0);
    EXPECT_EQ(rec.signal[0], 3.0);
}

TEST(ReconstructFromShots, IntervalExample) {
    const auto l = make_layout(1, 2);
    const auto rec = reconstruct_from_shots(histogram(l, {256, 256, 256, 256}), 64.0, 256);
    EXPECT_EQ(rec.signal[0], 16.0);
    EXPECT_NEAR(rec.half_widths[0], 2.0 * 64.0 * std::sqrt(0.1875 / 1024.0), 1e-12);
    EXPECT_NEAR(rec.half_widths[0], 1.732, 1e-3);
}

TEST(ReconstructFromShots, RoundsAndClips) {
    const auto l = make_layout(1, 1);
    const auto rec = reconstruct_from_shots(histogram(l, {3, 1}), 10.0, 4);
    EXPECT_EQ(rec.signal[0], 3.0); // 7.5 clipped to L - 1
    EXPECT_EQ(rec.signal[1], 3.0); // 2.5 rounds away from zero
    const auto raw = reconstruct_from_shots(histogram(l, {3, 1}), 10.0);
    EXPECT_EQ(raw.signal[0], 7.5);
}

TEST(ReconstructFromShots, Errors) {
    const auto l = make_layout(1, 1);
    EXPECT_THROW(reconstruct_from_shots(histogram(l, {0, 0}), 1.0), ArgumentError);
    EXPECT_THROW(reconstruct_from_shots(histogram(l, {1, 0}), 1.0, 1), ArgumentError);
}

TEST(ReconstructFromShots, LargeSampleCoversExact) {
    std::mt19937_64 rng(23);
    const auto s = testing::random_signal(rng, 1, 4);
    const auto enc = encode(s);
    const auto dist = probabilities(enc.state);
    std::size_t inside = 0;
    std::size_t total = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto rec = reconstruct_from_shots(sample_shots(dist, 1'000'000, seed), enc.intensity);
        for (std::size_t i = 0; i < s.size(); ++i) {
            inside += std::abs(rec.signal[i] - s[i]) <= 3.0 * rec.half_widths[i];
            ++total;
        }
    }
    EXPECT_GE(static_cast<double>(inside) / static_cast<double>(total), 0.99);
}

TEST(ReconstructFromShots, UnbiasedOverSeeds) {
    const auto s = Signal(1, {1, 2, 3, 4, 5, 6, 7, 8});
    const auto enc = encode(s);
    const auto dist = probabilities(enc.state);
    std::vector<double> mean(s.size(), 0.0);
    std::vector<double> width(s.size(), 0.0);
    const int seeds = 50;
    for (int seed = 0; seed < seeds; ++seed) {
        const auto rec = reconstruct_from_shots(sample_shots(dist, 100'000, seed), enc.intensity);
        for (std::size_t i = 0; i < s.size(); ++i) {
            mean[i] += rec.signal[i] / seeds;
            width[i] += rec.half_widths[i] / seeds;
        }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_LT(std::abs(mean[i] - s[i]), width[i]);
    }
}

} // namespace
} // namespace qfres
