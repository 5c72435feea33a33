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

#include "qfres/kernels.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace qfres::kernels {
namespace {

std::vector<Amplitude> random_vector(std::mt19937_64 &rng, std::size_t size) {
    std::normal_distribution<double> g;
    std::vector<Amplitude> v(size);
    for (auto &a : v) {
        a = {g(rng), g(rng)};
    }
    return v;
}

double max_diff(const std::vector<Amplitude> &a, const std::vector<Amplitude> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

class SimdEquivalence : public ::testing::Test {
  protected:
    void SetUp() override {
        simd_ = avx2();
        if (simd_ == nullptr) {
            GTEST_SKIP() << "AVX2 kernels unavailable on this build or CPU";
        }
    }
    const KernelTable *simd_ = nullptr;
    std::mt19937_64 rng_{1234};
};

TEST(Kernels, ActiveTableIsKnown) {
    const std::string name = active().name;
    EXPECT_TRUE(name == scalar().name || (avx2() && name == avx2()->name));
}

TEST(Kernels, ScalarHadamardOnTwoQubits) {
    std::vector<Amplitude> v{1, 0, 0, 0};
    scalar().hadamard(v, 0);
    scalar().hadamard(v, 1);
    for (const auto &a : v) {
        EXPECT_NEAR(a.real(), 0.5, 1e-15);
        EXPECT_NEAR(a.imag(), 0.0, 1e-15);
    }
}

TEST(Kernels, ScalarCnotTruthTable) {
    // control bit 1, target bit 0: |10> -> |11>
    std::vector<Amplitude> v{0, 0, 1, 0};
    scalar().cnot(v, 1, 0);
    EXPECT_EQ(v[3], Amplitude(1));
    EXPECT_EQ(v[2], Amplitude(0));
}

TEST_F(SimdEquivalence, Hadamard) {
    for (int n = 1; n <= 10; ++n) {
        for (int q = 0; q < n; ++q) {
            auto a = random_vector(rng_, std::size_t{1} << n);
            auto b = a;
            scalar().hadamard(a, q);
            simd_->hadamard(b, q);
            ASSERT_LT(max_diff(a, b), 1e-14) << "n=" << n << " q=" << q;
        }
    }
}

TEST_F(SimdEquivalence, ControlledPhase) {
    const Amplitude phase = std::polar(1.0, 0.7);
    for (int n = 2; n <= 9; ++n) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (a == b) {
                    continue;
                }
                auto x = random_vector(rng_, std::size_t{1} << n);
                auto y = x;
                scalar().controlled_phase(x, a, b, phase);
                simd_->controlled_phase(y, a, b, phase);
                ASSERT_LT(max_diff(x, y), 1e-14) << n << ' ' << a << ' ' << b;
            }
        }
    }
}

TEST_F(SimdEquivalence, SwapAndCnot) {
    for (int n = 2; n <= 9; ++n) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (a == b) {
                    continue;
                }
                auto x = random_vector(rng_, std::size_t{1} << n);
                auto y = x;
                scalar().swap(x, a, b);
                simd_->swap(y, a, b);
                ASSERT_EQ(max_diff(x, y), 0.0) << "swap " << n << ' ' << a << ' ' << b;
                scalar().cnot(x, a, b);
                simd_->cnot(y, a, b);
                ASSERT_EQ(max_diff(x, y), 0.0) << "cnot " << n << ' ' << a << ' ' << b;
            }
        }
    }
}

TEST_F(SimdEquivalence, AccumulateNorm) {
    for (int n = 0; n <= 10; ++n) {
        const auto v = random_vector(rng_, std::size_t{1} << n);
        std::vector<double> a(v.size(), 0.25);
        auto b = a;
        scalar().accumulate_norm(v, a);
        simd_->accumulate_norm(v, b);
        for (std::size_t i = 0; i < a.size(); ++i) {
            ASSERT_NEAR(a[i], b[i], 1e-14);
        }
    }
}

} // namespace
} // namespace qfres::kernels
