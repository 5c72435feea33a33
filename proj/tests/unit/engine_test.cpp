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

#include "test_util.hpp"

#include <gtest/gtest.h>

namespace qfres {
namespace {

using testing::Matrix;
using testing::Vector;

double max_diff(const Vector &a, const Vector &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

double max_diff(const Matrix &a, const Matrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

MixedState random_mixed(std::mt19937_64 &rng, const RegisterLayout &layout,
                        int terms) {
    const auto n = static_cast<Eigen::Index>(layout.size());
    Matrix rho = Matrix::Zero(n, n);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    double total = 0.0;
    for (int t = 0; t < terms; ++t) {
        const double w = u(rng);
        total += w;
        const auto v = testing::to_vector(testing::random_state(rng, layout).amplitudes());
        rho += w * v * v.adjoint();
    }
    rho /= total;
    std::vector<Amplitude> flat(static_cast<std::size_t>(n * n));
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            flat[static_cast<std::size_t>(r * n + c)] = rho(r, c);
        }
    }
    return MixedState::from_matrix(layout, std::move(flat));
}

TEST(Hadamard, ZeroStateToUniform) {
    const auto l = make_layout(1, 4);
    const auto out = hadamard_all(PureState::zero(l));
    for (const auto &a : out.amplitudes()) {
        EXPECT_NEAR(a.real(), 0.25, 1e-15);
        EXPECT_NEAR(a.imag(), 0.0, 1e-15);
    }
}

TEST(Hadamard, TwoQubitMatrixOracle) {
    const auto l = make_layout(1, 2);
    const auto out = hadamard_all(PureState::basis(l, 0));
    const Vector expected = testing::hadamard_n(2) * testing::to_vector(PureState::basis(l, 0).amplitudes());
    EXPECT_LT(max_diff(testing::to_vector(out.amplitudes()), expected), 1e-15);
}

TEST(Hadamard, InvolutionOnRandomStates) {
    std::mt19937_64 rng(7);
    for (int d = 1; d <= 3; ++d) {
        const auto l = make_layout(d, 2);
        const auto psi = testing::random_state(rng, l);
        const auto twice = hadamard_all(hadamard_all(psi));
        EXPECT_LT(max_diff(testing::to_vector(twice.amplitudes()),
                           testing::to_vector(psi.amplitudes())),
                  1e-10);

        const auto rho = random_mixed(rng, l, 3);
        const auto rho2 = hadamard_all(hadamard_all(rho));
        EXPECT_LT(max_diff(testing::to_matrix(rho2), testing::to_matrix(rho)), 1e-10);
    }
}

TEST(Qft, SingleQubitIsHadamard) {
    std::mt19937_64 rng(8);
    const auto l = make_layout(1, 1);
    const auto psi = testing::random_state(rng, l);
    EXPECT_LT(max_diff(testing::to_vector(qft(psi, 0).amplitudes()),
                       testing::to_vector(hadamard_all(psi).amplitudes())),
              1e-15);
}

TEST(Qft, ZeroStateToUniform) {
    const auto l = make_layout(2, 3);
    const auto out = qft(PureState::zero(l), 1);
    // Uniform over subregister 1, axis 0 stays at 0.
    for (BasisIndex i = 0; i < l.size(); ++i) {
        const double expected = (i % 8 == 0) ? 1.0 / std::sqrt(8.0) : 0.0;
        EXPECT_NEAR(std::abs(out.amplitudes()[i]), expected, 1e-14);
    }
}

TEST(Qft, BasisOneOnFourSamples) {
    const auto l = make_layout(1, 2);
    const auto out = qft(PureState::basis(l, 1), 0);
    const Amplitude i(0, 1);
    const Amplitude expected[] = {0.5, 0.5 * i, -0.5, -0.5 * i};
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(std::abs(out.amplitudes()[k] - expected[k]), 0.0, 1e-15);
    }
}

TEST(Qft, InverseUndoesForward) {
    std::mt19937_64 rng(9);
    for (int d = 1; d <= 3; ++d) {
        for (int n0 = 1; n0 <= 3; ++n0) {
            const auto l = make_layout(d, n0);
            const auto psi = testing::random_state(rng, l);
            for (int s = 0; s < d; ++s) {
                const auto back = qft(qft(psi, s), s, true);
                EXPECT_LT(max_diff(testing::to_vector(back.amplitudes()),
                                   testing::to_vector(psi.amplitudes())),
                          1e-10);
            }
            const auto rho = random_mixed(rng, l, 2);
            const auto rho_back = md_qft(md_qft(rho), true);
            EXPECT_LT(max_diff(testing::to_matrix(rho_back), testing::to_matrix(rho)), 1e-10);
        }
    }
}

TEST(Qft, InvalidSubregister) {
    const auto l = make_layout(2, 2);
    EXPECT_THROW(qft(PureState::zero(l), 2), ArgumentError);
    EXPECT_THROW(qft(PureState::zero(l), -1), ArgumentError);
}

TEST(MdQft, MatchesKronOfDftsOnEveryBasisState) {
    for (int d = 1; d <= 5; ++d) {
        for (int n0 = 1; d * n0 <= 10; ++n0) {
            const auto l = make_layout(d, n0);
            const Matrix f = testing::md_dft(d, n0);
            const Matrix finv = f.adjoint();
            for (BasisIndex e = 0; e < l.size(); ++e) {
                const auto fwd = testing::to_vector(md_qft(PureState::basis(l, e)).amplitudes());
                const auto inv = testing::to_vector(md_qft(PureState::basis(l, e), true).amplitudes());
                ASSERT_LT(max_diff(fwd, Vector(f.col(static_cast<Eigen::Index>(e)))), 1e-10)
                    << "d=" << d << " n0=" << n0 << " e=" << e;
                ASSERT_LT(max_diff(inv, Vector(finv.col(static_cast<Eigen::Index>(e)))), 1e-10);
            }
        }
    }
}

TEST(MdQft, MixedStateConjugation) {
    std::mt19937_64 rng(10);
    const auto l = make_layout(2, 2);
    const auto rho = random_mixed(rng, l, 4);
    const Matrix f = testing::md_dft(2, 2);
    const Matrix expected = f * testing::to_matrix(rho) * f.adjoint();
    EXPECT_LT(max_diff(testing::to_matrix(md_qft(rho)), expected), 1e-10);
}

TEST(DiscardTop, ProductStateGivesKeptProjector) {
    // |0> on the top qubit, |psi> below.
    const auto l = make_layout(1, 3);
    std::mt19937_64 rng(11);
    const auto psi = testing::random_amplitudes(rng, 4);
    std::vector<Amplitude> amps(8, 0.0);
    std::copy(psi.begin(), psi.end(), amps.begin());
    const auto rho = discard_top(PureState::from_amplitudes(l, amps), 1);
    const auto v = testing::to_vector(psi);
    EXPECT_LT(max_diff(testing::to_matrix(rho), Matrix(v * v.adjoint())), 1e-12);
    EXPECT_EQ(rho.layout(), make_layout(1, 2));
}

TEST(DiscardTop, BellPairIsMaximallyMixed) {
    const auto l = make_layout(1, 2);
    const double r = 1.0 / std::sqrt(2.0);
    const auto rho = discard_top(PureState::from_amplitudes(l, {r, 0, 0, r}), 1);
    EXPECT_NEAR(std::abs(rho.at(0, 0) - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rho.at(1, 1) - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rho.at(0, 1)), 0.0, 1e-15);
}

TEST(DiscardTop, MatchesBruteForcePartialTrace) {
    std::mt19937_64 rng(12);
    struct Case { int d, n0, ntilde; };
    for (const auto c : {Case{1, 3, 1}, Case{1, 4, 2}, Case{2, 2, 1}, Case{2, 3, 2},
                         Case{3, 2, 1}}) {
        const auto l = make_layout(c.d, c.n0);
        const auto psi = testing::random_state(rng, l);
        const auto v = testing::to_vector(psi.amplitudes());
        std::vector<int> traced;
        for (int s = 0; s < c.d; ++s) {
            for (int q = c.n0 - c.ntilde; q < c.n0; ++q) {
                traced.push_back(s * c.n0 + q);
            }
        }
        const Matrix expected = testing::partial_trace(v * v.adjoint(), l.total_qubits(), traced);
        const auto rho = discard_top(psi, c.ntilde);
        EXPECT_LT(max_diff(testing::to_matrix(rho), expected), 1e-12);
        EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, 1e-10);

        const auto rho_m = discard_top(MixedState::from_pure(psi), c.ntilde);
        EXPECT_LT(max_diff(testing::to_matrix(rho_m), expected), 1e-12);

        Eigen::SelfAdjointEigenSolver<Matrix> eig(testing::to_matrix(rho));
        EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-9);
    }
}

TEST(DiscardTop, RejectsAllOrNothing) {
    const auto psi = PureState::zero(make_layout(1, 3));
    EXPECT_THROW(discard_top(psi, 0), ArgumentError);
    EXPECT_THROW(discard_top(psi, 3), ArgumentError);
    EXPECT_THROW(discard_top(psi, -1), ArgumentError);
}

TEST(AppendPadding, SingleAxisTensorWithZero) {
    const auto l = make_layout(1, 1);
    const Amplitude a(0.6, 0.0), b(0.0, 0.8);
    const auto out = append_padding(PureState::from_amplitudes(l, {a, b}), 1);
    EXPECT_EQ(out.layout(), make_layout(1, 2));
    const std::vector<Amplitude> expected{a, b, 0, 0};
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(out.amplitudes()[i], expected[i]);
    }
}

TEST(AppendPadding, TracingPadsRecoversInput) {
    std::mt19937_64 rng(13);
    for (int d = 1; d <= 3; ++d) {
        const auto l = make_layout(d, 2);
        const auto psi = testing::random_state(rng, l);
        const auto padded = append_padding(psi, 1);
        const auto v = testing::to_vector(psi.amplitudes());
        EXPECT_LT(max_diff(testing::to_matrix(discard_top(padded, 1)), Matrix(v * v.adjoint())),
                  1e-12);
    }
}

TEST(AppendPadding, PermutationOracle) {
    // Enumerate the basis map: input (e0, e1) with pads p0, p1 lands at
    // axis values (e0 + 2 p0, e1 + 2 p1).
    std::mt19937_64 rng(14);
    const auto l = make_layout(2, 1);
    const auto psi = testing::random_state(rng, l);
    for (const auto pad : {PadState::Zero, PadState::Plus}) {
        const auto out = append_padding(psi, 1, pad);
        const auto ul = make_layout(2, 2);
        std::vector<Amplitude> expected(16, 0.0);
        const double pad_amp[2] = {pad == PadState::Zero ? 1.0 : 1.0 / std::sqrt(2.0),
                                   pad == PadState::Zero ? 0.0 : 1.0 / std::sqrt(2.0)};
        for (BasisIndex e = 0; e < 4; ++e) {
            const auto t = index_to_tuple(l, e);
            for (int p0 = 0; p0 < 2; ++p0) {
                for (int p1 = 0; p1 < 2; ++p1) {
                    const auto w = tuple_to_index(ul, {t[0] + 2 * p0, t[1] + 2 * p1});
                    expected[w] = psi.amplitudes()[e] * pad_amp[p0] * pad_amp[p1];
                }
            }
        }
        for (BasisIndex w = 0; w < 16; ++w) {
            EXPECT_LT(std::abs(out.amplitudes()[w] - expected[w]), 1e-15);
        }
    }
}

TEST(AppendPadding, Capacity) {
    const auto psi = PureState::zero(make_layout(2, 5));
    EXPECT_THROW(append_padding(psi, 1, PadState::Zero, 11), CapacityError);
}

TEST(Probabilities, Examples) {
    const auto l = make_layout(1, 3);
    const auto uniform = probabilities(hadamard_all(PureState::zero(l)));
    for (std::size_t i = 0; i < uniform.size(); ++i) {
        EXPECT_NEAR(uniform[i], 0.125, 1e-15);
    }
    const auto basis = probabilities(PureState::basis(l, 5));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        EXPECT_EQ(basis[i], i == 5 ? 1.0 : 0.0);
    }
}

TEST(Probabilities, MixedDiagonal) {
    std::mt19937_64 rng(15);
    const auto l = make_layout(1, 3);
    const auto rho = random_mixed(rng, l, 3);
    const auto p = probabilities(rho);
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        EXPECT_NEAR(p[i], rho.at(i, i).real(), 1e-15);
        sum += p[i];
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
}

TEST(Cnot, TruthTableAndErrors) {
    const auto l = make_layout(1, 2);
    // control q=1 (value 2), target q=0.
    const auto out = apply_cnot(PureState::basis(l, 2), {0, 1}, {0, 0});
    EXPECT_EQ(out.amplitudes()[3], Amplitude(1));
    const auto zero = apply_cnot(PureState::basis(l, 0), {0, 1}, {0, 0});
    EXPECT_EQ(zero.amplitudes()[0], Amplitude(1));
    EXPECT_THROW(apply_cnot(PureState::zero(l), {0, 1}, {0, 1}), ArgumentError);
}

TEST(Cnot, PermutationOracle) {
    std::mt19937_64 rng(16);
    const auto l = make_layout(1, 3);
    for (int c = 0; c < 3; ++c) {
        for (int t = 0; t < 3; ++t) {
            if (c == t) {
                continue;
            }
            const auto psi = testing::random_state(rng, l);
            Matrix perm = Matrix::Zero(8, 8);
            for (int i = 0; i < 8; ++i) {
                const int j = ((i >> c) & 1) ? (i ^ (1 << t)) : i;
                perm(j, i) = 1.0;
            }
            const Vector expected = perm * testing::to_vector(psi.amplitudes());
            const auto out = apply_cnot(psi, {0, c}, {0, t});
            EXPECT_LT(max_diff(testing::to_vector(out.amplitudes()), expected), 1e-15);

            const auto rho = random_mixed(rng, l, 2);
            const Matrix expected_rho = perm * testing::to_matrix(rho) * perm.adjoint();
            EXPECT_LT(max_diff(testing::to_matrix(apply_cnot(rho, {0, c}, {0, t})), expected_rho),
                      1e-15);
        }
    }
}

TEST(MixedState, CapIsTwiceTheQubits) {
    const auto psi = PureState::zero(make_layout(1, 5));
    EXPECT_THROW(MixedState::from_pure(psi, 9), CapacityError);
    EXPECT_NO_THROW(MixedState::from_pure(psi, 10));
}

TEST(Unitarity, NormAndTracePreserved) {
    std::mt19937_64 rng(17);
    const auto l = make_layout(2, 3);
    auto psi = testing::random_state(rng, l);
    psi = apply_cnot(md_qft(hadamard_all(std::move(psi))), {0, 2}, {1, 0});
    EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-10);

    auto rho = random_mixed(rng, make_layout(2, 2), 3);
    rho = apply_cnot(md_qft(hadamard_all(std::move(rho))), {1, 1}, {0, 0});
    EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, 1e-10);
    EXPECT_LT(rho.hermiticity_error(), 1e-10);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(testing::to_matrix(rho));
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-9);
}

} // namespace
} // namespace qfres
