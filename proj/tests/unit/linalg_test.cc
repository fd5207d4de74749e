// Copyright 2026 The ybsys Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ybsys/linalg.h"

#include <gtest/gtest.h>

#include <limits>

#include "test_util.h"
#include "ybsys/errors.h"

namespace ybsys {
namespace {

using testing::random_hermitian;
using testing::random_matrix;
using testing::random_state;

TEST(ComplexMatrix, RejectsNonFiniteEntries) {
    double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(ComplexMatrix({{1.0, nan}, {0.0, 1.0}}), NumericalFailure);
    EXPECT_THROW(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), DimensionMismatch);
}

TEST(ComplexMatrix, ArithmeticShapesChecked) {
    auto a = ComplexMatrix::identity(2);
    auto b = ComplexMatrix::identity(3);
    EXPECT_THROW(a + b, DimensionMismatch);
    EXPECT_THROW(a * b, DimensionMismatch);
    EXPECT_THROW(frobenius_distance(a, b), DimensionMismatch);
}

TEST(ComplexMatrix, PauliProducts) {
    ComplexMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    ComplexMatrix y{{0.0, -kI}, {kI, 0.0}};
    ComplexMatrix z{{1.0, 0.0}, {0.0, -1.0}};
    EXPECT_LT(frobenius_distance(x * y, kI * z), 1e-15);
    EXPECT_LT(frobenius_distance(anticommutator(x, z), ComplexMatrix::zeros(2, 2)), 1e-15);
    EXPECT_LT(frobenius_distance(commutator(x, y), 2.0 * kI * z), 1e-15);
    EXPECT_TRUE(is_hermitian(y));
    EXPECT_FALSE(is_hermitian(kI * y));
}

TEST(Kron, BasisOrderingMostSignificantLeft) {
    auto v = kron(ComplexVector::unit(2, 1), ComplexVector::unit(2, 0));
    EXPECT_EQ(v, ComplexVector::unit(4, 2));
    ComplexMatrix sp{{0.0, 1.0}, {0.0, 0.0}};
    auto a = kron(sp, ComplexMatrix::identity(2));
    EXPECT_EQ(a(0, 2), Complex(1.0));
    EXPECT_EQ(a(1, 3), Complex(1.0));
}

TEST(Kron, AssociativeAndMixedProduct) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2), c = random_matrix(rng, 2, 2);
        auto d = random_matrix(rng, 2, 2);
        EXPECT_LT(frobenius_distance(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
        EXPECT_LT(frobenius_distance(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-12);
    }
}

TEST(Dagger, Involution) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_matrix(rng, 3, 5);
        EXPECT_EQ(dagger(dagger(a)), a);
        auto b = random_matrix(rng, 5, 2);
        EXPECT_LT(frobenius_distance(dagger(a * b), dagger(b) * dagger(a)), 1e-12);
    }
}

TEST(Eigh, DiagonalAlreadyConverged) {
    std::vector<double> d{3.0, -1.0, 2.0};
    auto e = eigh(ComplexMatrix::diagonal(d));
    EXPECT_EQ(e.eigenvalues, (std::vector<double>{-1.0, 2.0, 3.0}));
}

TEST(Eigh, PauliY) {
    ComplexMatrix y{{0.0, -kI}, {kI, 0.0}};
    auto e = eigh(y);
    EXPECT_NEAR(e.eigenvalues[0], -1.0, 1e-14);
    EXPECT_NEAR(e.eigenvalues[1], 1.0, 1e-14);
    auto v = e.eigenvectors[1];
    EXPECT_NEAR(std::abs(v[1] / v[0] - kI), 0.0, 1e-14);
}

TEST(Eigh, RejectsNonHermitian) {
    ComplexMatrix a{{0.0, 1.0}, {0.0, 0.0}};
    EXPECT_THROW(eigh(a), InvalidInput);
    EXPECT_THROW(eigh(ComplexMatrix::zeros(2, 3)), DimensionMismatch);
}

TEST(Eigh, DegenerateSpectrumGivesOrthonormalBasis) {
    std::vector<double> d{1.0, 1.0, 1.0, -2.0};
    std::mt19937_64 rng(3);
    auto q = eigh(random_hermitian(rng, 4)).vectors();
    auto a = q * ComplexMatrix::diagonal(d) * dagger(q);
    auto e = eigh(a);
    EXPECT_NEAR(e.eigenvalues[0], -2.0, 1e-12);
    for (int k = 1; k < 4; ++k) EXPECT_NEAR(e.eigenvalues[k], 1.0, 1e-12);
    auto v = e.vectors();
    EXPECT_LT(frobenius_distance(dagger(v) * v, ComplexMatrix::identity(4)), 1e-12);
}

class EighReconstruction : public ::testing::TestWithParam<int> {};

TEST_P(EighReconstruction, RandomHermitianSeeds) {
    std::size_t n = static_cast<std::size_t>(GetParam());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::mt19937_64 rng(seed);
        auto a = random_hermitian(rng, n);
        auto e = eigh(a);
        auto v = e.vectors();
        auto rebuilt = v * ComplexMatrix::diagonal(e.eigenvalues) * dagger(v);
        ASSERT_LT(frobenius_distance(rebuilt, a), 1e-10 * (1.0 + a.frobenius_norm())) << "seed " << seed;
        ASSERT_LT(frobenius_distance(dagger(v) * v, ComplexMatrix::identity(n)), 1e-10) << "seed " << seed;
        ASSERT_TRUE(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
    }
}

INSTANTIATE_TEST_SUITE_P(Dims, EighReconstruction, ::testing::Values(2, 4, 8));

TEST(PartialTrace, ProductStateFactors) {
    std::mt19937_64 rng(5);
    auto a = random_state(rng, 2), b = random_state(rng, 2), c = random_state(rng, 2);
    auto psi = kron(kron(a, b), c);
    auto rho = ComplexMatrix::outer(psi, psi);
    EXPECT_LT(frobenius_distance(partial_trace(rho, {0}, 3), ComplexMatrix::outer(a, a)), 1e-14);
    EXPECT_LT(frobenius_distance(partial_trace(rho, {1}, 3), ComplexMatrix::outer(b, b)), 1e-14);
    auto ac = kron(a, c);
    EXPECT_LT(frobenius_distance(partial_trace(rho, {0, 2}, 3), ComplexMatrix::outer(ac, ac)), 1e-14);
}

TEST(PartialTrace, RandomStatesGivePsdUnitTrace) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        std::mt19937_64 rng(seed);
        auto psi = random_state(rng, 8);
        auto rho = ComplexMatrix::outer(psi, psi);
        for (auto keep : {std::vector<int>{0, 1}, std::vector<int>{1, 2}, std::vector<int>{0, 2}}) {
            auto r = partial_trace(rho, keep, 3);
            EXPECT_NEAR(r.trace().real(), 1.0, 1e-12);
            EXPECT_TRUE(is_hermitian(r, 1e-12));
            for (double ev : eigh(r).eigenvalues) EXPECT_GT(ev, -1e-12);
        }
    }
}

TEST(PartialTrace, ValidatesInput) {
    auto rho = ComplexMatrix::identity(8) * Complex(0.125);
    EXPECT_THROW(partial_trace(rho, {0, 0}, 3), InvalidInput);
    EXPECT_THROW(partial_trace(rho, {3}, 3), InvalidInput);
    EXPECT_THROW(partial_trace(ComplexMatrix::identity(8), {0}, 3), InvalidInput);
    EXPECT_THROW(partial_trace(ComplexMatrix::identity(4) * Complex(0.25), {0}, 3), DimensionMismatch);
}

TEST(Orthonormalize, DropsDependentVectors) {
    std::vector<ComplexVector> vs{ComplexVector::unit(3, 0), ComplexVector::unit(3, 0) * Complex(2.0),
                                  ComplexVector::unit(3, 1) + ComplexVector::unit(3, 0)};
    auto q = orthonormalize(vs);
    ASSERT_EQ(q.size(), 2u);
    EXPECT_NEAR(std::abs(inner(q[0], q[1])), 0.0, 1e-15);
    auto p = projector(q);
    EXPECT_LT(frobenius_distance(p * p, p), 1e-14);
    EXPECT_NEAR(p.trace().real(), 2.0, 1e-14);
}

}  // namespace
}  // namespace ybsys
