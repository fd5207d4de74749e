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

#include "ybsys/braid.h"

#include <gtest/gtest.h>

#include "test_util.h"
#include "ybsys/errors.h"

namespace ybsys {
namespace {

using testing::kPi;

TEST(SpinOps, LadderAndZ) {
    const auto &s = spin_ops();
    EXPECT_EQ(s.s_plus * ComplexVector::unit(2, 1), ComplexVector::unit(2, 0));
    EXPECT_EQ(s.s_minus, dagger(s.s_plus));
    EXPECT_LT(frobenius_distance(commutator(s.s_plus, s.s_minus), 2.0 * s.s3), 1e-15);
}

TEST(SiteOp, PlacesOperatorOnRequestedQubit) {
    const auto &s = spin_ops();
    auto op = site_op(s.s_plus, 2, 3);
    EXPECT_EQ(op * ComplexVector::unit(8, 0b001), ComplexVector::unit(8, 0b000));
    EXPECT_THROW(site_op(s.s_plus, 3, 3), InvalidInput);
}

TEST(M4, MatrixEntriesAtPhiZero) {
    auto m = build_m4(0.0);
    ComplexMatrix expected{
        {0.0, 0.0, 0.0, 1.0},
        {0.0, 0.0, 1.0, 0.0},
        {0.0, -1.0, 0.0, 0.0},
        {-1.0, 0.0, 0.0, 0.0},
    };
    EXPECT_LT(frobenius_distance(m, expected), 1e-15);
}

TEST(M4, SquaresToMinusIdentityAndIsAntiHermitian) {
    for (double phi : testing::linspace(0.0, 2.0 * kPi, 17)) {
        auto m = build_m4(phi);
        EXPECT_LT(frobenius_distance(m * m, -ComplexMatrix::identity(4)), 1e-14);
        EXPECT_LT(frobenius_distance(dagger(m), -m), 1e-15);
    }
}

TEST(M4, PrintedFormDiffersFromSpinConstruction) {
    // The printed 4x4 array has +1 at (3,3) and +1 at (2,1); neither squares to
    // a multiple of the identity.
    auto p = printed_m4(0.3);
    auto sq = p * p;
    EXPECT_GT(frobenius_distance(sq, -ComplexMatrix::identity(4)), 1.0);
    EXPECT_GT(frobenius_distance(sq, ComplexMatrix::identity(4)), 1.0);
}

TEST(Composite, MatchesPrintedArray) {
    for (double phi : {0.0, 0.4, 1.3, 2.9, 5.5}) {
        auto bs = build_braidset(phi);
        EXPECT_LT(frobenius_distance(bs.mcal, printed_composite(phi)), 1e-14) << phi;
    }
}

TEST(Composite, AlphaIsOne) {
    for (double phi : testing::linspace(0.0, 2.0 * kPi, 17)) {
        auto bs = build_braidset(phi);
        EXPECT_NEAR(bs.alpha, 1.0, 1e-14);
        EXPECT_LT(frobenius_distance(bs.mbb * bs.mbb, ComplexMatrix::identity(8)), 1e-13);
    }
}

TEST(Relations, GatingChecksPassOverPhiGrid) {
    for (double phi : testing::linspace(0.0, 2.0 * kPi, 17)) {
        auto rep = check_es2_relations(build_braidset(phi), 1e-10);
        EXPECT_TRUE(rep.all_gating_pass()) << phi;
        for (const auto *name : {"m4_square", "aba", "bab", "anticommute", "mbb_square", "mbb_hermitian"}) {
            EXPECT_LE(rep.at(name).residual, 1e-10) << name;
        }
    }
}

TEST(Relations, UnattainableToleranceFails) {
    int failing = 0;
    for (double phi : testing::linspace(0.0, 2.0 * kPi, 17)) {
        failing += !check_es2_relations(build_braidset(phi), 1e-300).all_gating_pass();
    }
    EXPECT_GT(failing, 0);
}

TEST(Relations, MixedFourSiteRelationsAreNonGating) {
    auto rep = check_es2_relations(build_braidset(0.7), 1e-10);
    for (const auto &c : rep.checks) {
        if (c.name.rfind("mixed_", 0) == 0 || c.name.rfind("printed_", 0) == 0) EXPECT_FALSE(c.gating) << c.name;
    }
    EXPECT_THROW(rep.at("nonexistent"), InvalidInput);
}

}  // namespace
}  // namespace ybsys
