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

#include "ybsys/yangbaxter.h"

#include <gtest/gtest.h>

#include "test_util.h"
#include "ybsys/errors.h"

namespace ybsys {
namespace {

using testing::kPi;

TEST(RMatrix, ThetaHalfPiIsIdentity) {
    for (auto sys : {System::kTwoQubit, System::kThreeQubit}) {
        auto r = r_matrix(sys, {kPi / 2, 0.8});
        EXPECT_LT(frobenius_distance(r, ComplexMatrix::identity(dimension(sys))), 1e-15);
    }
}

TEST(RMatrix, ThetaZeroIsGenerator) {
    EXPECT_LT(frobenius_distance(r_matrix(System::kThreeQubit, {0.0, 1.1}), generator(System::kThreeQubit, 1.1)),
              1e-15);
}

TEST(RMatrix, UnitaryOnGrid) {
    for (auto sys : {System::kTwoQubit, System::kThreeQubit}) {
        for (int i = 0; i < 11; ++i) {
            for (int j = 0; j < 11; ++j) {
                RParams p{2 * kPi * i / 11, 2 * kPi * j / 11};
                EXPECT_LE(unitarity_residual(r_matrix(sys, p)), 1e-12);
            }
        }
    }
}

TEST(RMatrix, DeterminantModulusOne) {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    for (int k = 0; k < 20; ++k) {
        RParams p{u(rng), u(rng)};
        EXPECT_NEAR(abs_determinant(r_matrix(System::kThreeQubit, p)), 1.0, 1e-12);
    }
    EXPECT_NEAR(abs_determinant(ComplexMatrix::zeros(3, 3)), 0.0, 0.0);
}

TEST(RParams, NormalizedWrapsIntoFundamentalRange) {
    auto p = RParams{7.0, -1.0}.normalized();
    EXPECT_GE(p.phi, 0.0);
    EXPECT_LT(p.phi, 2 * kPi);
    EXPECT_LT(frobenius_distance(r_matrix(System::kTwoQubit, p), r_matrix(System::kTwoQubit, {7.0, -1.0})), 1e-13);
}

TEST(SpectralParam, RejectsOffCircle) {
    EXPECT_THROW(SpectralParam::checked({1.1, 0.0}), InvalidInput);
    EXPECT_NO_THROW(SpectralParam::checked(std::polar(1.0, 0.3)));
}

TEST(SpectralParam, ThetaFromArgument) {
    EXPECT_NEAR(SpectralParam{std::polar(1.0, 0.3)}.theta(), kPi / 2 - 0.3, 1e-15);
    EXPECT_NEAR(SpectralParam{Complex(1.0, 0.0)}.theta(), kPi / 2, 1e-15);
}

TEST(SpectralParam, SpectralFormMatchesAngleForm) {
    for (double a : {-2.0, -0.7, 0.2, 1.0, 2.5}) {
        SpectralParam x{std::polar(1.0, a)};
        for (auto sys : {System::kTwoQubit, System::kThreeQubit}) {
            auto lhs = r_from_spectral(sys, x, 0.4);
            auto rhs = r_matrix(sys, {x.theta(), 0.4});
            EXPECT_LT(frobenius_distance(lhs, rhs), 1e-13) << a;
        }
    }
}

TEST(SpectralParam, SingularPoint) {
    SpectralParam x{kI};
    EXPECT_THROW(r_from_spectral(System::kTwoQubit, x, 0.0), SingularParameterization);
    EXPECT_THROW(ybe_residual_generator_form(System::kTwoQubit, kI, 1.0, 0.0), SingularParameterization);
}

TEST(YangBaxter, GeneratorFormHoldsForTwoQubitsAnyComplexX) {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int k = 0; k < 20; ++k) {
        Complex x{n(rng), n(rng)}, y{n(rng), n(rng)};
        EXPECT_LE(ybe_residual_generator_form(System::kTwoQubit, x, y, 0.3 * k), 1e-10);
    }
}

TEST(YangBaxter, TwoQubitTrivialPointHolds) {
    SpectralParam one{Complex(1.0, 0.0)};
    EXPECT_LE(ybe_residual(System::kTwoQubit, one, one, 0.5), 1e-14);
}

TEST(YangBaxter, UnitCircleResidualIsLargeAwayFromTrivialPoint) {
    // Recorded behaviour: the unit-circle parameterization is not a solution.
    SpectralParam x{std::polar(1.0, 0.6)}, y{std::polar(1.0, -0.4)};
    EXPECT_GT(ybe_residual(System::kTwoQubit, x, y, 0.0), 0.1);
}

}  // namespace
}  // namespace ybsys
