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

#include "ybsys/entanglement.h"

#include <gtest/gtest.h>

#include "test_util.h"
#include "ybsys/errors.h"
#include "ybsys/yangbaxter.h"

namespace ybsys {
namespace {

using testing::kPi;

ThreeQubitState from_terms(std::initializer_list<std::pair<const char *, Complex>> terms) {
    std::vector<Complex> amp(8);
    for (const auto &[lbl, v] : terms) amp[basis_index(lbl)] += v;
    return ThreeQubitState::from_unnormalized(ComplexVector(std::move(amp)));
}

ComplexMatrix pure_density(const ComplexVector &v) { return ComplexMatrix::outer(v, v); }

TEST(ThreeTangle, Ghz) {
    auto ghz = from_terms({{"000", 1.0}, {"111", 1.0}});
    EXPECT_NEAR(three_tangle(ghz), 1.0, 1e-14);
    auto r = full_report(ghz);
    EXPECT_NEAR(r.c_ab, 0.0, 1e-12);
    EXPECT_NEAR(r.c2_a_bc, 1.0, 1e-14);
}

TEST(ThreeTangle, WState) {
    auto w = from_terms({{"001", 1.0}, {"010", 1.0}, {"100", 1.0}});
    auto r = full_report(w);
    EXPECT_NEAR(r.tau_abc, 0.0, 1e-14);
    EXPECT_NEAR(r.c_ab, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(r.c_bc, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(r.c_ac, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(r.c2_a_bc, 8.0 / 9.0, 1e-14);
}

TEST(ThreeTangle, ProductStateIsZero) {
    auto p = ThreeQubitState(kron(kron(ComplexVector({0.6, 0.8}), ComplexVector({kI, 0.0})),
                                  ComplexVector({std::sqrt(0.5), std::sqrt(0.5)})));
    auto r = full_report(p);
    EXPECT_NEAR(r.tau_abc, 0.0, 1e-14);
    EXPECT_NEAR(r.c_ab + r.c_bc + r.c_ac, 0.0, 1e-12);
    EXPECT_NEAR(r.c2_a_bc + r.c2_b_ac + r.c2_c_ab, 0.0, 1e-14);
}

TEST(Concurrence, BellAndProductStates) {
    ComplexVector bell({std::sqrt(0.5), 0.0, 0.0, std::sqrt(0.5)});
    EXPECT_NEAR(concurrence(pure_density(bell)), 1.0, 1e-12);
    EXPECT_NEAR(pure_two_qubit_concurrence(bell), 1.0, 1e-15);
    auto prod = ComplexVector::unit(4, 1);
    EXPECT_NEAR(concurrence(pure_density(prod)), 0.0, 1e-12);
}

TEST(Concurrence, WernerStates) {
    ComplexVector singlet({0.0, std::sqrt(0.5), -std::sqrt(0.5), 0.0});
    for (double p : testing::linspace(0.0, 1.0, 11)) {
        auto rho = pure_density(singlet) * Complex(p) + ComplexMatrix::identity(4) * Complex((1.0 - p) / 4.0);
        EXPECT_NEAR(concurrence(rho), std::max(0.0, (3.0 * p - 1.0) / 2.0), 1e-10) << p;
    }
}

TEST(Concurrence, PureStatesMatchAmplitudeFormula) {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 100; ++k) {
        auto psi = testing::random_state(rng, 4);
        EXPECT_NEAR(concurrence(pure_density(psi)), pure_two_qubit_concurrence(psi), 1e-10);
    }
}

TEST(Concurrence, RejectsInvalidDensity) {
    EXPECT_THROW(concurrence(ComplexMatrix::identity(4)), InvalidInput);
    EXPECT_THROW(concurrence(ComplexMatrix::identity(2) * Complex(0.5)), DimensionMismatch);
    std::vector<double> d{1.5, -0.5, 0.0, 0.0};
    EXPECT_THROW(concurrence(ComplexMatrix::diagonal(d)), InvalidInput);
}

TEST(Concurrence, EigenvalueConventionDiffersOnMixedStates) {
    auto w = from_terms({{"001", 1.0}, {"010", 1.0}, {"100", 1.0}});
    auto rho = partial_trace(w.density(), {0, 1}, 3);
    EXPECT_NEAR(concurrence(rho), 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(concurrence_eigenvalue_convention(rho), 4.0 / 9.0, 1e-12);
}

TEST(Monogamy, RandomPureStatesSaturateWithTangle) {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 200; ++k) {
        auto s = ThreeQubitState(testing::random_state(rng, 8));
        auto r = full_report(s);
        EXPECT_LE(r.monogamy_residual, 1e-8);
        EXPECT_LE(r.monogamy_residual_bc_ac, 1.0 + 1e-12);  // bounded, not an identity
        EXPECT_GE(r.tau_abc, -1e-15);
        EXPECT_LE(r.tau_abc, 1.0 + 1e-12);
    }
}

TEST(ClosedForms, GeneratedStatesAllInputs) {
    for (double theta : testing::linspace(0.0, kPi, 25)) {
        for (std::size_t i = 0; i < 8; ++i) {
            auto s = apply_r({theta, 0.7}, ThreeQubitState::basis(basis_label(i, 3)));
            auto r = full_report(s);
            EXPECT_NEAR(r.tau_abc, tangle_closed_form(theta), 1e-9);
            for (double c : {r.c_ab, r.c_bc, r.c_ac}) EXPECT_NEAR(c, pair_concurrence_closed_form(theta), 1e-9);
            for (double c : {r.c2_a_bc, r.c2_b_ac, r.c2_c_ab}) {
                EXPECT_NEAR(c, one_vs_rest_sq_closed_form(theta), 1e-9);
            }
        }
    }
}

TEST(ClosedForms, Landmarks) {
    EXPECT_NEAR(tangle_closed_form(kPi / 6), 1.0, 1e-15);
    EXPECT_NEAR(pair_concurrence_closed_form(kPi / 6), 0.0, 1e-15);
    EXPECT_NEAR(pair_concurrence_closed_form(0.0), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(one_vs_rest_sq_closed_form(0.0), 8.0 / 9.0, 1e-15);
    EXPECT_NEAR(one_vs_rest_sq_closed_form(kPi / 2), 0.0, 1e-15);
}

TEST(TwoQubitClosure, ConcurrenceIsAbsSinTwoTheta) {
    for (double theta : testing::linspace(0.0, kPi, 25)) {
        auto r = r_matrix(System::kTwoQubit, {theta, 0.3});
        for (std::size_t i = 0; i < 4; ++i) {
            auto psi = r * ComplexVector::unit(4, i);
            EXPECT_NEAR(concurrence(pure_density(psi)), std::abs(std::sin(2 * theta)), 1e-10);
        }
    }
}

}  // namespace
}  // namespace ybsys
