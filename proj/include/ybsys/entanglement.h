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

#ifndef YBSYS_ENTANGLEMENT_H
#define YBSYS_ENTANGLEMENT_H

#include <array>

#include "ybsys/linalg.h"
#include "ybsys/states.h"

namespace ybsys {

enum class Qubit { kA = 0, kB = 1, kC = 2 };
enum class Pair { kAB, kBC, kAC };

const char *to_string(Qubit q);
const char *to_string(Pair p);

/// Reduced-density eigenvalues at or below this value are treated as zero
/// before square roots are taken; anything below -tol is rejected.
inline constexpr double kPsdCutoff = 1e-14;

/// Residual three-tangle 4 |d1 - 2 d2 + 4 d3| from the amplitudes a_ijk.
double three_tangle(const ThreeQubitState &s);

/// Pure two-qubit analogue used for cross-checks: 2 |a00 a11 - a01 a10|.
double pure_two_qubit_concurrence(const ComplexVector &psi);

/// Wootters lambdas (square roots of the eigenvalues of rho * rho~), descending.
/// Computed as singular values of W = V^T (sy (x) sy) V with rho = V V^dagger.
std::array<double, 4> wootters_lambdas(const ComplexMatrix &rho2, double tol = kDefaultTol);

/// max{0, l1 - l2 - l3 - l4}. Throws InvalidInput unless rho2 is a 4x4
/// density matrix within tol.
double concurrence(const ComplexMatrix &rho2, double tol = kDefaultTol);

/// Diagnostic: the same combination applied to the eigenvalues of rho * rho~
/// themselves (lambda^2) rather than their square roots.
double concurrence_eigenvalue_convention(const ComplexMatrix &rho2, double tol = kDefaultTol);

double pair_concurrence(const ThreeQubitState &s, Pair pair);

/// Squared concurrence between one qubit and the other two, 2 (1 - tr rho_q^2).
double one_vs_rest_sq(const ThreeQubitState &s, Qubit which);

/// 16 sqrt(3) |sin(theta) cos^3(theta)| / 9
double tangle_closed_form(double theta);
/// | |sin 2 theta| / sqrt(3) - (2/3) cos^2 theta |
double pair_concurrence_closed_form(double theta);
/// (8/9) cos^2 theta (1 + 2 sin^2 theta)
double one_vs_rest_sq_closed_form(double theta);

struct EntanglementReport {
    double tau_abc = 0.0;
    double c_ab = 0.0;
    double c_bc = 0.0;
    double c_ac = 0.0;
    double c2_a_bc = 0.0;
    double c2_b_ac = 0.0;
    double c2_c_ab = 0.0;
    /// |C^2_A(BC) - C_AB^2 - C_AC^2 - tau|
    double monogamy_residual = 0.0;
    /// |C^2_A(BC) - C_BC^2 - C_AC^2 - tau|, the relation with B and C exchanged.
    double monogamy_residual_bc_ac = 0.0;
};

EntanglementReport full_report(const ThreeQubitState &s);

}  // namespace ybsys

#endif
