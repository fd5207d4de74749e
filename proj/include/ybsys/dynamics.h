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

#ifndef YBSYS_DYNAMICS_H
#define YBSYS_DYNAMICS_H

#include <optional>
#include <vector>

#include "ybsys/linalg.h"
#include "ybsys/states.h"

namespace ybsys {

/// theta fixed, phi(t) driven at rate phi_dot.
struct DriveParams {
    double theta = 0.0;
    double phi = 0.0;
    double phi_dot = 1.0;
    double hbar = 1.0;

    /// Throws InvalidInput for hbar <= 0 or non-finite fields.
    void validate() const;
    /// hbar * phi_dot * cos(theta): the nonzero level energy.
    double level_energy() const;
};

/// Energy levels of H in units of hbar * phi_dot * cos(theta).
enum class Level { kZero = 0, kMinus = -1, kPlus = 1 };

const char *to_string(Level l);

/// Three-site spin Hamiltonian
///   H = hbar phi_dot [ sin(t) cos(t)/sqrt(3) T1 + cos^2(t)/3 T2 ],
/// T1 the e^{-+i phi} pair-creation/annihilation terms and T2 the
/// field-plus-hopping terms.
ComplexMatrix hamiltonian(const DriveParams &d);

/// H / (hbar phi_dot cos theta), defined for every theta. Its eigenvalues are
/// the level labels {-1, 0, +1}.
ComplexMatrix level_operator(double theta, double phi);

/// i hbar [R(phi + phi_dot dt) - R(phi - phi_dot dt)] / (2 dt) R^dagger(phi).
/// Requires dt in (0, 1e-3].
ComplexMatrix hamiltonian_from_r(const DriveParams &d, double dt);

struct Su2Ops {
    ComplexMatrix i_plus;
    ComplexMatrix i_minus;
    ComplexMatrix i_3;
    Complex b_plus;
    Complex b_minus;
    double b_3 = 0.0;
};

Su2Ops su2_ops(const DriveParams &d);

struct Su2Report {
    double i_plus_square = 0.0;        // ||I+^2||
    double i_minus_square = 0.0;       // ||I-^2||
    double i_minus_is_dagger = 0.0;    // ||I- - I+^dagger||
    double raising_commutator = 0.0;   // ||[I+, I-] - 2 I3||
    double i3_plus = 0.0;              // ||[I3, I+] - I+||
    double i3_minus = 0.0;             // ||[I3, I-] + I-||
    double ladder_coefficient = 0.0;   // k with [I3, I+] = k I+ (least squares)
    double ladder_coefficient_residual = 0.0;  // ||[I3, I+] - k I+||
    double decomposition = 0.0;        // ||H - (B+ I+ + B- I- + B3 I3)||
    double i3_square_global = 0.0;     // ||I3^2 - I/4||
    double i3_square_restricted = 0.0; // ||Q^dagger (I3^2 - I/4) Q||, Q = span{chi5..chi8}
};

Su2Report su2_relations(const DriveParams &d);

/// Eigenstate |chi_i>, i in 1..8, as written in closed form. Throws InvalidInput
/// for other indices.
ThreeQubitState eigenstate_fixture(int i, double theta, double phi);

/// Energy paired with |chi_i> in the closed-form listing: 0 for i <= 4,
/// -hbar phi_dot cos(theta) for i = 5, 6 and +hbar phi_dot cos(theta) for i = 7, 8.
double listed_energy(int i, const DriveParams &d);
Level listed_level(int i);

/// Level actually occupied by |chi_i>: <chi_i| level_operator |chi_i> rounded.
Level measured_level(int i, double theta);

struct FixtureCheck {
    int index = 0;
    double listed_energy = 0.0;
    double listed_residual = 0.0;     // ||H chi - E_listed chi||
    double measured_energy = 0.0;     // <chi|H|chi>
    double measured_residual = 0.0;   // ||H chi - <H> chi||
    Level measured_level = Level::kZero;
};

struct LevelProjectorCheck {
    Level level = Level::kZero;
    std::vector<int> listed_states;
    std::vector<int> measured_states;
    double listed_distance = 0.0;     // ||P_numeric - P(listed fixtures)||
    double measured_distance = 0.0;   // ||P_numeric - P(measured fixtures)||
};

struct SpectrumReport {
    DriveParams drive;
    std::vector<double> eigenvalues;  // ascending
    std::vector<ComplexVector> eigenvectors;
    std::vector<int> degeneracy_pattern;  // multiplicities in ascending energy order
    std::vector<double> closed_form;      // {-E, -E, 0, 0, 0, 0, E, E} sorted
    double closed_form_match = 0.0;       // max |eigenvalue - closed form|
    double hermiticity = 0.0;             // ||H - H^dagger||
    std::vector<FixtureCheck> fixtures;
    /// Empty when the levels are not separated (cos theta ~ 0).
    std::vector<LevelProjectorCheck> projectors;
};

SpectrumReport spectrum(const DriveParams &d);

/// Multiplicities of a sorted list, grouping neighbours closer than `gap`.
std::vector<int> degeneracy_pattern(const std::vector<double> &sorted, double gap);

}  // namespace ybsys

#endif
