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

#ifndef YBSYS_BERRY_H
#define YBSYS_BERRY_H

#include <span>
#include <string>
#include <vector>

#include "ybsys/dynamics.h"
#include "ybsys/linalg.h"

namespace ybsys {

inline constexpr int kMinBerrySteps = 100;

enum class BerryMethod { kAnalytic, kWilson };

const char *to_string(BerryMethod m);

/// Gauge-invariant discrete Berry phase of a closed loop of states,
///   gamma = -sum_k arg <psi_k | psi_{k+1}>,  psi_N == psi_0.
/// The sum is not wrapped, so windings are preserved.
double discrete_berry_phase(std::span<const ComplexVector> loop);

/// Discrete Berry phase of fixture |chi_i> (i in 5..8) as phi runs once around
/// [0, 2 pi) on `steps` uniform points.
double berry_analytic(int i, double theta, int steps);

/// Naive quadrature of i <chi| d/dphi |chi> with central differences. Debug aid:
/// not gauge invariant and only meaningful for the closed-form fixtures.
double berry_naive(int i, double theta, int steps);

/// Closed-form phase carried by |chi_i>: +pi(1 - cos theta) for i = 5, 7,
/// -pi(1 - cos theta) for i = 6, 8, zero for i <= 4.
double berry_closed_form(int i, double theta);

/// Eigenphases (each in (-pi, pi], ascending) of the Wilson loop of the doubly
/// degenerate level with energy sign(level) * hbar phi_dot cos(theta), built from
/// numerical eigenbases of H. Throws InvalidInput for the zero level or
/// steps < 100, and DegenerateCrossing when the level's gap to the rest of the
/// spectrum drops below 1e-8.
std::vector<double> berry_wilson(Level level, double theta, int steps, double phi_dot = 1.0, double hbar = 1.0);

/// Returns 0 after checking that |chi_1>..|chi_4> do not depend on phi. Throws
/// NumericalFailure otherwise.
double zero_level_phase(double theta);

/// Solid angle 2 pi (1 - cos theta).
double solid_angle(double theta);

/// Wraps x into (-pi, pi].
double wrap_pi(double x);

struct BerryReport {
    double theta = 0.0;
    Level level = Level::kZero;
    BerryMethod method = BerryMethod::kAnalytic;
    std::vector<int> states;        // fixtures spanning the level, measured
    std::vector<double> phases;
    std::vector<double> closed_form;
    double solid_angle = 0.0;
    std::vector<double> residuals;  // |wrap(phase - closed_form)|

    double max_residual() const;
};

/// Phases of one level by the given method, compared with the closed form of
/// the fixtures that actually span that level.
BerryReport berry_report(double theta, Level level, BerryMethod method, int steps);

}  // namespace ybsys

#endif
