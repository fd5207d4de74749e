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

#ifndef YBSYS_YANGBAXTER_H
#define YBSYS_YANGBAXTER_H

#include "ybsys/linalg.h"

namespace ybsys {

enum class System { kTwoQubit, kThreeQubit };

const char *to_string(System s);
/// Dimension of the R-matrix: 4 or 8.
int dimension(System s);

struct RParams {
    double theta = 0.0;
    double phi = 0.0;

    /// Both angles wrapped into [0, 2 pi).
    RParams normalized() const;
};

/// Multiplicative spectral parameter, constrained to the unit circle.
struct SpectralParam {
    Complex x{1.0, 0.0};

    /// Throws InvalidInput when | |x| - 1 | > tol.
    static SpectralParam checked(Complex x, double tol = kDefaultTol);
    /// theta = pi/2 - arg(x), arg in (-pi, pi].
    double theta() const;
};

/// The braid generator of the given system before Yang-Baxterization:
/// M (4x4) or the composite (M (x) I + I (x) M + (I (x) M)(M (x) I)) / sqrt(3) (8x8).
ComplexMatrix generator(System system, double phi);

/// R(theta, phi) = sin(theta) I + cos(theta) G, G = generator(system, phi).
ComplexMatrix r_matrix(System system, const RParams &p);

/// R(x) = (x + 1/x)/2 * (I + (x - 1/x)/(x + 1/x) * Mbb), Mbb = -i G.
/// Throws InvalidInput for |x| != 1 and SingularParameterization when
/// |x + 1/x| <= tol.
ComplexMatrix r_from_spectral(System system, SpectralParam x, double phi, double tol = kDefaultTol);

/// ||R12(x) R23(xy) R12(y) - R23(y) R12(xy) R23(x)||_F with R12 = R (x) I2 and
/// R23 = I2 (x) R, R built by r_from_spectral.
double ybe_residual(System system, SpectralParam x, SpectralParam y, double phi, double tol = kDefaultTol);

/// Same residual for the family R(x) = I + ((x - 1/x)/(x + 1/x)) G, with the
/// ratio attached to the anti-Hermitian generator G itself. For real positive x
/// this is proportional to a unitary matrix. Accepts any x with x + 1/x != 0.
double ybe_residual_generator_form(System system, Complex x, Complex y, double phi, double tol = kDefaultTol);

/// ||R^dagger R - I||_F.
double unitarity_residual(const ComplexMatrix &r);

/// |det R| by Gaussian elimination with partial pivoting.
double abs_determinant(const ComplexMatrix &m);

}  // namespace ybsys

#endif
