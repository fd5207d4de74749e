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

#ifndef YBSYS_STATES_H
#define YBSYS_STATES_H

#include <string>
#include <string_view>

#include "ybsys/linalg.h"
#include "ybsys/yangbaxter.h"

namespace ybsys {

inline constexpr double kNormTol = 1e-12;

/// Index of a computational-basis label such as "011" (first character is the
/// most significant qubit). Throws InvalidInput for anything but '0'/'1'.
std::size_t basis_index(std::string_view label);
std::string basis_label(std::size_t index, int n_qubits);

/// Unit vector for a computational-basis label of any length.
ComplexVector basis_vector(std::string_view label);

/// Normalized three-qubit pure state; amplitude k belongs to |ijk> with qubit
/// A (the first label character) most significant.
class ThreeQubitState {
   public:
    /// Throws InvalidInput unless dim == 8 and | ||v|| - 1 | <= kNormTol.
    explicit ThreeQubitState(ComplexVector amplitudes);

    static ThreeQubitState basis(std::string_view label);
    /// Normalizes `v` first.
    static ThreeQubitState from_unnormalized(const ComplexVector &v);

    const ComplexVector &amplitudes() const { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }
    /// Amplitude a_ijk for a label like "101".
    Complex amplitude(std::string_view label) const { return amplitudes_[basis_index(label)]; }

    ComplexMatrix density() const { return ComplexMatrix::outer(amplitudes_, amplitudes_); }

   private:
    ComplexVector amplitudes_;
};

/// R(theta, phi) |s>. The result is not renormalized; unitarity keeps the norm.
ThreeQubitState apply_r(const RParams &p, const ThreeQubitState &s);

/// Column `label` of R written out term by term from the closed-form action on
/// product states; an independent transcription used to cross-check apply_r.
ComplexVector apply_r_closed_form(const RParams &p, std::string_view label);

}  // namespace ybsys

#endif
