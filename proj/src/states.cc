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

#include "ybsys/states.h"

#include <cmath>
#include <utility>
#include <vector>

#include "ybsys/errors.h"

namespace ybsys {

std::size_t basis_index(std::string_view label) {
    if (label.empty() || label.size() > 16) throw InvalidInput("basis label must have 1..16 characters");
    std::size_t idx = 0;
    for (char ch : label) {
        if (ch != '0' && ch != '1') throw InvalidInput("basis label must contain only 0 and 1: " + std::string(label));
        idx = (idx << 1) | static_cast<std::size_t>(ch - '0');
    }
    return idx;
}

std::string basis_label(std::size_t index, int n_qubits) {
    std::string s(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if ((index >> (n_qubits - 1 - q)) & 1u) s[static_cast<std::size_t>(q)] = '1';
    }
    return s;
}

ComplexVector basis_vector(std::string_view label) {
    return ComplexVector::unit(std::size_t{1} << label.size(), basis_index(label));
}

ThreeQubitState::ThreeQubitState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.dim() != 8) throw DimensionMismatch("ThreeQubitState: expected 8 amplitudes");
    if (std::abs(amplitudes_.norm() - 1.0) > kNormTol) throw InvalidInput("ThreeQubitState: state is not normalized");
}

ThreeQubitState ThreeQubitState::basis(std::string_view label) {
    if (label.size() != 3) throw InvalidInput("three-qubit basis label must have 3 characters");
    return ThreeQubitState(basis_vector(label));
}

ThreeQubitState ThreeQubitState::from_unnormalized(const ComplexVector &v) {
    return ThreeQubitState(v.normalized());
}

ThreeQubitState apply_r(const RParams &p, const ThreeQubitState &s) {
    return ThreeQubitState(r_matrix(System::kThreeQubit, p) * s.amplitudes());
}

ComplexVector apply_r_closed_form(const RParams &p, std::string_view label) {
    if (label.size() != 3) throw InvalidInput("three-qubit basis label required");
    double s = std::sin(p.theta);
    double c = std::cos(p.theta) / std::sqrt(3.0);
    Complex e = std::polar(1.0, p.phi);
    Complex ebar = std::polar(1.0, -p.phi);

    using Terms = std::vector<std::pair<const char *, Complex>>;
    Terms terms;
    switch (basis_index(label)) {
        case 0b000: terms = {{"000", s}, {"011", -c * e}, {"101", -c * e}, {"110", -c * e}}; break;
        case 0b001: terms = {{"001", s}, {"010", -c}, {"100", -c}, {"111", -c * e}}; break;
        case 0b010: terms = {{"010", s}, {"001", c}, {"100", -c}, {"111", c * e}}; break;
        case 0b011: terms = {{"011", s}, {"000", c * ebar}, {"101", -c}, {"110", c}}; break;
        case 0b100: terms = {{"100", s}, {"001", c}, {"010", c}, {"111", -c * e}}; break;
        case 0b101: terms = {{"101", s}, {"000", c * ebar}, {"011", c}, {"110", -c}}; break;
        case 0b110: terms = {{"110", s}, {"000", c * ebar}, {"011", -c}, {"101", c}}; break;
        case 0b111: terms = {{"111", s}, {"001", c * ebar}, {"010", -c * ebar}, {"100", c * ebar}}; break;
        default: throw InvalidInput("three-qubit basis label required");
    }
    std::vector<Complex> amp(8);
    for (const auto &[lbl, val] : terms) amp[basis_index(lbl)] += val;
    return ComplexVector(std::move(amp));
}

}  // namespace ybsys
