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

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "ybsys/errors.h"

namespace ybsys {

namespace {

const ComplexMatrix &sigma_yy() {
    static const ComplexMatrix yy = [] {
        ComplexMatrix sy{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
        return kron(sy, sy);
    }();
    return yy;
}

void require_density_4x4(const ComplexMatrix &rho, double tol) {
    if (rho.rows() != 4 || rho.cols() != 4) throw DimensionMismatch("concurrence: expected a 4x4 density matrix");
    if (!is_hermitian(rho, tol)) throw InvalidInput("concurrence: matrix is not Hermitian");
    if (std::abs(rho.trace() - Complex(1.0)) > tol) throw InvalidInput("concurrence: trace is not 1");
}

// Columns v_k = sqrt(p_k) |u_k> for the non-negligible eigenpairs of rho.
std::vector<ComplexVector> square_root_factor(const ComplexMatrix &rho, double tol) {
    auto eig = eigh(rho, tol);
    if (eig.eigenvalues.front() < -tol) throw InvalidInput("concurrence: matrix is not positive semidefinite");
    std::vector<ComplexVector> cols;
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        double p = eig.eigenvalues[k];
        if (p > kPsdCutoff) cols.push_back(eig.eigenvectors[k] * Complex(std::sqrt(p)));
    }
    return cols;
}

}  // namespace

const char *to_string(Qubit q) {
    switch (q) {
        case Qubit::kA: return "A";
        case Qubit::kB: return "B";
        case Qubit::kC: return "C";
    }
    return "?";
}

const char *to_string(Pair p) {
    switch (p) {
        case Pair::kAB: return "AB";
        case Pair::kBC: return "BC";
        case Pair::kAC: return "AC";
    }
    return "?";
}

double three_tangle(const ThreeQubitState &s) {
    auto a = [&](const char *label) { return s.amplitude(label); };
    Complex d1 = a("000") * a("000") * a("111") * a("111") + a("001") * a("001") * a("110") * a("110") +
                 a("010") * a("010") * a("101") * a("101") + a("100") * a("100") * a("011") * a("011");
    Complex d2 = a("000") * a("111") * a("011") * a("100") + a("000") * a("111") * a("101") * a("010") +
                 a("000") * a("111") * a("110") * a("001") + a("011") * a("100") * a("101") * a("010") +
                 a("011") * a("100") * a("110") * a("001") + a("101") * a("010") * a("110") * a("001");
    Complex d3 = a("000") * a("110") * a("101") * a("011") + a("111") * a("001") * a("010") * a("100");
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

double pure_two_qubit_concurrence(const ComplexVector &psi) {
    if (psi.dim() != 4) throw DimensionMismatch("pure_two_qubit_concurrence: expected 4 amplitudes");
    return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

std::array<double, 4> wootters_lambdas(const ComplexMatrix &rho2, double tol) {
    require_density_4x4(rho2, tol);
    auto cols = square_root_factor(rho2, tol);
    std::array<double, 4> lambdas{0.0, 0.0, 0.0, 0.0};
    std::size_t r = cols.size();
    if (r == 0) return lambdas;

    // W_ij = v_i^T (sy x sy) v_j, symmetric. Its singular values are the lambdas;
    // they are read off the Hermitian dilation [[0, W], [W^dagger, 0]], whose
    // spectrum is {+-sigma_k}.
    const auto &yy = sigma_yy();
    std::vector<Complex> w(r * r);
    for (std::size_t i = 0; i < r; ++i) {
        auto yv = yy * cols[i];
        for (std::size_t j = 0; j < r; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < 4; ++k) s += cols[j][k] * yv[k];
            w[i * r + j] = s;
        }
    }
    std::vector<Complex> dil(4 * r * r);
    std::size_t n = 2 * r;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            dil[i * n + (r + j)] = w[i * r + j];
            dil[(r + j) * n + i] = std::conj(w[i * r + j]);
        }
    }
    auto eig = eigh(ComplexMatrix(n, n, std::move(dil)), tol);
    for (std::size_t k = 0; k < r; ++k) lambdas[k] = std::max(0.0, eig.eigenvalues[n - 1 - k]);
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    return lambdas;
}

double concurrence(const ComplexMatrix &rho2, double tol) {
    auto l = wootters_lambdas(rho2, tol);
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double concurrence_eigenvalue_convention(const ComplexMatrix &rho2, double tol) {
    auto l = wootters_lambdas(rho2, tol);
    return std::max(0.0, l[0] * l[0] - l[1] * l[1] - l[2] * l[2] - l[3] * l[3]);
}

double pair_concurrence(const ThreeQubitState &s, Pair pair) {
    auto rho = s.density();
    switch (pair) {
        case Pair::kAB: return concurrence(partial_trace(rho, {0, 1}, 3));
        case Pair::kBC: return concurrence(partial_trace(rho, {1, 2}, 3));
        case Pair::kAC: return concurrence(partial_trace(rho, {0, 2}, 3));
    }
    throw InvalidInput("pair_concurrence: unknown pair");
}

double one_vs_rest_sq(const ThreeQubitState &s, Qubit which) {
    int q = static_cast<int>(which);
    auto rho = partial_trace(s.density(), std::span<const int>(&q, 1), 3);
    double purity = 0.0;
    for (const auto &z : rho.entries()) purity += std::norm(z);
    return 2.0 * (1.0 - purity);
}

double tangle_closed_form(double theta) {
    double c = std::cos(theta);
    return 16.0 * std::sqrt(3.0) * std::abs(std::sin(theta) * c * c * c) / 9.0;
}

double pair_concurrence_closed_form(double theta) {
    double c = std::cos(theta);
    return std::abs(std::abs(std::sin(2.0 * theta)) / std::sqrt(3.0) - 2.0 / 3.0 * c * c);
}

double one_vs_rest_sq_closed_form(double theta) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    return 8.0 / 9.0 * c * c * (1.0 + 2.0 * s * s);
}

EntanglementReport full_report(const ThreeQubitState &s) {
    EntanglementReport r;
    r.tau_abc = three_tangle(s);
    r.c_ab = pair_concurrence(s, Pair::kAB);
    r.c_bc = pair_concurrence(s, Pair::kBC);
    r.c_ac = pair_concurrence(s, Pair::kAC);
    r.c2_a_bc = one_vs_rest_sq(s, Qubit::kA);
    r.c2_b_ac = one_vs_rest_sq(s, Qubit::kB);
    r.c2_c_ab = one_vs_rest_sq(s, Qubit::kC);
    r.monogamy_residual = std::abs(r.c2_a_bc - r.c_ab * r.c_ab - r.c_ac * r.c_ac - r.tau_abc);
    r.monogamy_residual_bc_ac = std::abs(r.c2_a_bc - r.c_bc * r.c_bc - r.c_ac * r.c_ac - r.tau_abc);
    return r;
}

}  // namespace ybsys
