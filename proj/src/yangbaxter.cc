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

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "ybsys/braid.h"
#include "ybsys/errors.h"

namespace ybsys {

namespace {

double wrap_2pi(double a) {
    double w = std::fmod(a, 2.0 * std::numbers::pi);
    if (w < 0.0) w += 2.0 * std::numbers::pi;
    return w;
}

double lifted_residual(const ComplexMatrix &rx, const ComplexMatrix &rxy, const ComplexMatrix &ry) {
    auto id2 = ComplexMatrix::identity(2);
    auto r12 = [&](const ComplexMatrix &r) { return kron(r, id2); };
    auto r23 = [&](const ComplexMatrix &r) { return kron(id2, r); };
    auto lhs = r12(rx) * r23(rxy) * r12(ry);
    auto rhs = r23(ry) * r12(rxy) * r23(rx);
    return frobenius_distance(lhs, rhs);
}

}  // namespace

const char *to_string(System s) { return s == System::kTwoQubit ? "two_qubit" : "three_qubit"; }

int dimension(System s) { return s == System::kTwoQubit ? 4 : 8; }

RParams RParams::normalized() const { return {wrap_2pi(theta), wrap_2pi(phi)}; }

SpectralParam SpectralParam::checked(Complex x, double tol) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()) || std::abs(std::abs(x) - 1.0) > tol) {
        throw InvalidInput("spectral parameter must lie on the unit circle");
    }
    return SpectralParam{x};
}

double SpectralParam::theta() const { return std::numbers::pi / 2.0 - std::arg(x); }

ComplexMatrix generator(System system, double phi) {
    return system == System::kTwoQubit ? build_m4(phi) : build_braidset(phi).mcal;
}

ComplexMatrix r_matrix(System system, const RParams &p) {
    auto g = generator(system, p.phi);
    return ComplexMatrix::identity(g.rows()) * Complex(std::sin(p.theta)) + g * Complex(std::cos(p.theta));
}

ComplexMatrix r_from_spectral(System system, SpectralParam x, double phi, double tol) {
    SpectralParam::checked(x.x, tol);
    Complex inv = 1.0 / x.x;
    Complex sum = x.x + inv;
    if (std::abs(sum) <= tol) {
        throw SingularParameterization("x + 1/x vanishes; build this point with r_matrix instead");
    }
    Complex diff = x.x - inv;
    auto mbb = generator(system, phi) * Complex(0.0, -1.0);
    auto id = ComplexMatrix::identity(mbb.rows());
    return (id + mbb * (diff / sum)) * (sum / 2.0);
}

double ybe_residual(System system, SpectralParam x, SpectralParam y, double phi, double tol) {
    SpectralParam xy{x.x * y.x};
    return lifted_residual(r_from_spectral(system, x, phi, tol), r_from_spectral(system, xy, phi, tol),
                           r_from_spectral(system, y, phi, tol));
}

double ybe_residual_generator_form(System system, Complex x, Complex y, double phi, double tol) {
    auto g = generator(system, phi);
    auto id = ComplexMatrix::identity(g.rows());
    auto build = [&](Complex z) {
        Complex sum = z + 1.0 / z;
        if (std::abs(sum) <= tol) throw SingularParameterization("x + 1/x vanishes");
        return id + g * ((z - 1.0 / z) / sum);
    };
    return lifted_residual(build(x), build(x * y), build(y));
}

double unitarity_residual(const ComplexMatrix &r) {
    return frobenius_distance(dagger(r) * r, ComplexMatrix::identity(r.cols()));
}

double abs_determinant(const ComplexMatrix &m) {
    if (!m.is_square()) throw DimensionMismatch("abs_determinant: matrix is not square");
    std::size_t n = m.rows();
    std::vector<Complex> a(m.entries().begin(), m.entries().end());
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        }
        if (a[piv * n + col] == Complex(0.0)) return 0.0;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
        }
        Complex d = a[col * n + col];
        det *= std::abs(d);
        for (std::size_t r = col + 1; r < n; ++r) {
            Complex f = a[r * n + col] / d;
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
        }
    }
    return det;
}

}  // namespace ybsys
