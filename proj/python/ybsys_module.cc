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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ybsys/berry.h"
#include "ybsys/braid.h"
#include "ybsys/commands.h"
#include "ybsys/dynamics.h"
#include "ybsys/entanglement.h"
#include "ybsys/errors.h"
#include "ybsys/states.h"
#include "ybsys/yangbaxter.h"

namespace py = pybind11;
using namespace ybsys;

namespace {

py::array_t<Complex> to_numpy(const ComplexMatrix &m) {
    py::array_t<Complex> out({m.rows(), m.cols()});
    auto w = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) w(r, c) = m(r, c);
    }
    return out;
}

py::array_t<Complex> to_numpy(const ComplexVector &v) {
    py::array_t<Complex> out(v.dim());
    auto w = out.mutable_unchecked<1>();
    for (std::size_t i = 0; i < v.dim(); ++i) w(i) = v[i];
    return out;
}

ComplexVector from_numpy(const py::array_t<Complex, py::array::c_style | py::array::forcecast> &a) {
    if (a.ndim() != 1) throw DimensionMismatch("expected a one-dimensional array");
    auto r = a.unchecked<1>();
    std::vector<Complex> e(static_cast<std::size_t>(r.shape(0)));
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = r(static_cast<py::ssize_t>(i));
    return ComplexVector(std::move(e));
}

System system_of(int qubits) {
    if (qubits == 2) return System::kTwoQubit;
    if (qubits == 3) return System::kThreeQubit;
    throw InvalidInput("system must have 2 or 3 qubits");
}

Level level_of(const std::string &s) {
    if (s == "minus") return Level::kMinus;
    if (s == "plus") return Level::kPlus;
    if (s == "zero") return Level::kZero;
    throw InvalidInput("level must be zero, minus or plus");
}

py::dict report_dict(const EntanglementReport &r) {
    py::dict d;
    d["tau_abc"] = r.tau_abc;
    d["c_ab"] = r.c_ab;
    d["c_bc"] = r.c_bc;
    d["c_ac"] = r.c_ac;
    d["c2_a_bc"] = r.c2_a_bc;
    d["c2_b_ac"] = r.c2_b_ac;
    d["c2_c_ab"] = r.c2_c_ab;
    d["monogamy_residual"] = r.monogamy_residual;
    return d;
}

}  // namespace

PYBIND11_MODULE(_ybsys, m) {
    m.doc() = "Three-qubit Yang-Baxter system: R-matrices, entanglement, spectrum and Berry phases";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<NumericalFailure>(m, "NumericalFailure", PyExc_ArithmeticError);

    m.def("r_matrix", [](double theta, double phi, int qubits) {
        return to_numpy(r_matrix(system_of(qubits), {theta, phi}));
    }, py::arg("theta"), py::arg("phi"), py::arg("qubits") = 3);
    m.def("generator", [](double phi, int qubits) { return to_numpy(generator(system_of(qubits), phi)); },
          py::arg("phi"), py::arg("qubits") = 3);
    m.def("ybe_residual", [](Complex x, Complex y, double phi, int qubits) {
        return ybe_residual(system_of(qubits), SpectralParam::checked(x), SpectralParam::checked(y), phi);
    }, py::arg("x"), py::arg("y"), py::arg("phi"), py::arg("qubits") = 2);

    m.def("apply_r", [](double theta, double phi, const std::string &label) {
        return to_numpy(apply_r({theta, phi}, ThreeQubitState::basis(label)).amplitudes());
    }, py::arg("theta"), py::arg("phi"), py::arg("input"));
    m.def("entanglement", [](const py::array_t<Complex, py::array::c_style | py::array::forcecast> &psi) {
        return report_dict(full_report(ThreeQubitState(from_numpy(psi))));
    }, py::arg("state"));
    m.def("tangle_closed_form", &tangle_closed_form);
    m.def("pair_concurrence_closed_form", &pair_concurrence_closed_form);
    m.def("one_vs_rest_sq_closed_form", &one_vs_rest_sq_closed_form);

    m.def("hamiltonian", [](double theta, double phi, double phi_dot, double hbar) {
        return to_numpy(hamiltonian({theta, phi, phi_dot, hbar}));
    }, py::arg("theta"), py::arg("phi"), py::arg("phi_dot") = 1.0, py::arg("hbar") = 1.0);
    m.def("eigenvalues", [](double theta, double phi, double phi_dot, double hbar) {
        return spectrum({theta, phi, phi_dot, hbar}).eigenvalues;
    }, py::arg("theta"), py::arg("phi") = 0.0, py::arg("phi_dot") = 1.0, py::arg("hbar") = 1.0);
    m.def("eigenstate_fixture", [](int i, double theta, double phi) {
        return to_numpy(eigenstate_fixture(i, theta, phi).amplitudes());
    });

    m.def("berry_analytic", &berry_analytic, py::arg("i"), py::arg("theta"), py::arg("steps") = 10000);
    m.def("berry_wilson", [](const std::string &level, double theta, int steps) {
        return berry_wilson(level_of(level), theta, steps);
    }, py::arg("level"), py::arg("theta"), py::arg("steps") = 4000);
    m.def("berry_closed_form", &berry_closed_form);

    // Command-level reports as JSON text; the Python wrapper parses them.
    m.def("_verify_algebra", [](double tol, int phi_samples, std::uint64_t seed) {
        return cmd_verify_algebra(tol, phi_samples, seed).to_json().dump();
    });
    m.def("_spectrum", [](double theta, double phi, double tol) {
        return cmd_spectrum({theta, phi, 1.0, 1.0}, tol).to_json().dump();
    });
}
