# Copyright 2026 The ybsys Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the Python extension, cross-checked with numpy."""

import math

import numpy as np
import pytest

import ybsys


def test_r_matrix_unitary():
    for q in (2, 3):
        r = ybsys.r_matrix(0.7, 1.3, q)
        assert np.allclose(r.conj().T @ r, np.eye(2 ** q), atol=1e-13)


def test_generator_squares():
    g = ybsys.generator(0.4, 3)
    assert np.allclose((-1j * g) @ (-1j * g), np.eye(8), atol=1e-13)


def test_spectrum_matches_numpy():
    h = ybsys.hamiltonian(1.0, 0.5, 1.5, 1.0)
    ours = ybsys.eigenvalues(1.0, 0.5, 1.5, 1.0)
    assert np.allclose(ours, np.linalg.eigvalsh(h), atol=1e-12)


def test_entanglement_ghz_point():
    psi = ybsys.apply_r(math.pi / 6, 0.0, "000")
    rep = ybsys.entanglement(psi)
    assert abs(rep["tau_abc"] - 1) < 1e-12
    assert rep["monogamy_residual"] < 1e-12


def test_berry_analytic():
    assert abs(ybsys.berry_analytic(5, 1.0) - ybsys.berry_closed_form(5, 1.0)) < 1e-5


def test_reports_are_dicts():
    rep = ybsys.verify_algebra(phi_samples=3)
    assert rep["command"] == "verify-algebra" and rep["pass"]
    spec = ybsys.spectrum_report(1.0)
    assert spec["results"]["degeneracy_pattern"] == [2, 4, 2]


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        ybsys.apply_r(0.1, 0.0, "0000")
    with pytest.raises(ArithmeticError):
        ybsys.berry_wilson("plus", math.pi / 2, 1000)
