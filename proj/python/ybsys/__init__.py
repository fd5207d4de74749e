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

"""Python bindings for the ybsys C++ library."""

import json

from ._ybsys import (  # noqa: F401
    InvalidInput,
    NumericalFailure,
    apply_r,
    berry_analytic,
    berry_closed_form,
    berry_wilson,
    eigenstate_fixture,
    eigenvalues,
    entanglement,
    generator,
    hamiltonian,
    one_vs_rest_sq_closed_form,
    pair_concurrence_closed_form,
    r_matrix,
    tangle_closed_form,
    ybe_residual,
)
from . import _ybsys


def verify_algebra(tol=1e-10, phi_samples=17, seed=20260101):
    return json.loads(_ybsys._verify_algebra(tol, phi_samples, seed))


def spectrum_report(theta, phi=0.0, tol=1e-10):
    return json.loads(_ybsys._spectrum(theta, phi, tol))
