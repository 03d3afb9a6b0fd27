# Copyright 2026 The numphase Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the Python bindings."""

import json
import math

import numpy as np
import pytest

import numphase as np_mod


def test_version_present():
    assert np_mod.__version__


def test_equatorial_knowledge_anchor():
    state = np_mod.make_equatorial(0.0)
    kernel = np_mod.PhaseKernel.su2(2)
    dist = np_mod.phase_distribution(state, kernel, 4096)
    r = np_mod.knowledge_phase(dist).bits
    assert r == pytest.approx(0.244774819854308, abs=1e-9)


def test_glauber_number_entropy():
    state = np_mod.make_glauber_coherent(2.0, 1e-12)
    h = np_mod.shannon_entropy_number(np_mod.number_distribution(state)).bits
    assert h == pytest.approx(3.010432356076651, abs=1e-9)


def test_matrix_is_numpy_complex():
    state = np_mod.make_atomic_coherent(math.pi / 3, 0.25, 4)
    mat = state.matrix()
    assert isinstance(mat, np.ndarray)
    assert mat.shape == (4, 4)
    assert mat.dtype == np.complex128
    assert np.trace(mat).real == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(mat, mat.conj().T)


def test_excess_report_fields():
    pair = np_mod.BasisPair.computational_vs_dft(3)
    state = np_mod.make_random_pure(5, 3)
    rep = np_mod.excess_finite(state, pair)
    assert rep.x >= rep.bound - 1e-9
    assert rep.satisfied
    doc = json.loads(np_mod.excess_to_json_text(rep))
    assert list(doc.keys()) == ["h_a", "r_b", "x", "bound", "mu", "satisfied"]


def test_small_mu_search():
    report = np_mod.search_mu(2, np_mod.PhaseKernel.su2(2), 2000, 0, 1024, 200)
    assert 4.0 < report.mu_estimate < 4.09
    assert report.certified_floor == report.mu_estimate
    assert report.audit_min_ratio >= report.mu_estimate - 1e-9


def test_state_json_round_trip():
    state = np_mod.make_atomic_coherent(math.pi / 2, 0.0, 2)
    text = np_mod.state_to_json_text(state)
    doc = json.loads(text)
    assert doc["kind"] == "atomic"
    assert doc["dim"] == 2
    back = np_mod.state_from_json_text(text)
    assert np.allclose(back.matrix(), state.matrix(), atol=1e-15)
