import numpy as np
import pytest

from bioctonion.liealg import (
    composition_carrier,
    coset_dimensions,
    derivation_report,
    derivation_span,
    jordan_carrier,
    matrix_model_dimension,
    matrix_model_report,
    tensor_carrier,
)


def test_composition_carrier_structure():
    c = composition_carrier("O")
    assert c.struct.shape == (8, 8, 8)
    # unit element: 1 * e_k = e_k
    assert (c.struct[0] == np.eye(8, dtype=np.int64) * c.denom).all()
    assert not c.commutative


def test_tensor_carrier_structure():
    c = tensor_carrier("C", "O")
    assert c.struct.shape == (16, 16, 16)
    assert (c.struct[0] == np.eye(16, dtype=np.int64) * c.denom).all()


def test_jordan_carrier_is_commutative():
    c = jordan_carrier("R", "O")
    assert c.struct.shape == (27, 27, 27)
    assert c.commutative
    assert (c.struct == c.struct.transpose(1, 0, 2)).all()


@pytest.mark.parametrize("key,dim,char", [("O", 14, -14), ("Os", 14, 2)])
def test_octonion_derivations(key, dim, char):
    rep = derivation_report(key)
    assert rep["dim"] == dim
    assert rep["character"] == char
    assert rep["paths_agree"]


def test_tensor_derivations_are_realified():
    # derivations of the 16-dim tensor algebra: twice the octonion count,
    # split-signature Killing form (character 0)
    rep = derivation_report("CxO")
    assert rep["dim"] == 28
    assert rep["character"] == 0


def test_derivations_annihilate_unit_and_close():
    span = derivation_span("O")
    mats = span.operator_mats(np.int64)
    for m in mats:
        assert (m[:, 0] == 0).all()  # D(1) = 0
    t = span.structure()
    k = span.killing_int()
    assert (t == -t.transpose(1, 0, 2)).all()
    assert (k == k.T).all()


def test_matrix_models():
    assert matrix_model_dimension("a3", "O") == 64
    assert matrix_model_dimension("sa3", "O") == 38
    assert matrix_model_dimension("sa3", "CxO") == 64
    rep = matrix_model_report()
    assert rep["collineation_sum"] == {"value": 78, "expected": 78, "pass": True}
    assert rep["isometry_sum"] == {"value": 52, "expected": 52, "pass": True}
    assert rep["bioctonionic_sum"] == {"value": 78, "expected": 78, "pass": True}


def test_coset_dimensions():
    rep = coset_dimensions()
    assert rep["octonionic_projective"]["dim"] == 16
    assert rep["octonionic_projective"]["pass"]
    assert rep["bioctonionic_projective"]["dim"] == 32
    assert rep["bioctonionic_projective"]["pass"]
