import pytest

from bioctonion import tensor
from bioctonion.randgen import Stream
from bioctonion.scalars import Scalar
from bioctonion.tensor import (
    BILINEAR,
    COMPLEX_NORM,
    FULL,
    HERMITIAN,
    OCTONIONIC,
    REAL_NORM,
    TensorElement,
    algebra,
    canonical_real_norm_witness,
    composition_check,
    inverse,
    random_element,
    tensor_identity_suite,
    zero_divisor_witness,
)

ALGS = [("C", "O"), ("C", "Os"), ("Cs", "O"), ("Cs", "Os")]


@pytest.mark.parametrize("sk,on", ALGS)
def test_identity_suite_passes(sk, on):
    rep = tensor_identity_suite(algebra(sk, on), samples=30, seed=1)
    assert rep["all_pass"], rep


@pytest.mark.parametrize("sk,on", ALGS)
def test_octonionic_conjugation_is_central(sk, on):
    alg = algebra(sk, on)
    rng = Stream(9)
    for _ in range(20):
        b = random_element(alg, rng)
        # b * conj_oct(b) is the scalar N(b); full conjugation is not central
        p = b * b.conjugate(OCTONIONIC)
        assert p.is_scalar()
        assert p.scalar_part() == b.norm(COMPLEX_NORM)


def test_full_conjugation_not_central():
    alg = algebra("C", "O")
    i = Scalar("C", 0, 1)
    b = TensorElement.one(alg) + TensorElement.unit(alg, 1, i)
    assert not (b * b.conjugate(FULL)).is_scalar()


def test_norms_and_inner_products():
    alg = algebra("C", "Os")
    rng = Stream(2)
    b = random_element(alg, rng)
    c = random_element(alg, rng)
    assert b.norm(COMPLEX_NORM) == b.inner(b, BILINEAR)
    n = b.norm(REAL_NORM)
    assert n == b.inner(b, HERMITIAN).re and n.denominator >= 1
    # bilinear form polarizes the complex norm
    lhs = (b + c).norm(COMPLEX_NORM) - b.norm(COMPLEX_NORM) - c.norm(COMPLEX_NORM)
    assert lhs == b.inner(c, BILINEAR) + c.inner(b, BILINEAR)


def test_invertibility_iff_complex_norm_nonzero():
    alg = algebra("C", "O")
    rng = Stream(17)
    one = TensorElement.one(alg)
    for _ in range(25):
        b = random_element(alg, rng)
        if b.is_zero():
            continue
        if b.norm(COMPLEX_NORM).is_zero():
            c = zero_divisor_witness(b)
            assert c is not None and (b * c).is_zero()
        else:
            assert zero_divisor_witness(b) is None
            binv = inverse(b)
            assert b * binv == one and binv * b == one


def test_zero_divisor_canonical_pair():
    alg = algebra("C", "O")
    a, b = canonical_real_norm_witness(alg)
    assert (a * b).is_zero()
    assert a.norm(REAL_NORM) == 2 and b.norm(REAL_NORM) == 2
    assert (a * b).norm(REAL_NORM) == 0  # 0 != 4 = |a|^2 |b|^2
    with pytest.raises(ZeroDivisionError):
        inverse(a)


@pytest.mark.parametrize("sk,on", ALGS)
def test_composition_dichotomy(sk, on):
    alg = algebra(sk, on)
    assert composition_check(alg, COMPLEX_NORM, 60, 0)["pass"]
    rep = composition_check(alg, REAL_NORM, 200, 0)
    assert not rep["pass"] and rep["witness"] is not None


def test_real_scalar_algebra_matches_plain_octonions():
    alg = algebra("R", "O")
    assert alg.real_dim == 8
    rep = composition_check(alg, REAL_NORM, 60, 0)
    assert rep["pass"]  # over R the two norms agree


def test_element_json_roundtrip():
    alg = algebra("Cs", "Os")
    b = random_element(alg, Stream(23))
    assert TensorElement.from_json(b.to_json()) == b
    doc = b.to_json()
    assert doc["scalar"] == "Cs" and doc["oct"] == "Os"


def test_tensor_module_alias():
    assert tensor.algebra("C", "O") is tensor.algebra("C", "O")
