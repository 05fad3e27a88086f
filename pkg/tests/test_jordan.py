import pytest
from gmpy2 import mpq as Q

from bioctonion.jordan import (
    IDENTITY_METRIC,
    LORENTZ_METRIC,
    HermMatrix3,
    centrality_check,
    hamilton_cayley_report,
    hermitian_basis,
    hermitian_coords,
    hermitian_dim,
    jordan_closure_report,
    matrix_from_json,
    matrix_to_json,
    pretty,
    random_hermitian,
)
from bioctonion.randgen import Stream
from bioctonion.scalars import Scalar
from bioctonion.tensor import FULL, OCTONIONIC, TensorElement, algebra, random_element
from bioctonion.veronese import (
    COMPLEX,
    REAL,
    PlaneKind,
    random_complex_veronese,
    real_veronese_slot_point,
)

SPACES = [
    (algebra("R", "O"), OCTONIONIC, IDENTITY_METRIC),
    (algebra("R", "Os"), OCTONIONIC, IDENTITY_METRIC),
    (algebra("C", "O"), OCTONIONIC, IDENTITY_METRIC),
    (algebra("C", "O"), FULL, IDENTITY_METRIC),
    (algebra("R", "O"), OCTONIONIC, LORENTZ_METRIC),
]


@pytest.mark.parametrize("alg,conj,metric", SPACES)
def test_space_closed_under_jordan_product(alg, conj, metric):
    rep = jordan_closure_report(alg, samples=8, seed=5, conj_kind=conj, metric=metric)
    assert rep["pass"], rep


def test_hermitian_dims():
    assert hermitian_dim(algebra("R", "O")) == 27
    assert hermitian_dim(algebra("R", "Os")) == 27
    assert hermitian_dim(algebra("C", "O")) == 54
    # full conjugation fixes 1 and i*e1..i*e7 on the diagonal: 3*8 + 3*16
    assert hermitian_dim(algebra("C", "O"), FULL) == 72


@pytest.mark.parametrize("alg,conj,metric", SPACES)
def test_basis_and_coords_roundtrip(alg, conj, metric):
    basis = hermitian_basis(alg, conj, metric)
    assert len(basis) == hermitian_dim(alg, conj)
    m = random_hermitian(alg, Stream(7), conj, metric)
    assert m.is_hermitian()
    coords = hermitian_coords(m)
    acc = HermMatrix3.zero(alg, conj, metric)
    for c, e in zip(coords, basis):
        acc = acc + e.scale(c)
    assert acc == m
    # basis elements have unit-vector coordinates
    for k, e in enumerate(basis[:6]):
        ck = hermitian_coords(e)
        assert ck[k] == 1 and all(c == 0 for i, c in enumerate(ck) if i != k)


def test_trace_and_trace_form():
    alg = algebra("R", "O")
    rng = Stream(3)
    a = random_hermitian(alg, rng)
    b = random_hermitian(alg, rng)
    assert HermMatrix3.identity(alg).trace() == Scalar("R", 3)
    assert a.trace_form(b) == b.trace_form(a)
    assert a.trace_form(HermMatrix3.identity(alg)) == a.trace()


@pytest.mark.parametrize("alg", [algebra("R", "O"), algebra("R", "Os"), algebra("C", "O")])
def test_det_sharp_and_rank_basics(alg):
    one = Scalar(alg.scalar_kind, 1)
    ident = HermMatrix3.identity(alg)
    assert ident.det() == one
    assert ident.sharp() == ident
    assert ident.rank() == 3
    assert HermMatrix3.zero(alg).rank() == 0
    e11 = HermMatrix3.from_parts(alg, (one, 0 * one, 0 * one),
                                 tuple(TensorElement.zero(alg) for _ in range(3)))
    assert e11.rank() == 1
    d110 = HermMatrix3.from_parts(alg, (one, one, 0 * one),
                                  tuple(TensorElement.zero(alg) for _ in range(3)))
    assert d110.rank() == 2 and d110.det() == 0 * one


def test_sharp_of_sharp_is_det_times_matrix():
    # A## = det(A) * A, a classic consequence of the adjoint identities
    alg = algebra("R", "O")
    rng = Stream(9)
    for _ in range(5):
        a = random_hermitian(alg, rng)
        lhs = a.sharp().sharp()
        rhs = a.scale(a.det())
        assert lhs == rhs


@pytest.mark.parametrize("alg", [algebra("R", "O"), algebra("R", "Os"), algebra("C", "O")])
def test_hamilton_cayley_random(alg):
    rep = hamilton_cayley_report(alg, samples=10, seed=1)
    assert rep["pass"], rep


def test_veronese_triples_are_rank_one():
    kc = PlaneKind(COMPLEX, algebra("C", "O"))
    rng = Stream(13)
    for _ in range(10):
        a = HermMatrix3.from_veronese(random_complex_veronese(kc, rng))
        assert a.sharp().is_zero()
        assert a.det().is_zero()
        assert a.rank() <= 1
    # a generic Hermitian matrix is rank 3
    assert random_hermitian(algebra("C", "O"), rng).rank() == 3


def test_real_variant_triples_refuse_cubic_maps():
    kr = PlaneKind(REAL, algebra("C", "O"))
    a = HermMatrix3.from_veronese(real_veronese_slot_point(kr, Stream(2)))
    assert a.conj_kind == FULL
    with pytest.raises(ValueError):
        a.det()
    with pytest.raises(ValueError):
        a.sharp()
    with pytest.raises(ValueError):
        a.rank()


def test_lorentz_metric_refuses_cubic_maps():
    a = random_hermitian(algebra("R", "O"), Stream(4), OCTONIONIC, LORENTZ_METRIC)
    assert a.is_hermitian()
    with pytest.raises(ValueError):
        a.det()


def test_full_conjugation_space_is_not_a_jordan_algebra():
    rep = centrality_check(algebra("C", "O"), samples=10, seed=0)
    assert not rep["jordan_identity_pass"]
    assert rep["jordan_identity_witness"] is not None


def test_json_roundtrip_and_pretty():
    for alg, conj, metric in SPACES:
        m = random_hermitian(alg, Stream(31), conj, metric)
        assert matrix_from_json(matrix_to_json(m)) == m
    text = pretty(m)
    assert isinstance(text, str) and text.count("\n") >= 2
