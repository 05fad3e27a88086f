import pytest
from gmpy2 import mpq as Q

from bioctonion.composition import (
    Element,
    find_nonassociative_triple,
    find_zero_divisor_pair,
    identity_suite,
    random_element,
    standard_table,
)
from bioctonion.randgen import Stream

NAMES = ["R", "C", "Cs", "H", "Hs", "O", "Os"]
DIMS = {"R": 1, "C": 2, "Cs": 2, "H": 4, "Hs": 4, "O": 8, "Os": 8}


@pytest.mark.parametrize("name", NAMES)
def test_table_dims_and_unit_squares(name):
    t = standard_table(name)
    assert t.dim == DIMS[name]
    # imaginary unit squares are +-1 and e_k^2 = unit_squares[k-1] * 1
    for k, s in enumerate(t.unit_squares, start=1):
        assert s in (1, -1)
        u = Element.unit(t, k)
        sq = u * u
        assert sq == s * Element.one(t)


def test_norm_signatures():
    assert standard_table("O").norm_signature() == (8, 0)
    assert standard_table("Os").norm_signature() == (4, 4)
    assert standard_table("C").norm_signature() == (2, 0)
    assert standard_table("Cs").norm_signature() == (1, 1)
    assert standard_table("Hs").norm_signature() == (2, 2)


@pytest.mark.parametrize("name", NAMES)
def test_identity_suite_passes(name):
    rep = identity_suite(standard_table(name), samples=40, seed=3)
    assert rep["all_pass"], rep


@pytest.mark.parametrize("name", NAMES)
def test_conjugation_and_norm(name):
    t = standard_table(name)
    rng = Stream(11)
    one = Element.one(t)
    for _ in range(30):
        x = random_element(t, rng)
        y = random_element(t, rng)
        # conj is an anti-automorphism and x * conj(x) = N(x) * 1
        assert (x * y).conj() == y.conj() * x.conj()
        assert x * x.conj() == x.norm_form() * one
        assert (x * y).norm_form() == x.norm_form() * y.norm_form()


def test_quaternions_associative_octonions_not():
    assert find_nonassociative_triple(standard_table("H")) is None
    trip = find_nonassociative_triple(standard_table("O"))
    assert trip is not None
    x, y, z = trip
    assert (x * y) * z != x * (y * z)


def test_zero_divisors_split_only():
    for name in ("Cs", "Hs", "Os"):
        pair = find_zero_divisor_pair(standard_table(name))
        assert pair is not None
        x, y = pair
        assert not x.is_zero() and not y.is_zero() and (x * y).is_zero()
    assert find_zero_divisor_pair(standard_table("O")) is None
    assert find_zero_divisor_pair(standard_table("H")) is None


def test_scalar_part_and_inner():
    t = standard_table("O")
    rng = Stream(5)
    x = random_element(t, rng)
    y = random_element(t, rng)
    # polarization: 2<x, y> = N(x + y) - N(x) - N(y)
    assert 2 * x.inner(y) == (x + y).norm_form() - x.norm_form() - y.norm_form()
    assert x.scalar_part() == x.coeffs[0]


def test_element_json_roundtrip():
    t = standard_table("Os")
    x = Element(t, [Q(1, 2), Q(-3), Q(0), Q(5, 7), Q(1), Q(0), Q(-1, 4), Q(2)])
    assert Element.from_json(x.to_json()) == x


def test_stream_is_deterministic():
    a = [Stream(42).rational() for _ in range(20)]
    b = [Stream(42).rational() for _ in range(20)]
    assert a == b
    assert any(x != y for x, y in zip(a, [Stream(43).rational() for _ in range(20)]))
