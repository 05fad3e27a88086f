import numpy as np
import pytest
from gmpy2 import mpq as Q

from bioctonion.linalg import (
    certified_nullspace,
    nullspace_exact,
    rank_exact,
    signature_exact,
    signature_float,
    solve_in_span,
)


def test_rank_exact_small():
    assert rank_exact([[Q(1), Q(2)], [Q(2), Q(4)]]) == 1
    assert rank_exact([[Q(1), Q(0)], [Q(0), Q(1)]]) == 2
    assert rank_exact([]) == 0
    assert rank_exact([[Q(0), Q(0)]]) == 0


def test_nullspace_exact_known_kernel():
    rows = [[Q(1), Q(2), Q(3), Q(4)], [Q(2), Q(4), Q(6), Q(8)], [Q(0), Q(1), Q(1), Q(1)]]
    basis = nullspace_exact(rows, 4)
    assert len(basis) == 2
    for v in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, v)) == 0


def test_solve_in_span():
    basis = [[Q(1), Q(0), Q(1)], [Q(0), Q(1), Q(1)]]
    target = [Q(2), Q(3), Q(5)]
    coeffs = solve_in_span(basis, target, 3)
    assert coeffs == [Q(2), Q(3)]
    assert solve_in_span(basis, [Q(0), Q(0), Q(1)], 3) is None


def test_certified_nullspace_matches_exact():
    rng = np.random.default_rng(7)
    a = rng.integers(-9, 10, size=(12, 8))
    ns = certified_nullspace(a)
    exact = nullspace_exact([[Q(int(x)) for x in row] for row in a], 8)
    assert ns.dim == len(exact)
    assert ns.rank == 8 - ns.dim
    for j in range(ns.dim):
        v = ns.vector_q(j)
        for row in a:
            assert sum(Q(int(x)) * c for x, c in zip(row, v)) == 0


def test_certified_nullspace_rational_entries():
    # kernel of [[2, 3]] is spanned by (1, -2/3): reconstruction must recover
    # the fraction
    ns = certified_nullspace(np.array([[2, 3]]))
    assert ns.dim == 1
    v = ns.vector_q(0)
    assert 2 * v[0] + 3 * v[1] == 0 and any(x != 0 for x in v)


def test_certified_nullspace_full_rank():
    ns = certified_nullspace(np.array([[1, 0], [0, 1], [3, 5]]))
    assert ns.dim == 0 and ns.rank == 2


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_signature_exact_congruence_invariant(seed):
    rng = np.random.default_rng(seed)
    n = 6
    signs = [1, 1, 1, -1, -1, 0]
    d = np.diag(signs)
    while True:
        s = rng.integers(-3, 4, size=(n, n))
        if round(abs(np.linalg.det(s))) != 0:
            break
    m = s.T @ d @ s
    assert signature_exact([[Q(int(x)) for x in row] for row in m]) == (3, 2, 1)
    assert signature_float(m.astype(float)) == (3, 2, 1)


def test_signature_zero_diagonal_pivot():
    # hyperbolic plane: all-zero diagonal, signature (1, 1)
    m = [[Q(0), Q(1)], [Q(1), Q(0)]]
    assert signature_exact(m) == (1, 1, 0)
    m = [[Q(0), Q(1), Q(0)], [Q(1), Q(-2), Q(0)], [Q(0), Q(0), Q(3)]]
    pos, neg, zero = signature_exact(m)
    assert pos + neg == 3 and zero == 0
