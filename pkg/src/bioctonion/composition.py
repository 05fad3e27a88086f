"""Composition algebras R, C, Cs, H, Hs, O, Os by iterated Cayley-Dickson
doubling, with exact rational coefficients.

The doubling rule used throughout is

    (a,b)(c,d) = (ac + g*(d b*), a*d + cb),      (a,b)* = (a*, -b)

with parameter g = -1 at every step for the division series and g = +1 at
the last step for the split series.  Unit products are always +/- another
unit, so a table of signed indices describes the whole algebra.  No attempt
is made to match any particular Fano-plane orientation: correctness is
established by the identity suite, not by matching a figure.
"""

from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq as Q

from .randgen import Stream

DOUBLING = {
    "R": (),
    "C": (-1,),
    "Cs": (1,),
    "H": (-1, -1),
    "Hs": (-1, 1),
    "O": (-1, -1, -1),
    "Os": (-1, -1, 1),
}


@dataclass(frozen=True)
class CompositionTable:
    name: str
    dim: int
    generation: tuple          # Cayley-Dickson parameters, in doubling order
    prod_index: tuple          # prod_index[i][j] = k with e_i e_j = sign * e_k
    prod_sign: tuple           # the corresponding sign, in {-1, +1}

    @property
    def unit_squares(self):
        """Signs s_k = e_k^2 for k >= 1."""
        return tuple(self.prod_sign[k][k] for k in range(1, self.dim))

    def norm_coeffs(self):
        """q_k with N(x) = sum q_k x_k^2; q_0 = 1, q_k = -e_k^2 for k >= 1."""
        return (1,) + tuple(-s for s in self.unit_squares)

    def norm_signature(self):
        q = self.norm_coeffs()
        return (sum(1 for s in q if s > 0), sum(1 for s in q if s < 0))

    def __repr__(self):
        return f"CompositionTable({self.name}, dim={self.dim})"


def _double(index, sign, gamma):
    n = len(index)
    m = 2 * n

    def conj_sign(i):
        return 1 if i == 0 else -1

    idx = [[0] * m for _ in range(m)]
    sgn = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            if i < n and j < n:
                idx[i][j] = index[i][j]
                sgn[i][j] = sign[i][j]
            elif i < n <= j:
                jj = j - n
                # (e_i,0)(0,e_jj) = (0, e_i* e_jj)
                idx[i][j] = n + index[i][jj]
                sgn[i][j] = conj_sign(i) * sign[i][jj]
            elif j < n <= i:
                ii = i - n
                # (0,e_ii)(e_j,0) = (0, e_j e_ii)
                idx[i][j] = n + index[j][ii]
                sgn[i][j] = sign[j][ii]
            else:
                ii, jj = i - n, j - n
                # (0,e_ii)(0,e_jj) = (gamma * e_jj e_ii*, 0)
                idx[i][j] = index[jj][ii]
                sgn[i][j] = gamma * conj_sign(ii) * sign[jj][ii]
    return idx, sgn


@lru_cache(maxsize=None)
def standard_table(name):
    if name not in DOUBLING:
        raise ValueError(f"unknown composition algebra {name!r}")
    index = [[0]]
    sign = [[1]]
    for gamma in DOUBLING[name]:
        index, sign = _double(index, sign, gamma)
    return CompositionTable(
        name=name,
        dim=len(index),
        generation=DOUBLING[name],
        prod_index=tuple(tuple(r) for r in index),
        prod_sign=tuple(tuple(r) for r in sign),
    )


class Element:
    """Element of a composition algebra, with exact rational coefficients."""

    __slots__ = ("table", "coeffs")

    def __init__(self, table, coeffs):
        coeffs = tuple(Q(c) for c in coeffs)
        if len(coeffs) != table.dim:
            raise ValueError(f"expected {table.dim} coefficients, got {len(coeffs)}")
        self.table = table
        self.coeffs = coeffs

    @classmethod
    def zero(cls, table):
        return cls(table, (0,) * table.dim)

    @classmethod
    def one(cls, table):
        return cls(table, (1,) + (0,) * (table.dim - 1))

    @classmethod
    def unit(cls, table, k):
        c = [0] * table.dim
        c[k] = 1
        return cls(table, c)

    def _check(self, other):
        if self.table is not other.table:
            raise ValueError("elements belong to different tables")

    def __add__(self, other):
        self._check(other)
        return Element(self.table, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return Element(self.table, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Element(self.table, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            t = self.table
            out = [Q(0)] * t.dim
            idx = t.prod_index
            sgn = t.prod_sign
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                row_i, row_s = idx[i], sgn[i]
                for j, b in enumerate(other.coeffs):
                    if b == 0:
                        continue
                    out[row_i[j]] += row_s[j] * a * b
            return Element(t, out)
        return Element(self.table, tuple(Q(other) * a for a in self.coeffs))

    def __rmul__(self, other):
        return Element(self.table, tuple(Q(other) * a for a in self.coeffs))

    def conj(self):
        return Element(self.table, (self.coeffs[0],) + tuple(-a for a in self.coeffs[1:]))

    def norm_form(self):
        """Scalar part of x * conj(x)."""
        q = self.table.norm_coeffs()
        return sum((qk * c * c for qk, c in zip(q, self.coeffs)), Q(0))

    def inner(self, other):
        """Polarized norm form: <x,y> with <x,x> = N(x)."""
        self._check(other)
        q = self.table.norm_coeffs()
        return sum((qk * a * b for qk, a, b in zip(q, self.coeffs, other.coeffs)), Q(0))

    def scalar_part(self):
        return self.coeffs[0]

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.table is other.table
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.table.name, self.coeffs))

    def __repr__(self):
        terms = [f"{c}*e{k}" for k, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(terms) if terms else "0"

    def to_json(self):
        return {"table": self.table.name, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc):
        table = standard_table(doc["table"])
        return cls(table, [Q(c) for c in doc["coeffs"]])


def random_element(table, rng):
    return Element(table, [rng.rational() for _ in range(table.dim)])


# ---------------------------------------------------------------------------
# identity suite
# ---------------------------------------------------------------------------

def _suite_checks(one, rand, norm, samples, rng):
    checks = {}

    def record(name, fail_witness):
        checks[name] = {"pass": fail_witness is None, "witness": fail_witness}

    def scan(name, pred, nargs):
        for _ in range(samples):
            args = [rand(rng) for _ in range(nargs)]
            if not pred(*args):
                record(name, [repr(a) for a in args])
                return
        record(name, None)

    scan("unit_law", lambda x: one * x == x and x * one == x, 1)
    scan("left_alternative", lambda x, y: x * (x * y) == (x * x) * y, 2)
    scan("right_alternative", lambda x, y: (y * x) * x == y * (x * x), 2)
    scan("flexible", lambda x, y: x * (y * x) == (x * y) * x, 2)
    scan("moufang_1", lambda z, x, y: z * (x * (z * y)) == ((z * x) * z) * y, 3)
    scan("moufang_2", lambda z, x, y: x * (z * (y * z)) == ((x * z) * y) * z, 3)
    scan("moufang_3", lambda z, x, y: (z * x) * (y * z) == (z * (x * y)) * z, 3)
    if norm is not None:
        scan("composition", lambda x, y: norm(x * y) == norm(x) * norm(y), 2)
    return checks


def identity_suite(table, samples, seed):
    """Exact alternativity / Moufang / composition checks on random elements."""
    rng = Stream(seed)
    checks = _suite_checks(
        Element.one(table),
        lambda r: random_element(table, r),
        lambda x: x.norm_form(),
        samples,
        rng,
    )
    return {
        "algebra": table.name,
        "samples": samples,
        "seed": seed,
        "checks": checks,
        "all_pass": all(c["pass"] for c in checks.values()),
    }


def find_nonassociative_triple(table):
    """A witness (x, y, z) with (xy)z != x(yz), or None if associative."""
    units = [Element.unit(table, k) for k in range(table.dim)]
    for x in units:
        for y in units:
            for z in units:
                if (x * y) * z != x * (y * z):
                    return x, y, z
    return None


def find_zero_divisor_pair(table, tries=2000, seed=0):
    """Nonzero x, y with x*y = 0, or None (e.g. for division algebras)."""
    # isotropic vectors exist iff the norm form is indefinite; search along
    # unit pairs first, then randomly
    one = Element.one(table)
    for k, s in enumerate(table.unit_squares, start=1):
        if s == 1:
            u = Element.unit(table, k)
            x = one + u
            y = one - u
            if (x * y).is_zero():
                return x, y
    rng = Stream(seed)
    for _ in range(tries):
        x = random_element(table, rng)
        if x.is_zero() or x.norm_form() != 0:
            continue
        y = x.conj()
        if not y.is_zero() and (x * y).is_zero():
            return x, y
    return None
