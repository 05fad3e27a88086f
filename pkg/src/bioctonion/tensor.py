"""Tensor algebras (C or Cs) x (O or Os): both conjugations, both inner
products and norms, zero-divisor detection and the composition dichotomy.

A single element representation (8 scalar-ring coefficients over an octonion
table) carries all four algebras; the algebra tag decides which conjugation,
norm and inner product apply.  Plain octonions are recovered with the "R"
scalar ring, which is how the Jordan layer treats O and Os uniformly.
"""

from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq as Q

from . import scalars
from .composition import standard_table
from .randgen import Stream
from .scalars import Scalar

OCTONIONIC = "octonionic"   # negates the octonion units only; central
FULL = "full"               # additionally conjugates every scalar; not central

COMPLEX_NORM = "complex"    # N(b) = sum q_a z_a^2, valued in the scalar ring
REAL_NORM = "real"          # |b|^2 = sum q_a |z_a|^2, valued in Q

BILINEAR = "bilinear"       # <b1,b2> = sum q_a z1_a z2_a
HERMITIAN = "hermitian"     # <b1,b2> = sum q_a conj(z1_a) z2_a


@dataclass(frozen=True)
class TensorAlgebra:
    scalar_kind: str          # "R", "C" or "Cs"
    oct_name: str             # "O" or "Os"

    def __post_init__(self):
        if self.scalar_kind not in scalars.KINDS:
            raise ValueError(f"unknown scalar ring {self.scalar_kind!r}")
        if self.oct_name not in ("O", "Os"):
            raise ValueError("octonion factor must be O or Os")

    @property
    def table(self):
        return standard_table(self.oct_name)

    @property
    def real_dim(self):
        return 8 if self.scalar_kind == "R" else 16

    def zero_scalar(self):
        return Scalar(self.scalar_kind, 0)

    def __repr__(self):
        if self.scalar_kind == "R":
            return f"TensorAlgebra({self.oct_name})"
        return f"TensorAlgebra({self.scalar_kind}x{self.oct_name})"


@lru_cache(maxsize=None)
def algebra(scalar_kind, oct_name):
    return TensorAlgebra(scalar_kind, oct_name)


class TensorElement:
    __slots__ = ("alg", "z")

    def __init__(self, alg, z):
        z = tuple(c if isinstance(c, Scalar) else Scalar(alg.scalar_kind, c) for c in z)
        if len(z) != 8:
            raise ValueError("tensor elements have 8 scalar coefficients")
        for c in z:
            if c.kind != alg.scalar_kind:
                raise ValueError("coefficient from the wrong scalar ring")
        self.alg = alg
        self.z = z

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, alg):
        return cls(alg, [alg.zero_scalar()] * 8)

    @classmethod
    def one(cls, alg):
        return cls.from_scalar(alg, Scalar(alg.scalar_kind, 1))

    @classmethod
    def unit(cls, alg, k, coeff=1):
        z = [alg.zero_scalar()] * 8
        z[k] = coeff if isinstance(coeff, Scalar) else Scalar(alg.scalar_kind, coeff)
        return cls(alg, z)

    @classmethod
    def from_scalar(cls, alg, s):
        z = [alg.zero_scalar()] * 8
        z[0] = s if isinstance(s, Scalar) else Scalar(alg.scalar_kind, s)
        return cls(alg, z)

    @classmethod
    def from_real_coords(cls, alg, xs, ys):
        """Build from the R^16 view z_a = x_a + i y_a."""
        return cls(alg, [Scalar(alg.scalar_kind, x, y) for x, y in zip(xs, ys)])

    def real_coords(self):
        return [c.re for c in self.z], [c.im for c in self.z]

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.alg is not other.alg and self.alg != other.alg:
            raise ValueError("elements belong to different tensor algebras")

    def __add__(self, other):
        self._check(other)
        return TensorElement(self.alg, [a + b for a, b in zip(self.z, other.z)])

    def __sub__(self, other):
        self._check(other)
        return TensorElement(self.alg, [a - b for a, b in zip(self.z, other.z)])

    def __neg__(self):
        return TensorElement(self.alg, [-a for a in self.z])

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            self._check(other)
            t = self.alg.table
            kind = self.alg.scalar_kind
            s = scalars._UNIT_SQ[kind]
            idx = t.prod_index
            sgn = t.prod_sign
            zero = Q(0)
            # accumulate on plain (re, im) rationals; building Scalar
            # objects per term dominates the runtime otherwise
            re_out = [zero] * 8
            im_out = [zero] * 8
            rhs = [(j, b.re, b.im) for j, b in enumerate(other.z)
                   if b.re or b.im]
            for i, a in enumerate(self.z):
                are, aim = a.re, a.im
                if not are and not aim:
                    continue
                row_i, row_s = idx[i], sgn[i]
                for j, bre, bim in rhs:
                    pre = are * bre + s * aim * bim
                    pim = are * bim + aim * bre
                    k = row_i[j]
                    if row_s[j] < 0:
                        re_out[k] -= pre
                        im_out[k] -= pim
                    else:
                        re_out[k] += pre
                        im_out[k] += pim
            return TensorElement(
                self.alg,
                [Scalar(kind, r, i) for r, i in zip(re_out, im_out)],
            )
        # scalar (Scalar, mpq or int) multiplication; real scalars promote
        if isinstance(other, Scalar):
            s = Scalar(self.alg.scalar_kind, other.re) if other.kind == "R" else other
        else:
            s = Scalar(self.alg.scalar_kind, Q(other))
        return TensorElement(self.alg, [s * c for c in self.z])

    def __rmul__(self, other):
        return self.__mul__(other)

    # -- conjugations and norms --------------------------------------------

    def conjugate(self, kind=OCTONIONIC):
        if kind == OCTONIONIC:
            return TensorElement(self.alg, (self.z[0],) + tuple(-c for c in self.z[1:]))
        if kind == FULL:
            return TensorElement(
                self.alg,
                (self.z[0].conjugate(),) + tuple(-c.conjugate() for c in self.z[1:]),
            )
        raise ValueError(f"unknown conjugation {kind!r}")

    def norm(self, kind=COMPLEX_NORM):
        q = self.alg.table.norm_coeffs()
        if kind == COMPLEX_NORM:
            acc = self.alg.zero_scalar()
            for qk, c in zip(q, self.z):
                acc = acc + qk * (c * c)
            return acc
        if kind == REAL_NORM:
            # the real norm comes from the full conjugation; for split
            # scalars the "absolute value" re^2 - im^2 is indefinite, and the
            # split octonion factor contributes its own signs
            return sum((qk * c.sq_abs() for qk, c in zip(q, self.z)), Q(0))
        raise ValueError(f"unknown norm kind {kind!r}")

    def inner(self, other, kind=BILINEAR):
        self._check(other)
        q = self.alg.table.norm_coeffs()
        acc = self.alg.zero_scalar()
        for qk, a, b in zip(q, self.z, other.z):
            t = (a.conjugate() if kind == HERMITIAN else a) * b
            acc = acc + qk * t
        return acc

    def scalar_part(self):
        return self.z[0]

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return all(c.is_zero() for c in self.z)

    def is_scalar(self):
        return all(c.is_zero() for c in self.z[1:])

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.alg == other.alg
            and self.z == other.z
        )

    def __hash__(self):
        return hash((self.alg, self.z))

    def __repr__(self):
        terms = [f"{c!r}*i{k}" if k else repr(c) for k, c in enumerate(self.z) if not c.is_zero()]
        return " + ".join(terms) if terms else "0"

    def to_json(self):
        return {
            "scalar": self.alg.scalar_kind,
            "oct": self.alg.oct_name,
            "z": [[str(c.re), str(c.im)] for c in self.z],
        }

    @classmethod
    def from_json(cls, doc):
        alg = algebra(doc["scalar"], doc["oct"])
        return cls(alg, [Scalar(alg.scalar_kind, Q(re), Q(im)) for re, im in doc["z"]])


# ---------------------------------------------------------------------------
# zero divisors and inverses
# ---------------------------------------------------------------------------

def zero_divisor_witness(b):
    """A nonzero c with b*c = 0 when N(b) = 0, else None.

    The octonionic conjugate always works: b * conj(b) = N(b) * 1.
    """
    if b.is_zero():
        raise ValueError("zero element has no zero-divisor status")
    if not b.norm(COMPLEX_NORM).is_zero():
        return None
    return b.conjugate(OCTONIONIC)


def inverse(b):
    """b^-1 = conj(b)/N(b); raises ZeroDivisionError when N(b) = 0."""
    n = b.norm(COMPLEX_NORM)
    if n.is_zero():
        raise ZeroDivisionError("element with vanishing complex norm is a zero divisor")
    return b.conjugate(OCTONIONIC) * n.inverse()


def random_element(alg, rng):
    if alg.scalar_kind == "R":
        return TensorElement(alg, [Scalar("R", rng.rational()) for _ in range(8)])
    return TensorElement(
        alg, [Scalar(alg.scalar_kind, rng.rational(), rng.rational()) for _ in range(8)]
    )


def tensor_identity_suite(alg, samples, seed):
    """Alternativity / Moufang / composition checks on a tensor algebra."""
    from .composition import _suite_checks

    rng = Stream(seed)
    checks = _suite_checks(
        TensorElement.one(alg),
        lambda r: random_element(alg, r),
        lambda x: x.norm(COMPLEX_NORM),
        samples,
        rng,
    )
    return {
        "algebra": repr(alg),
        "samples": samples,
        "seed": seed,
        "checks": checks,
        "all_pass": all(c["pass"] for c in checks.values()),
    }


def composition_check(alg, norm_kind, samples, seed):
    """PASS/FAIL report for N(ab) = N(a)N(b) under the chosen norm."""
    rng = Stream(seed)
    witness = None
    for _ in range(samples):
        a = random_element(alg, rng)
        b = random_element(alg, rng)
        if norm_kind == COMPLEX_NORM:
            lhs = (a * b).norm(COMPLEX_NORM)
            rhs = a.norm(COMPLEX_NORM) * b.norm(COMPLEX_NORM)
            equal = lhs == rhs
        else:
            lhs = (a * b).norm(REAL_NORM)
            rhs = a.norm(REAL_NORM) * b.norm(REAL_NORM)
            equal = lhs == rhs
        if not equal:
            witness = {"a": a.to_json(), "b": b.to_json(), "lhs": str(lhs), "rhs": str(rhs)}
            break
    return {
        "algebra": repr(alg),
        "norm": norm_kind,
        "samples": samples,
        "seed": seed,
        "pass": witness is None,
        "witness": witness,
    }


def canonical_real_norm_witness(alg):
    """The pair a = 1 + i*e1, b = 1 - i*e1 with |ab|^2 = 0 != |a|^2 |b|^2."""
    if alg.scalar_kind != "C":
        raise ValueError("canonical witness lives over the C scalar ring")
    i = scalars.unit("C")
    a = TensorElement.one(alg) + TensorElement.unit(alg, 1, i)
    b = TensorElement.one(alg) - TensorElement.unit(alg, 1, i)
    return a, b
