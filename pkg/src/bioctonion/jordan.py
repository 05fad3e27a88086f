"""Cubic Jordan algebras of 3x3 Hermitian matrices over octonion and
tensor-octonion coefficients.

Hermiticity is taken with respect to a choice of conjugation (octonionic or
full) and a diagonal metric eta with entries +/-1:

    A[j][i] = eta_i eta_j sigma(A[i][j])

The Jordan product A o B = (AB + BA)/2 always closes on this space because
both conjugations are anti-automorphisms of the coefficient algebra.  The
cubic determinant, the adjoint (sharp) map, the rank stratification and the
Hamilton-Cayley identity are only provided for the octonionic conjugation
with the identity metric: they rely on the conjugation being central (b
times its conjugate is a scalar), which fails for the full conjugation.
"""

from gmpy2 import mpq as Q

from . import scalars
from .scalars import Scalar
from .tensor import (
    COMPLEX_NORM,
    FULL,
    OCTONIONIC,
    TensorElement,
    algebra,
    random_element,
)

IDENTITY_METRIC = (1, 1, 1)
LORENTZ_METRIC = (1, 1, -1)

# off-diagonal slots: b_1 <-> (1,2), b_2 <-> (2,0), b_3 <-> (0,1)
_OFF_SLOTS = ((1, 2), (2, 0), (0, 1))


class HermMatrix3:
    """3x3 matrix over a tensor algebra, Hermitian for (conj_kind, metric)."""

    __slots__ = ("alg", "conj_kind", "metric", "entries")

    def __init__(self, alg, entries, conj_kind=OCTONIONIC, metric=IDENTITY_METRIC,
                 check=False):
        self.alg = alg
        self.conj_kind = conj_kind
        self.metric = tuple(metric)
        self.entries = tuple(tuple(row) for row in entries)
        if check and not self.is_hermitian():
            raise ValueError("matrix is not Hermitian for this conjugation/metric")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, alg, conj_kind=OCTONIONIC, metric=IDENTITY_METRIC):
        z = TensorElement.zero(alg)
        return cls(alg, [[z] * 3 for _ in range(3)], conj_kind, metric)

    @classmethod
    def identity(cls, alg, conj_kind=OCTONIONIC, metric=IDENTITY_METRIC):
        z = TensorElement.zero(alg)
        one = TensorElement.one(alg)
        return cls(alg, [[one if i == j else z for j in range(3)] for i in range(3)],
                   conj_kind, metric)

    @classmethod
    def from_parts(cls, alg, lam, b, conj_kind=OCTONIONIC, metric=IDENTITY_METRIC):
        """Build from diagonal scalars lam = (l1,l2,l3) and off-diagonal
        coefficients b = (b1,b2,b3) in the standard slots."""
        eta = tuple(metric)
        grid = [[TensorElement.zero(alg)] * 3 for _ in range(3)]
        for i, l in enumerate(lam):
            if isinstance(l, TensorElement):
                grid[i][i] = l
            else:
                if isinstance(l, Scalar) and l.kind == "R" and alg.scalar_kind != "R":
                    l = Scalar(alg.scalar_kind, l.re)
                grid[i][i] = TensorElement.from_scalar(alg, l)
        for bn, (i, j) in zip(b, _OFF_SLOTS):
            grid[i][j] = bn
            grid[j][i] = _sign(eta[i] * eta[j], bn.conjugate(conj_kind))
        return cls(alg, grid, conj_kind, metric)

    @classmethod
    def from_veronese(cls, triple):
        """The Hermitian matrix attached to a Veronese triple: diagonal
        (l1,l2,l3), off-diagonal slots (b1,b2,b3), conjugation matching the
        plane variant."""
        kind = triple.kind
        return cls.from_parts(kind.alg, triple.lam, triple.b, conj_kind=kind.conj_kind)

    # -- structural accessors ----------------------------------------------

    def diag(self):
        return tuple(self.entries[i][i] for i in range(3))

    def off_parts(self):
        """(b1, b2, b3) from the standard slots."""
        return tuple(self.entries[i][j] for i, j in _OFF_SLOTS)

    def diag_scalars(self):
        """Diagonal entries as Scalars; raises if any diagonal is not scalar."""
        out = []
        for d in self.diag():
            if not d.is_scalar():
                raise ValueError("diagonal entry is not a scalar")
            out.append(d.scalar_part())
        return tuple(out)

    def is_hermitian(self):
        eta = self.metric
        for i in range(3):
            for j in range(3):
                want = _sign(eta[i] * eta[j], self.entries[j][i].conjugate(self.conj_kind))
                if self.entries[i][j] != want:
                    return False
        return True

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def __eq__(self, other):
        return (
            isinstance(other, HermMatrix3)
            and self.alg == other.alg
            and self.conj_kind == other.conj_kind
            and self.metric == other.metric
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.alg, self.conj_kind, self.metric, self.entries))

    def __repr__(self):
        rows = ["[" + ", ".join(repr(e) for e in row) + "]" for row in self.entries]
        return "HermMatrix3(\n  " + "\n  ".join(rows) + "\n)"

    # -- linear structure ---------------------------------------------------

    def _check(self, other):
        if (self.alg != other.alg or self.conj_kind != other.conj_kind
                or self.metric != other.metric):
            raise ValueError("matrices live in different Hermitian spaces")

    def __add__(self, other):
        self._check(other)
        return HermMatrix3(
            self.alg,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.conj_kind, self.metric,
        )

    def __sub__(self, other):
        self._check(other)
        return HermMatrix3(
            self.alg,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.conj_kind, self.metric,
        )

    def __neg__(self):
        return HermMatrix3(
            self.alg, [[-a for a in row] for row in self.entries],
            self.conj_kind, self.metric,
        )

    def scale(self, s):
        """Multiply every entry by a scalar (Scalar, rational or int)."""
        return HermMatrix3(
            self.alg, [[e * s for e in row] for row in self.entries],
            self.conj_kind, self.metric,
        )

    # -- products -----------------------------------------------------------

    def _matmul(self, other):
        """Raw (non-Hermitian) 3x3 matrix product, as a plain grid."""
        a, b = self.entries, other.entries
        return [
            [a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j] for j in range(3)]
            for i in range(3)
        ]

    def jordan(self, other):
        """A o B = (AB + BA)/2."""
        self._check(other)
        ab = self._matmul(other)
        ba = other._matmul(self)
        half = Q(1, 2)
        grid = [[(ab[i][j] + ba[i][j]) * half for j in range(3)] for i in range(3)]
        return HermMatrix3(self.alg, grid, self.conj_kind, self.metric)

    def square(self):
        return self.jordan(self)

    def trace(self):
        """Sum of the scalar parts of the diagonal, as a Scalar."""
        t = self.alg.zero_scalar()
        for i in range(3):
            t = t + self.entries[i][i].scalar_part()
        return t

    def trace_form(self, other):
        """T(A,B) = tr(A o B)."""
        return self.jordan(other).trace()

    # -- cubic structure (octonionic conjugation, identity metric only) -----

    def _require_cubic(self):
        if self.conj_kind != OCTONIONIC or self.metric != IDENTITY_METRIC:
            raise ValueError(
                "determinant/sharp/rank require the octonionic conjugation "
                "and the identity metric"
            )

    def det(self):
        """l1 l2 l3 - sum l_n N(b_n) + 2 Re((b1 b2) b3), valued in the
        scalar ring."""
        self._require_cubic()
        l1, l2, l3 = self.diag_scalars()
        b1, b2, b3 = self.off_parts()
        n1 = b1.norm(COMPLEX_NORM)
        n2 = b2.norm(COMPLEX_NORM)
        n3 = b3.norm(COMPLEX_NORM)
        re = ((b1 * b2) * b3).scalar_part()
        return (l1 * l2 * l3 - l1 * n1 - l2 * n2 - l3 * n3
                + Scalar(self.alg.scalar_kind, 2) * re)

    def sharp(self):
        """Adjoint map: A is rank <= 1 iff sharp(A) = 0."""
        self._require_cubic()
        l1, l2, l3 = self.diag_scalars()
        b1, b2, b3 = self.off_parts()
        s1, s2, s3 = (b.conjugate(OCTONIONIC) for b in (b1, b2, b3))
        lam_sharp = (
            l2 * l3 - b1.norm(COMPLEX_NORM),
            l1 * l3 - b2.norm(COMPLEX_NORM),
            l1 * l2 - b3.norm(COMPLEX_NORM),
        )
        b_sharp = (
            s3 * s2 - b1 * l1,
            s1 * s3 - b2 * l2,
            s2 * s1 - b3 * l3,
        )
        return HermMatrix3.from_parts(self.alg, lam_sharp, b_sharp,
                                      self.conj_kind, self.metric)

    def hamilton_cayley_residual(self):
        """A o A^2 - tr(A) A^2 + (tr(A)^2 - tr(A^2))/2 A - det(A) I."""
        self._require_cubic()
        a2 = self.square()
        t = self.trace()
        t2 = a2.trace()
        half = Scalar(self.alg.scalar_kind, Q(1, 2))
        out = self.jordan(a2) - a2.scale(t) + self.scale(half * (t * t - t2))
        return out - HermMatrix3.identity(self.alg, self.conj_kind, self.metric).scale(self.det())

    def rank(self):
        """0, 1, 2 or 3 via the vanishing of A, sharp(A), det(A)."""
        self._require_cubic()
        if self.is_zero():
            return 0
        if self.sharp().is_zero():
            return 1
        if self.det().is_zero():
            return 2
        return 3


def _sign(s, x):
    return x if s > 0 else -x


# ---------------------------------------------------------------------------
# real coordinate bases of Hermitian spaces (the Lie-algebra carriers)
# ---------------------------------------------------------------------------

def _diag_fixed_basis(alg, conj_kind):
    """Basis of {z : z = sigma(z)} inside the coefficient algebra; these are
    the allowed diagonal entries."""
    out = [TensorElement.one(alg)]
    if conj_kind == OCTONIONIC:
        # octonionic conjugation fixes the whole scalar ring
        if alg.scalar_kind != "R":
            out.append(TensorElement.from_scalar(alg, scalars.unit(alg.scalar_kind)))
    else:
        # full conjugation fixes real scalars and imaginary-scalar octonion units
        if alg.scalar_kind == "R":
            return out
        u = scalars.unit(alg.scalar_kind)
        for k in range(1, 8):
            out.append(TensorElement.unit(alg, k, u))
    return out


def _coefficient_basis(alg):
    """Real basis of the whole coefficient algebra (for off-diagonal slots)."""
    out = [TensorElement.unit(alg, k) for k in range(8)]
    if alg.scalar_kind != "R":
        u = scalars.unit(alg.scalar_kind)
        out.extend(TensorElement.unit(alg, k, u) for k in range(8))
    return out


def hermitian_basis(alg, conj_kind=OCTONIONIC, metric=IDENTITY_METRIC):
    """Real basis of the Hermitian matrix space, diagonal slots first."""
    zero = TensorElement.zero(alg)
    basis = []
    for d in range(3):
        for t in _diag_fixed_basis(alg, conj_kind):
            grid = [[zero] * 3 for _ in range(3)]
            grid[d][d] = t
            basis.append(HermMatrix3(alg, grid, conj_kind, metric))
    for slot, _ in enumerate(_OFF_SLOTS):
        for t in _coefficient_basis(alg):
            b = [zero, zero, zero]
            b[slot] = t
            basis.append(HermMatrix3.from_parts(alg, [0, 0, 0], b, conj_kind, metric))
    return basis


def hermitian_coords(m):
    """Coordinates of a Hermitian matrix in the hermitian_basis order, as
    exact rationals."""
    coords = []
    for d in range(3):
        z = m.entries[d][d].z
        if m.conj_kind == OCTONIONIC:
            coords.append(z[0].re)
            if m.alg.scalar_kind != "R":
                coords.append(z[0].im)
            for c in z[1:]:
                if not c.is_zero():
                    raise ValueError("diagonal entry is not conjugation-fixed")
        else:
            coords.append(z[0].re)
            if z[0].im != 0:
                raise ValueError("diagonal entry is not conjugation-fixed")
            if m.alg.scalar_kind != "R":
                for c in z[1:]:
                    coords.append(c.im)
                    if c.re != 0:
                        raise ValueError("diagonal entry is not conjugation-fixed")
            else:
                for c in z[1:]:
                    if not c.is_zero():
                        raise ValueError("diagonal entry is not conjugation-fixed")
    for i, j in _OFF_SLOTS:
        z = m.entries[i][j].z
        coords.extend(c.re for c in z)
        if m.alg.scalar_kind != "R":
            coords.extend(c.im for c in z)
    return [Q(c) for c in coords]


def hermitian_dim(alg, conj_kind=OCTONIONIC):
    return len(hermitian_basis(alg, conj_kind))


def random_hermitian(alg, rng, conj_kind=OCTONIONIC, metric=IDENTITY_METRIC):
    diag = []
    for _ in range(3):
        d = TensorElement.zero(alg)
        for t in _diag_fixed_basis(alg, conj_kind):
            d = d + t * rng.rational()
        diag.append(d)
    b = [random_element(alg, rng) for _ in range(3)]
    m = HermMatrix3.from_parts(alg, [0, 0, 0], b, conj_kind, metric)
    grid = [list(row) for row in m.entries]
    for i in range(3):
        grid[i][i] = diag[i]
    return HermMatrix3(alg, grid, conj_kind, metric)


# ---------------------------------------------------------------------------
# sample reports
# ---------------------------------------------------------------------------

def hamilton_cayley_report(alg, samples, seed, conj_kind=OCTONIONIC):
    """PASS/FAIL for the Hamilton-Cayley identity on random Hermitian
    matrices."""
    from .randgen import Stream

    rng = Stream(seed)
    witness = None
    for _ in range(samples):
        a = random_hermitian(alg, rng, conj_kind)
        if not a.hamilton_cayley_residual().is_zero():
            witness = repr(a)
            break
    return {
        "algebra": repr(alg),
        "samples": samples,
        "seed": seed,
        "pass": witness is None,
        "witness": witness,
    }


def jordan_closure_report(alg, samples, seed, conj_kind=OCTONIONIC,
                          metric=IDENTITY_METRIC):
    """Checks that the Jordan product of Hermitian matrices is Hermitian."""
    from .randgen import Stream

    rng = Stream(seed)
    witness = None
    for _ in range(samples):
        a = random_hermitian(alg, rng, conj_kind, metric)
        b = random_hermitian(alg, rng, conj_kind, metric)
        if not a.jordan(b).is_hermitian():
            witness = (repr(a), repr(b))
            break
    return {
        "algebra": repr(alg),
        "conjugation": conj_kind,
        "metric": list(metric),
        "samples": samples,
        "seed": seed,
        "pass": witness is None,
        "witness": witness,
    }


def _entry_to_json(e):
    return [[str(c.re), str(c.im)] for c in e.z]


def _entry_from_json(alg, data):
    return TensorElement(alg, [Scalar(alg.scalar_kind, Q(re), Q(im)) for re, im in data])


def matrix_to_json(m):
    return {
        "scalar": m.alg.scalar_kind,
        "oct": m.alg.oct_name,
        "conj": m.conj_kind,
        "metric": list(m.metric),
        "entries": [[_entry_to_json(e) for e in row] for row in m.entries],
    }


def matrix_from_json(doc):
    alg = algebra(doc["scalar"], doc["oct"])
    entries = [[_entry_from_json(alg, e) for e in row] for row in doc["entries"]]
    return HermMatrix3(alg, entries, doc.get("conj", OCTONIONIC),
                       tuple(doc.get("metric", IDENTITY_METRIC)), check=True)


def pretty(m):
    """Plain-text 3x3 layout."""
    cells = [[repr(e) for e in row] for row in m.entries]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(
        "[ " + " | ".join(c.ljust(width) for c in row) + " ]" for row in cells
    )


def centrality_check(alg, samples, seed):
    """Probes of the full-conjugation Hermitian space: is the Jordan identity
    satisfied on samples, and does a random search find a failure of formal
    reality (nonzero A, B with A o A + B o B = 0)?  Both outcomes are
    reported, neither is asserted."""
    from .randgen import Stream

    rng = Stream(seed)
    jordan_witness = None
    for _ in range(samples):
        a = random_hermitian(alg, rng, FULL)
        b = random_hermitian(alg, rng, FULL)
        a2 = a.jordan(a)
        if a2.jordan(b).jordan(a) != a2.jordan(b.jordan(a)):
            jordan_witness = (repr(a), repr(b))
            break
    square_zero = None
    for _ in range(samples):
        a = random_hermitian(alg, rng, FULL)
        if not a.is_zero() and a.jordan(a).is_zero():
            square_zero = repr(a)
            break
    return {
        "algebra": repr(alg),
        "conjugation": FULL,
        "samples": samples,
        "seed": seed,
        "jordan_identity_pass": jordan_witness is None,
        "jordan_identity_witness": jordan_witness,
        "formal_reality_counterexample": square_zero,
    }
