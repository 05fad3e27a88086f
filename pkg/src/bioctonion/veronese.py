"""Veronese constructions of the complexified Cayley plane and of the
bioctonionic Rosenfeld plane: points, lines, polarities, incidence, the
affine completion (complex variant only), adjacency pathologies, and exact
Jacobian rank of the defining conditions.

Two variants share one triple representation:

  * "complex": lambda-scalars in the complex ring, octonionic conjugation,
    complex norm, rays over the scalar ring;
  * "real": lambda-scalars in R, full (bioctonionic) conjugation, real norm,
    rays over R.
"""

from dataclasses import dataclass

from gmpy2 import mpq as Q

from .linalg import nullspace_exact, rank_exact
from .randgen import Stream
from .scalars import Scalar
from .tensor import (
    BILINEAR,
    COMPLEX_NORM,
    FULL,
    HERMITIAN,
    OCTONIONIC,
    REAL_NORM,
    TensorElement,
    random_element,
)

COMPLEX = "complex"
REAL = "real"

ELLIPTIC = "elliptic"
HYPERBOLIC = "hyperbolic"


class UnsupportedPlaneOperation(ValueError):
    """Operation undefined for this plane variant (e.g. no affine completion
    of the real-norm Rosenfeld plane)."""


@dataclass(frozen=True)
class PlaneKind:
    variant: str              # COMPLEX or REAL
    alg: object               # TensorAlgebra with scalar ring C or Cs

    def __post_init__(self):
        if self.variant not in (COMPLEX, REAL):
            raise ValueError(f"unknown plane variant {self.variant!r}")
        if self.alg.scalar_kind == "R":
            raise ValueError("plane coordinates need a complex or split-complex ring")

    @property
    def conj_kind(self):
        return OCTONIONIC if self.variant == COMPLEX else FULL

    @property
    def norm_kind(self):
        return COMPLEX_NORM if self.variant == COMPLEX else REAL_NORM

    @property
    def lambda_kind(self):
        return self.alg.scalar_kind if self.variant == COMPLEX else "R"

    @property
    def ambient_dim(self):
        """Real (for REAL) or scalar-ring (for COMPLEX) dimension of V."""
        return 27 if self.variant == COMPLEX else 51


class VeroneseTriple:
    __slots__ = ("kind", "b", "lam")

    def __init__(self, kind, b, lam):
        b = tuple(b)
        lam = tuple(
            x if isinstance(x, Scalar) else Scalar(kind.lambda_kind, x) for x in lam
        )
        if len(b) != 3 or len(lam) != 3:
            raise ValueError("a triple has 3 algebra coordinates and 3 scalars")
        for x in b:
            if x.alg != kind.alg:
                raise ValueError("algebra coordinate from the wrong tensor algebra")
        for x in lam:
            if x.kind != kind.lambda_kind:
                raise ValueError(f"lambda scalars must live in {kind.lambda_kind}")
        self.kind = kind
        self.b = b
        self.lam = lam

    @classmethod
    def zero(cls, kind):
        z = TensorElement.zero(kind.alg)
        return cls(kind, (z, z, z), (0, 0, 0))

    def is_zero(self):
        return all(x.is_zero() for x in self.b) and all(x.is_zero() for x in self.lam)

    def scale(self, mu):
        """Ray-field scaling: mu in the scalar ring for COMPLEX, in R for REAL."""
        if not isinstance(mu, Scalar):
            mu = Scalar(self.kind.lambda_kind, mu)
        return VeroneseTriple(
            self.kind, tuple(x * mu for x in self.b), tuple(mu * x for x in self.lam)
        )

    def __eq__(self, other):
        return (
            isinstance(other, VeroneseTriple)
            and self.kind == other.kind
            and self.b == other.b
            and self.lam == other.lam
        )

    def __hash__(self):
        return hash((self.kind, self.b, self.lam))

    def __repr__(self):
        return f"Triple(b={list(self.b)!r}; lam={list(self.lam)!r})"

    def to_json(self):
        return {
            "kind": self.kind.variant,
            "scalar": self.kind.alg.scalar_kind,
            "oct": self.kind.alg.oct_name,
            "b": [x.to_json() for x in self.b],
            "lambda": [x.to_json() for x in self.lam],
        }

    @classmethod
    def from_json(cls, doc):
        from .tensor import algebra

        kind = PlaneKind(doc["kind"], algebra(doc["scalar"], doc["oct"]))
        b = [TensorElement.from_json(d) for d in doc["b"]]
        lam = [Scalar.from_json(kind.lambda_kind, d) for d in doc["lambda"]]
        return cls(kind, b, lam)


# ---------------------------------------------------------------------------
# Veronese conditions
# ---------------------------------------------------------------------------

def veronese_residuals(v):
    """The six defining conditions as exact residuals.

    Returns (elems, scalars): three algebra-valued residuals
    lam_n * sigma(b_n) - b_{n+1} b_{n+2} and three scalar residuals
    norm(b_n) - lam_{n+1} lam_{n+2}.
    """
    k = v.kind
    sig = k.conj_kind
    elems = []
    for n in range(3):
        lhs = v.b[n].conjugate(sig) * v.lam[n]
        rhs = v.b[(n + 1) % 3] * v.b[(n + 2) % 3]
        elems.append(lhs - rhs)
    scals = []
    for n in range(3):
        lp = v.lam[(n + 1) % 3] * v.lam[(n + 2) % 3]
        nn = v.b[n].norm(k.norm_kind)
        if k.variant == COMPLEX:
            scals.append(nn - lp)
        else:
            scals.append(nn - lp.re)
    return elems, scals


def is_veronese(v):
    elems, scals = veronese_residuals(v)
    return all(e.is_zero() for e in elems) and all(
        (s.is_zero() if isinstance(s, Scalar) else s == 0) for s in scals
    )


# ---------------------------------------------------------------------------
# points, lines, polarities
# ---------------------------------------------------------------------------

def _coords(v):
    """Flat ray-field coordinate list in the documented scan order:
    lam1..lam3, then the coefficients of b1..b3 in unit order."""
    if v.kind.variant == COMPLEX:
        return list(v.lam) + [c for x in v.b for c in x.z]
    out = [x.re for x in v.lam]
    for x in v.b:
        for c in x.z:
            out.extend((c.re, c.im))
    return out


def canonical_rep(v):
    """Scale so the first invertible coordinate in scan order equals 1.

    Over the field rays (C, R) the first nonzero coordinate is invertible;
    over Cs a leading zero-divisor coordinate is skipped.
    """
    if v.is_zero():
        raise ValueError("the zero triple has no canonical representative")
    for c in _coords(v):
        if isinstance(c, Scalar):
            if not c.is_zero():
                try:
                    return v.scale(c.inverse())
                except ZeroDivisionError:
                    continue
        elif c != 0:
            return v.scale(Q(1) / c)
    raise ValueError("no invertible coordinate available for canonicalization")


@dataclass(frozen=True)
class ProjectivePoint:
    rep: VeroneseTriple

    @classmethod
    def of(cls, v):
        if not is_veronese(v):
            raise ValueError("representative is not a Veronese vector")
        return cls(canonical_rep(v))

    @property
    def kind(self):
        return self.rep.kind


@dataclass(frozen=True)
class Line:
    polar: VeroneseTriple
    polarity: str = ELLIPTIC


def pairing(v, w, polarity=ELLIPTIC):
    """The plane's bilinear (COMPLEX) or sesquilinear (REAL) form; the
    hyperbolic polarity flips the sign of the third summand."""
    if v.kind != w.kind:
        raise ValueError("triples from different planes")
    k = v.kind
    inner_kind = BILINEAR if k.variant == COMPLEX else HERMITIAN
    acc = Scalar(k.alg.scalar_kind, 0)
    for n in range(3):
        # the algebra part carries the trace-form weight b1 b2* + b2 b1*
        # (twice the inner product): <b,b> contributes 2N(b), which is
        # exactly the weight that puts the affine point (x, sx+t) on the
        # slope line [s,t]
        term = 2 * v.b[n].inner(w.b[n], inner_kind)
        lv, lw = v.lam[n], w.lam[n]
        if k.variant == COMPLEX:
            term = term + lv * lw
        else:
            term = term + Scalar(k.alg.scalar_kind, lv.re * lw.re)
        if polarity == HYPERBOLIC and n == 2:
            term = -term
        acc = acc + term
    return acc


def incident(point, line):
    return pairing(point.rep, line.polar, line.polarity).is_zero()


def polar_map(obj, polarity=ELLIPTIC):
    """Involution exchanging points and lines through orthogonality."""
    if isinstance(obj, ProjectivePoint):
        return Line(obj.rep, polarity)
    if isinstance(obj, Line):
        return ProjectivePoint(canonical_rep(obj.polar))
    raise TypeError("polar_map expects a point or a line")


# ---------------------------------------------------------------------------
# affine completion (complex variant only)
# ---------------------------------------------------------------------------

def _require_complex(kind, what):
    if kind.variant != COMPLEX:
        raise UnsupportedPlaneOperation(
            f"{what} requires the complex-norm plane: the tensor algebra is not a "
            "composition algebra for the real norm, so the affine map is not "
            "well defined on the real-norm plane"
        )


def affine_embed(kind, case):
    """Embed ('point', x, y), ('slope', x) or ('infinity',) as a point."""
    _require_complex(kind, "the affine embedding")
    alg = kind.alg
    zero = TensorElement.zero(alg)
    tag = case[0]
    if tag == "point":
        x, y = case[1], case[2]
        v = VeroneseTriple(
            kind,
            (x, y.conjugate(OCTONIONIC), y * x.conjugate(OCTONIONIC)),
            (y.norm(COMPLEX_NORM), x.norm(COMPLEX_NORM), Scalar(alg.scalar_kind, 1)),
        )
    elif tag == "slope":
        x = case[1]
        v = VeroneseTriple(
            kind,
            (zero, zero, x),
            (x.norm(COMPLEX_NORM), Scalar(alg.scalar_kind, 1), Scalar(alg.scalar_kind, 0)),
        )
    elif tag == "infinity":
        v = VeroneseTriple(kind, (zero, zero, zero), (1, 0, 0))
    else:
        raise ValueError(f"unknown affine case {tag!r}")
    return ProjectivePoint.of(v)


def line_embed(kind, case):
    """Embed ('slope', s, t), ('vertical', c) or ('infinity',) as a line."""
    _require_complex(kind, "the affine line embedding")
    alg = kind.alg
    zero = TensorElement.zero(alg)
    one = Scalar(alg.scalar_kind, 1)
    tag = case[0]
    if tag == "slope":
        s, t = case[1], case[2]
        polar = VeroneseTriple(
            kind,
            (s.conjugate(OCTONIONIC) * t, -(t.conjugate(OCTONIONIC)), -s),
            (one, s.norm(COMPLEX_NORM), t.norm(COMPLEX_NORM)),
        )
    elif tag == "vertical":
        c = case[1]
        polar = VeroneseTriple(kind, (-c, zero, zero), (0, 1, c.norm(COMPLEX_NORM)))
    elif tag == "infinity":
        polar = VeroneseTriple(kind, (zero, zero, zero), (0, 0, 1))
    else:
        raise ValueError(f"unknown line case {tag!r}")
    return Line(polar, ELLIPTIC)


# ---------------------------------------------------------------------------
# adjacency pathologies
# ---------------------------------------------------------------------------

def singularity(v1, v2):
    """A nonzero a with a*v1 = a*v2 = 0, or None.

    The common left annihilator is a linear problem in the 16 real
    coordinates of a.
    """
    alg = v1.alg
    if v1.is_zero() and v2.is_zero():
        return TensorElement.one(alg)
    ncols = alg.real_dim
    rows = []
    basis = []
    for k in range(8):
        basis.append(TensorElement.unit(alg, k, Scalar(alg.scalar_kind, 1)))
        if alg.scalar_kind != "R":
            basis.append(TensorElement.unit(alg, k, Scalar(alg.scalar_kind, 0, 1)))
    cols = [[c for e in (d * v1, d * v2) for s in e.z for c in (s.re, s.im)] for d in basis]
    nrows = len(cols[0])
    for r in range(nrows):
        rows.append([cols[c][r] for c in range(ncols)])
    null = nullspace_exact(rows, ncols)
    if not null:
        return None
    vec = null[0]
    acc = TensorElement.zero(alg)
    for coeff, d in zip(vec, basis):
        if coeff != 0:
            acc = acc + d * Scalar(alg.scalar_kind, coeff)
    return acc


def adjacency_demo(kind=None):
    """Two distinct affine points joined by (at least) two distinct lines."""
    from . import scalars
    from .tensor import algebra

    if kind is None:
        kind = PlaneKind(COMPLEX, algebra("C", "O"))
    _require_complex(kind, "the adjacency demonstration")
    alg = kind.alg
    i = scalars.unit(alg.scalar_kind)
    zero = TensorElement.zero(alg)
    sing = TensorElement.one(alg) + TensorElement.unit(alg, 1, i)  # 1 + i e1, N = 0
    p1 = affine_embed(kind, ("point", zero, zero))
    p2 = affine_embed(kind, ("point", sing, zero))
    slope = TensorElement.one(alg) - TensorElement.unit(alg, 1, i)  # annihilates sing
    l1 = line_embed(kind, ("slope", zero, zero))
    l2 = line_embed(kind, ("slope", slope, zero))
    checks = {
        "points_distinct": p1.rep != p2.rep,
        "lines_distinct": l1.polar != l2.polar,
        "p1_on_l1": incident(p1, l1),
        "p1_on_l2": incident(p1, l2),
        "p2_on_l1": incident(p2, l1),
        "p2_on_l2": incident(p2, l2),
    }
    return {
        "points": [p1.rep.to_json(), p2.rep.to_json()],
        "lines": [l1.polar.to_json(), l2.polar.to_json()],
        "separating_vector": [sing.to_json(), zero.to_json()],
        "checks": checks,
        "pass": all(checks.values()),
    }


# ---------------------------------------------------------------------------
# Jacobian rank of the Veronese conditions
# ---------------------------------------------------------------------------

def _pack(v):
    """Ray coordinates as used by the Jacobian (b coordinates first is not
    required; we use lam-first scan order to match canonical_rep)."""
    return _coords(v)


def _unpack(kind, coords):
    alg = kind.alg
    if kind.variant == COMPLEX:
        lam = coords[:3]
        zs = coords[3:]
        b = [TensorElement(alg, zs[8 * n : 8 * n + 8]) for n in range(3)]
        return VeroneseTriple(kind, b, lam)
    lam = [Scalar("R", c) for c in coords[:3]]
    rest = coords[3:]
    b = []
    for n in range(3):
        chunk = rest[16 * n : 16 * n + 16]
        b.append(
            TensorElement(
                alg, [Scalar(alg.scalar_kind, chunk[2 * a], chunk[2 * a + 1]) for a in range(8)]
            )
        )
    return VeroneseTriple(kind, b, lam)


def _residual_vector(v):
    """Residuals flattened over the ray field: scalars for COMPLEX (27 of
    them), reals for REAL (51 of them)."""
    elems, scals = veronese_residuals(v)
    if v.kind.variant == COMPLEX:
        out = [c for e in elems for c in e.z]
        out.extend(scals)
        return out
    out = []
    for e in elems:
        for c in e.z:
            out.extend((c.re, c.im))
    out.extend(scals)
    return out


def _perturb(kind, coords, d, delta):
    c = list(coords)
    if kind.variant == COMPLEX:
        if isinstance(c[d], Scalar):
            c[d] = c[d] + delta
        else:
            c[d] = c[d] + delta
    else:
        c[d] = c[d] + delta
    return _unpack(kind, c)


def jacobian(v):
    """Exact Jacobian of the defining conditions at v.

    The conditions are quadratic, so the exact directional derivative is the
    central difference (F(v+e) - F(v-e))/2.  COMPLEX returns a 27x27 matrix
    of ring scalars (the conditions are polynomial over the scalar ring);
    REAL returns a 51x51 rational matrix.  Rows are conditions, columns are
    coordinate directions.
    """
    kind = v.kind
    coords = _pack(v)
    n = len(coords)
    cols = []
    one = Scalar(kind.alg.scalar_kind, 1) if kind.variant == COMPLEX else Q(1)
    for d in range(n):
        fp = _residual_vector(_perturb(kind, coords, d, one))
        fm = _residual_vector(_perturb(kind, coords, d, -one))
        if kind.variant == COMPLEX:
            col = [(a - b) * Scalar(kind.alg.scalar_kind, Q(1, 2)) for a, b in zip(fp, fm)]
        else:
            col = [(a - b) / 2 for a, b in zip(fp, fm)]
        cols.append(col)
    nrows = len(cols[0])
    return [[cols[c][r] for c in range(n)] for r in range(nrows)]


def tangent_rank(v):
    """Exact rank of the Jacobian at a Veronese vector, with the implied
    dimension count dim(plane) = ambient - rank - 1."""
    if v.is_zero():
        raise ValueError("rank is not defined at the cone vertex")
    if not is_veronese(v):
        raise ValueError("rank is computed at points of the Veronese cone")
    kind = v.kind
    jac = jacobian(v)
    if kind.variant == COMPLEX:
        # realify ring-scalar entries and halve the real rank
        rows = []
        for row in jac:
            top, bot = [], []
            for s in row:
                top.extend((s.re, -s.im))
                bot.extend((s.im, s.re))
            rows.append(top)
            rows.append(bot)
        r2 = rank_exact(rows)
        if r2 % 2:
            raise ArithmeticError("realified rank of a ring-linear map must be even")
        rank = r2 // 2
    else:
        rank = rank_exact(jac)
    ambient = kind.ambient_dim
    return {
        "variant": kind.variant,
        "ambient": ambient,
        "rank": rank,
        "dim_H": ambient - rank,
        "dim_plane": ambient - rank - 1,
    }


# ---------------------------------------------------------------------------
# sample points on the cones
# ---------------------------------------------------------------------------

def random_complex_veronese(kind, rng):
    """Generic point of the complex-variant cone via the affine embedding."""
    x = random_element(kind.alg, rng)
    y = random_element(kind.alg, rng)
    return affine_embed(kind, ("point", x, y)).rep


def real_veronese_slot_point(kind, rng, slot=2):
    """Real-cone point with a single nonzero algebra coordinate:
    permutations of (0,0,b; s, |b|^2/s, 0)."""
    alg = kind.alg
    b = random_element(alg, rng)
    while b.norm(REAL_NORM) == 0:
        b = random_element(alg, rng)
    s = rng.nonzero_rational()
    lam = [Q(0)] * 3
    lam[(slot + 1) % 3] = s
    lam[(slot + 2) % 3] = b.norm(REAL_NORM) / s
    bs = [TensorElement.zero(alg)] * 3
    bs[slot] = b
    v = VeroneseTriple(kind, bs, lam)
    assert is_veronese(v)
    return v


def real_veronese_octonionic_point(kind, rng):
    """Real-cone point with purely octonionic coordinates (zero imaginary
    parts), where the full conjugation degenerates to the octonionic one and
    the real norm to the octonion norm; the classic affine formula applies."""
    alg = kind.alg

    def real_oct(r):
        return TensorElement(alg, [Scalar(alg.scalar_kind, r.rational()) for _ in range(8)])

    x, y = real_oct(rng), real_oct(rng)
    v = VeroneseTriple(
        kind,
        (x, y.conjugate(OCTONIONIC), y * x.conjugate(OCTONIONIC)),
        (y.norm(REAL_NORM), x.norm(REAL_NORM), Q(1)),
    )
    assert is_veronese(v)
    return v


def tangent_rank_survey(kind, samples, seed, point_source=None):
    """Rank at `samples` independently generated cone points; flags
    non-constant rank across the sample."""
    rng = Stream(seed)
    if point_source is None:
        if kind.variant == COMPLEX:
            point_source = random_complex_veronese
        else:
            point_source = real_veronese_octonionic_point
    ranks = []
    report = None
    for _ in range(samples):
        v = point_source(kind, rng)
        report = tangent_rank(v)
        ranks.append(report["rank"])
    return {
        "variant": kind.variant,
        "samples": samples,
        "seed": seed,
        "ranks": sorted(set(ranks)),
        "constant": len(set(ranks)) == 1,
        "report": report,
    }


def dimension_report(samples=5, seed=0):
    """Jacobian-rank dimension counts for both plane variants.

    The complex variant has a clean expected answer (rank 10, plane
    dimension 16).  For the real variant the report carries the documented
    totals (19 independent conditions, plane dimension 32) next to the
    measured ranks on two explicit families of cone points; when they
    disagree the discrepancy is spelled out rather than papered over.
    """
    from .tensor import algebra

    kc = PlaneKind(COMPLEX, algebra("C", "O"))
    kr = PlaneKind(REAL, algebra("C", "O"))
    cx = tangent_rank_survey(kc, samples, seed)
    complex_part = {
        "survey": cx,
        "expected_rank": 10,
        "expected_dim_plane": 16,
        "pass": cx["constant"] and cx["ranks"] == [10]
                and cx["report"]["dim_plane"] == 16,
    }
    oct_part = tangent_rank_survey(kr, samples, seed,
                                   real_veronese_octonionic_point)
    slot_part = tangent_rank_survey(kr, samples, seed, real_veronese_slot_point)
    stated_conditions = 19
    stated_dim_plane = 32
    measured = {
        "octonionic_family": oct_part,
        "single_slot_family": slot_part,
    }
    mismatch = [
        f"{name}: measured rank {part['ranks']}, local solution dimension "
        f"{part['report']['dim_H']}, plane dimension {part['report']['dim_plane']}"
        for name, part in measured.items()
        if part["report"]["dim_plane"] != stated_dim_plane
    ]
    discrepancy = None
    if mismatch:
        discrepancy = (
            "the stated totals (" + str(stated_conditions)
            + " independent conditions on 51 coordinates, plane dimension "
            + str(stated_dim_plane) + ") do not match the exact Jacobian ranks: "
            + "; ".join(mismatch)
            + ". The measured count of independent conditions exceeds the "
            "stated one at every sampled point of the real cone."
        )
    real_part = {
        "ambient": 51,
        "stated_conditions": stated_conditions,
        "stated_dim_plane": stated_dim_plane,
        "measured": measured,
        "discrepancy": discrepancy,
    }
    return {"complex": complex_part, "real": real_part}
