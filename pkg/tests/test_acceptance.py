"""End-to-end acceptance checks, one per headline claim.

Each test prints a single pass/fail line (with its wall time) and asserts
the exact expected values.  The heavy Lie-algebra solves are cached at module
level in the library, so repeated calls are free.
"""

import time

from bioctonion import composition, jordan, liealg, tensor, veronese
from bioctonion.jordan import HermMatrix3
from bioctonion.randgen import Stream
from bioctonion.scalars import Scalar
from bioctonion.tensor import (
    COMPLEX_NORM,
    REAL_NORM,
    TensorElement,
    algebra,
    canonical_real_norm_witness,
    inverse,
    random_element,
    zero_divisor_witness,
)
from bioctonion.veronese import (
    COMPLEX,
    ELLIPTIC,
    PlaneKind,
    ProjectivePoint,
    VeroneseTriple,
    adjacency_demo,
    affine_embed,
    incident,
    is_veronese,
    line_embed,
    polar_map,
    random_complex_veronese,
)

KC = PlaneKind(COMPLEX, algebra("C", "O"))


class _criterion:
    def __init__(self, num, label):
        self.num = num
        self.label = label

    def __enter__(self):
        self.t0 = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        dt = time.monotonic() - self.t0
        verdict = "PASS" if exc_type is None else "FAIL"
        print(f"[criterion {self.num:2d}] {self.label}: {verdict} ({dt:.1f} s)")
        return False


def test_criterion_01_composition_dichotomy():
    with _criterion(1, "composition dichotomy on CxO"):
        alg = algebra("C", "O")
        rep = tensor.composition_check(alg, COMPLEX_NORM, 1000, 0)
        assert rep["pass"], rep
        realrep = tensor.composition_check(alg, REAL_NORM, 100, 0)
        assert not realrep["pass"] and realrep["witness"] is not None
        a, b = canonical_real_norm_witness(alg)
        assert (a * b).norm(REAL_NORM) == 0
        assert a.norm(REAL_NORM) * b.norm(REAL_NORM) == 4


def test_criterion_02_zero_divisor_criterion():
    with _criterion(2, "invertibility iff N != 0 on 500 elements"):
        alg = algebra("C", "O")
        rng = Stream(0)
        null_factor = TensorElement.one(alg) + TensorElement.unit(
            alg, 1, Scalar("C", 0, 1))  # N = 0
        one = TensorElement.one(alg)
        checked = 0
        while checked < 500:
            b = random_element(alg, rng)
            if checked % 5 == 4:
                b = null_factor * b  # N(b) = N(null)N(r) = 0 exactly
            if b.is_zero():
                continue
            if b.norm(COMPLEX_NORM).is_zero():
                c = zero_divisor_witness(b)
                assert c is not None and not c.is_zero() and (b * c).is_zero()
            else:
                assert zero_divisor_witness(b) is None
                binv = inverse(b)
                assert b * binv == one and binv * b == one
            checked += 1


def test_criterion_03_identity_suites():
    with _criterion(3, "alternativity and Moufang on all six algebras"):
        for name in ("O", "Os"):
            rep = composition.identity_suite(
                composition.standard_table(name), 500, 0)
            assert rep["all_pass"], rep
        for sk in ("C", "Cs"):
            for on in ("O", "Os"):
                rep = tensor.tensor_identity_suite(algebra(sk, on), 500, 0)
                assert rep["all_pass"], rep
        witness = composition.find_nonassociative_triple(
            composition.standard_table("O"))
        assert witness is not None


def test_criterion_04_veronese_jordan_equivalence():
    with _criterion(4, "sharp/det vanish on the cone; Hamilton-Cayley"):
        rng = Stream(0)
        triples = [affine_embed(KC, ("infinity",)).rep]
        for _ in range(9):
            triples.append(
                affine_embed(KC, ("slope", random_element(KC.alg, rng))).rep)
        while len(triples) < 300:
            triples.append(random_complex_veronese(KC, rng))
        for v in triples:
            a = HermMatrix3.from_veronese(v)
            assert a.sharp().is_zero()
            assert a.det().is_zero()
        # generic (non-Veronese) triples have nonvanishing adjoint
        generic = 0
        while generic < 300:
            v = VeroneseTriple(
                KC,
                tuple(random_element(KC.alg, rng) for _ in range(3)),
                tuple(Scalar("C", rng.rational(), rng.rational())
                      for _ in range(3)),
            )
            if is_veronese(v):
                continue
            assert not HermMatrix3.from_veronese(v).sharp().is_zero()
            generic += 1
        for sk, on in (("R", "O"), ("R", "Os"), ("C", "O")):
            rep = jordan.hamilton_cayley_report(algebra(sk, on), 300, 0)
            assert rep["pass"], rep


def test_criterion_05_incidence_and_completion():
    with _criterion(5, "affine incidence, polarity, adjacency"):
        rng = Stream(0)
        for _ in range(200):
            x = random_element(KC.alg, rng)
            s = random_element(KC.alg, rng)
            t = random_element(KC.alg, rng)
            p = affine_embed(KC, ("point", x, s * x + t))
            assert incident(p, line_embed(KC, ("slope", s, t)))
        for _ in range(50):
            p = ProjectivePoint.of(random_complex_veronese(KC, rng))
            assert polar_map(polar_map(p, ELLIPTIC), ELLIPTIC).rep == p.rep
        demo = adjacency_demo()
        assert demo["pass"], demo["checks"]


def test_criterion_06_dimension_counts():
    with _criterion(6, "Jacobian-rank dimension counts for both planes"):
        rep = veronese.dimension_report(samples=3, seed=0)
        cx = rep["complex"]
        assert cx["pass"]
        assert cx["survey"]["ranks"] == [10]
        assert cx["survey"]["report"]["dim_plane"] == 16
        real = rep["real"]
        assert real["ambient"] == 51
        assert real["stated_conditions"] == 19
        assert real["stated_dim_plane"] == 32
        for part in real["measured"].values():
            assert part["constant"] and len(part["ranks"]) == 1
        measured_dims = {part["report"]["dim_plane"]
                         for part in real["measured"].values()}
        # the stated total must be carried next to the measured ranks; if
        # they disagree, the report has to say so in so many words
        if measured_dims != {real["stated_dim_plane"]}:
            assert real["discrepancy"] is not None
            assert "51" in real["discrepancy"]


def test_criterion_07_derivation_table():
    with _criterion(7, "der dims/characters: g2 and the f4 family"):
        rows = {r["algebra"]: r for r in liealg.derivation_table()}
        expected = {
            "der(O)": (14, -14),
            "der(J3(O))": (52, -52),
            "der(J3(Os))": (52, 4),
            "der(J2,1(O))": (52, -20),
        }
        assert set(rows) == set(expected)
        for name, (dim, char) in expected.items():
            r = rows[name]
            assert r["dim"] == dim, r
            assert r["character"] == char, r
            assert r["paths_agree"], r
            assert r["pass"], r


def test_criterion_08_structure_table():
    with _criterion(8, "str0/unitary dims/characters: the e6 family"):
        rows = {r["algebra"]: r for r in liealg.structure_table(1e-8)}
        expected = {
            "str0(J3(O))": (78, -26),
            "str0(J3(Os))": (78, 6),
            "unitary(CxO)": (78, -78),
            "unitary(CxO;2,1)": (78, -14),
            "unitary(CxOs)": (78, 2),
        }
        assert set(rows) == set(expected)
        for name, (dim, char) in expected.items():
            r = rows[name]
            assert r["dim"] == dim, r
            assert r["character"] == char, r
            assert r["pass"], r


def test_criterion_09_matrix_model_counts():
    with _criterion(9, "matrix-model parameter counts and sums"):
        rep = liealg.matrix_model_report()
        assert rep["a3(O)"] == 64
        assert rep["sa3(O)"] == 38
        assert rep["sa3(CxO)"] == 64
        assert rep["der(O)"] == 14
        assert rep["collineation_sum"] == {"value": 78, "expected": 78,
                                           "pass": True}
        assert rep["isometry_sum"] == {"value": 52, "expected": 52,
                                       "pass": True}
        assert rep["bioctonionic_sum"] == {"value": 78, "expected": 78,
                                           "pass": True}


def test_criterion_10_coset_arithmetic():
    with _criterion(10, "symmetric-space coset dimensions"):
        rep = liealg.coset_dimensions()
        f4 = rep["octonionic_projective"]
        assert f4["total"] - f4["stabilizer"] == 16 and f4["pass"]
        e6 = rep["bioctonionic_projective"]
        assert e6["total"] - e6["stabilizer"] - e6["center"] == 32
        assert e6["pass"]
