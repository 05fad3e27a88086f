"""Isometry Lie algebras from the Jordan carriers.

Everything is computed, never looked up:

  * derivation algebras der(A) = {D : D(xy) = D(x)y + xD(y)} as certified
    rational nullspaces of the derivation linear system;
  * reduced structure algebras der(J) + traceless Jordan multiplications;
  * unitary algebras: complex-linear operators on the complexified Jordan
    algebra that annihilate the polarized cubic form and are anti-Hermitian
    for a (possibly metric-twisted) sesquilinear trace pairing;
  * Killing forms from exact structure constants, with exact and floating
    signature paths, and the character chi = (#noncompact) - (#compact);
  * parameter counts of the traceless / anti-Hermitian matrix models.

All operator bases come out of the certified modular engine in normal form,
so bracket coordinates are read off directly and every bracket is re-verified
with exact integer arithmetic (closure failures raise ClosureError).
"""

from functools import lru_cache
from math import lcm

import numpy as np
from gmpy2 import mpq as Q

from . import scalars
from .jordan import (
    IDENTITY_METRIC,
    LORENTZ_METRIC,
    HermMatrix3,
    hermitian_basis,
    hermitian_coords,
)
from .linalg import (
    ClosureError,
    certified_nullspace,
    nullspace_exact,
    signature_exact,
    signature_float,
)
from .scalars import Scalar
from .tensor import FULL, OCTONIONIC, TensorElement, algebra

# ---------------------------------------------------------------------------
# carriers: finite-dimensional real algebras with integer structure tensors
# ---------------------------------------------------------------------------


class Carrier:
    """Real algebra with structure tensor e_i e_j = (1/denom) sum_k c[i,j,k] e_k."""

    def __init__(self, name, struct, denom, commutative):
        self.name = name
        self.struct = struct          # numpy int64, shape (n, n, n)
        self.denom = denom
        self.commutative = commutative
        self.dim = struct.shape[0]

    def __repr__(self):
        return f"Carrier({self.name}, dim={self.dim})"


def _carrier_from(name, basis, mult, coords, commutative):
    n = len(basis)
    c_q = [[coords(mult(basis[i], basis[j])) for j in range(n)] for i in range(n)]
    denom = 1
    for row in c_q:
        for vec in row:
            for x in vec:
                denom = lcm(denom, x.denominator)
    struct = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for k, x in enumerate(c_q[i][j]):
                struct[i, j, k] = int(x * denom)
    return Carrier(name, struct, denom, commutative)


@lru_cache(maxsize=None)
def composition_carrier(oct_name):
    """O or O_s as an 8-dimensional real algebra."""
    alg = algebra("R", oct_name)
    basis = [TensorElement.unit(alg, k) for k in range(8)]
    return _carrier_from(
        oct_name, basis, lambda a, b: a * b,
        lambda m: [c.re for c in m.z], commutative=False,
    )


def _tensor_basis(alg):
    out = [TensorElement.unit(alg, k) for k in range(8)]
    u = scalars.unit(alg.scalar_kind)
    out.extend(TensorElement.unit(alg, k, u) for k in range(8))
    return out


def _tensor_coords(m):
    return [c.re for c in m.z] + [c.im for c in m.z]


@lru_cache(maxsize=None)
def tensor_carrier(scalar_kind, oct_name):
    """The 16-dimensional real algebra (C or Cs) x (O or Os)."""
    alg = algebra(scalar_kind, oct_name)
    return _carrier_from(
        f"{scalar_kind}x{oct_name}", _tensor_basis(alg),
        lambda a, b: a * b, _tensor_coords, commutative=False,
    )


@lru_cache(maxsize=None)
def jordan_carrier(scalar_kind, oct_name, metric=IDENTITY_METRIC):
    """Hermitian 3x3 matrices under the Jordan product, as a real algebra."""
    alg = algebra(scalar_kind, oct_name)
    basis = hermitian_basis(alg, OCTONIONIC, metric)
    tag = "" if metric == IDENTITY_METRIC else "2,1"
    pre = "" if scalar_kind == "R" else scalar_kind + "x"
    name = f"herm3{tag}({pre}{oct_name})"
    return _carrier_from(
        name, basis, lambda a, b: a.jordan(b), hermitian_coords, commutative=True,
    )


# ---------------------------------------------------------------------------
# the derivation linear system
# ---------------------------------------------------------------------------

def derivation_rows(carrier):
    """Integer rows of D(e_i e_j) = D(e_i) e_j + e_i D(e_j) in the unknowns
    x_(b*n+a) = M[b][a], where D(e_a) = sum_b M[b][a] e_b."""
    c = carrier.struct
    n = carrier.dim
    if carrier.commutative:
        pairs = [(i, j) for i in range(n) for j in range(i, n)]
    else:
        pairs = [(i, j) for i in range(n) for j in range(n)]
    rows = np.zeros((len(pairs) * n, n * n), dtype=np.int64)
    idx = np.arange(n)
    for r, (i, j) in enumerate(pairs):
        b = rows[r * n : (r + 1) * n]
        b[:, idx * n + i] += c[:, j, :].T
        b[:, idx * n + j] += c[i, :, :].T
        b[idx[:, None], idx[:, None] * n + idx[None, :]] -= c[i, j, :][None, :]
    return rows


@lru_cache(maxsize=None)
def derivation_nullspace(key):
    """Certified rational basis of der(carrier); key names a carrier."""
    return certified_nullspace(derivation_rows(_carrier(key)))


def _carrier(key):
    if key in ("O", "Os"):
        return composition_carrier(key)
    if key in ("CxO", "CxOs"):
        return tensor_carrier("C", key[2:])
    if key == "J3(O)":
        return jordan_carrier("R", "O")
    if key == "J3(Os)":
        return jordan_carrier("R", "Os")
    if key == "J2,1(O)":
        return jordan_carrier("R", "O", LORENTZ_METRIC)
    raise ValueError(f"unknown carrier {key!r}")


# ---------------------------------------------------------------------------
# operator spans: exact bases, brackets, Killing forms
# ---------------------------------------------------------------------------

_REAL_OP = "real_op"          # layout: n*n entries, operator matrix M[b][a]
_COMPLEX_OP = "complex_op"    # layout: u-flat (m*m) then v-flat, X = U + iV


class LieSpan:
    """A real Lie algebra of operators with an exact integer-scaled basis in
    reduced normal form: basis vector j equals den at read column j and 0 at
    the other read columns, so coordinates in the span are read directly."""

    def __init__(self, name, vectors_num, dens, readcols, layout, op_dim):
        self.name = name
        self.layout = layout
        self.op_dim = op_dim                     # operator matrix size
        self.readcols = list(readcols)
        self.dim = len(vectors_num)
        d = 1
        for x in dens:
            d = lcm(d, int(x))
        self.den = d
        mat = np.zeros((self.dim, len(vectors_num[0]) if self.dim else 0), dtype=object)
        for j, (vec, vd) in enumerate(zip(vectors_num, dens)):
            f = d // int(vd)
            for c, x in enumerate(vec):
                mat[j, c] = int(x) * f
        self._vecs = mat                         # shape (dim, m), denominator self.den
        self._struct = None

    @classmethod
    def from_nullspace(cls, name, ns, layout, op_dim):
        return cls(name, ns.basis_num, ns.basis_den, ns.freecols, layout, op_dim)

    @classmethod
    def from_vectors(cls, name, vectors_q, layout, op_dim):
        rows, pivots = _rref(vectors_q)
        nums, dens = [], []
        for row in rows:
            d = 1
            for x in row:
                d = lcm(d, x.denominator)
            nums.append([int(x * d) for x in row])
            dens.append(d)
        return cls(name, nums, dens, pivots, layout, op_dim)

    # -- operators ----------------------------------------------------------

    def _max_entry(self):
        return max((abs(int(x)) for x in self._vecs.reshape(-1)), default=0)

    def _use_int64(self):
        # brackets sum 2n products of basis entries; verification multiplies
        # the bracket by den on one side and contracts it with the basis on
        # the other; everything must stay below 2**62
        b0 = max(self._max_entry(), 1)
        wmax = 2 * self.op_dim * b0 * b0
        return max(wmax * self.den, self.dim * wmax * b0) < 2**62

    def operator_mats(self, dtype):
        """Integer operator matrices (scaled by self.den)."""
        n = self.op_dim
        vecs = self._vecs.astype(dtype) if dtype is not object else self._vecs
        if self.layout == _REAL_OP:
            return [v.reshape(n, n) for v in vecs]
        half = n * n
        return [(v[:half].reshape(n, n), v[half:].reshape(n, n)) for v in vecs]

    def _bracket_vec(self, mats, a, b):
        """Flattened integer bracket [X_a, X_b] (denominator self.den**2)."""
        if self.layout == _REAL_OP:
            ma, mb = mats[a], mats[b]
            w = ma @ mb - mb @ ma
            return w.reshape(-1)
        (ua, va), (ub, vb) = mats[a], mats[b]
        u = (ua @ ub - va @ vb) - (ub @ ua - vb @ va)
        v = (ua @ vb + va @ ub) - (ub @ va + vb @ ua)
        return np.concatenate([u.reshape(-1), v.reshape(-1)])

    def structure(self):
        """Integer structure tensor T with [e_a, e_b] = (1/den) sum_j T[a,b,j] e_j,
        verified exactly; raises ClosureError if a bracket leaves the span."""
        if self._struct is not None:
            return self._struct
        k = self.dim
        dtype = np.int64 if self._use_int64() else object
        mats = self.operator_mats(dtype)
        vecs = self._vecs.astype(dtype) if dtype is not object else self._vecs
        t = np.zeros((k, k, k), dtype=object)
        rc = np.array(self.readcols)
        for a in range(k):
            for b in range(a + 1, k):
                w = self._bracket_vec(mats, a, b)
                coeffs = w[rc]
                # w/den^2 must equal sum_j (coeffs_j/den^2) * vecs_j/den,
                # i.e. den * w == coeffs @ vecs exactly
                if not np.array_equal(w * self.den, coeffs @ vecs):
                    raise ClosureError(
                        f"{self.name}: bracket of basis elements {a},{b} "
                        "is not in the span"
                    )
                t[a, b, :] = [int(x) for x in coeffs]
                t[b, a, :] = [-int(x) for x in coeffs]
        # bracket coords carry denominator den relative to the basis
        self._struct = t
        return t

    def killing_int(self):
        """Killing form up to the positive factor den**2 (exact integers)."""
        t = self.structure()
        k = self.dim
        tmax = max((abs(int(x)) for x in t.reshape(-1)), default=0)
        if k * k * max(tmax, 1) ** 2 < 2**62:
            t = t.astype(np.int64)
        m1 = t.reshape(k, k * k)
        m2 = t.transpose(0, 2, 1).reshape(k, k * k)
        return (m1 @ m2.T).astype(object)

    def character(self, float_tol=1e-8):
        """chi = (#noncompact) - (#compact) from the Killing signature,
        computed on both the exact and the floating path."""
        kint = self.killing_int()
        pos, neg, zero = signature_exact([[Q(int(x)) for x in row] for row in kint])
        fpos, fneg, fzero = signature_float(np.array(kint, dtype=float), float_tol)
        return {
            "dim": self.dim,
            "signature_exact": (pos, neg, zero),
            "signature_float": (fpos, fneg, fzero),
            "paths_agree": (pos, neg, zero) == (fpos, fneg, fzero),
            "character": pos - neg,
        }


def _rref(vectors_q):
    """Reduced row echelon form over Q; returns (rows, pivot_cols), dropping
    zero rows."""
    m = [[Q(x) for x in v] for v in vectors_q]
    ncols = len(m[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        inv = 1 / prow[col]
        for c in range(col, ncols):
            prow[c] *= inv
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                row = m[r]
                for c in range(col, ncols):
                    row[c] -= f * prow[c]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return m[:rank], pivots


# ---------------------------------------------------------------------------
# derivation algebras
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def derivation_span(key):
    ns = derivation_nullspace(key)
    return LieSpan.from_nullspace(f"der({key})", ns, _REAL_OP, _carrier(key).dim)


@lru_cache(maxsize=None)
def derivation_report(key, float_tol=1e-8):
    span = derivation_span(key)
    rep = span.character(float_tol)
    rep["name"] = span.name
    return rep


# ---------------------------------------------------------------------------
# reduced structure algebras: der(J) + traceless multiplications
# ---------------------------------------------------------------------------

def _trace_vector(scalar_kind, oct_name, metric=IDENTITY_METRIC):
    basis = hermitian_basis(algebra(scalar_kind, oct_name), OCTONIONIC, metric)
    return [b.trace().re for b in basis]


def _l_operator_mats(carrier):
    """L_i with L_i x = e_i o x: (L_i)[k][b] = c[i,b,k] / denom."""
    n = carrier.dim
    return [carrier.struct[i].T for i in range(n)]  # shape (k, b)


@lru_cache(maxsize=None)
def reduced_structure_span(oct_name):
    """der(J3) + {L_a : tr a = 0} acting on the 27-dimensional Jordan
    algebra over R."""
    key = f"J3({oct_name})"
    carrier = _carrier(key)
    n = carrier.dim
    ns = derivation_nullspace(key)
    vectors = [ns.vector_q(j) for j in range(ns.dim)]
    lmats = _l_operator_mats(carrier)
    tr = _trace_vector("R", oct_name)
    # traceless combinations: differences of the diagonal units plus every
    # trace-free basis element
    combos = []
    diag = [i for i, t in enumerate(tr) if t != 0]
    for a, b in zip(diag, diag[1:]):
        combos.append({a: Q(1) / tr[a], b: -Q(1) / tr[b]})
    combos.extend({i: Q(1)} for i, t in enumerate(tr) if t == 0)
    for combo in combos:
        mat = np.zeros((n, n), dtype=object)
        for i, w in combo.items():
            mat = mat + np.array(lmats[i], dtype=object) * w
        vectors.append([Q(x) / carrier.denom for x in np.asarray(mat).reshape(-1)])
    return LieSpan.from_vectors(f"str0(J3({oct_name}))", vectors, _REAL_OP, n)


@lru_cache(maxsize=None)
def reduced_structure_report(oct_name, float_tol=1e-8):
    span = reduced_structure_span(oct_name)
    rep = span.character(float_tol)
    rep["name"] = span.name
    return rep


# ---------------------------------------------------------------------------
# unitary algebras on the complexified Jordan algebra
# ---------------------------------------------------------------------------

def _complex_jordan_basis(oct_name):
    """The 27 matrices spanning the real form inside C x herm3: a complex
    basis of the complexified Jordan algebra."""
    alg = algebra("C", oct_name)
    zero = TensorElement.zero(alg)
    out = []
    for d in range(3):
        grid = [[zero] * 3 for _ in range(3)]
        grid[d][d] = TensorElement.one(alg)
        out.append(HermMatrix3(alg, grid))
    for slot in range(3):
        for k in range(8):
            b = [zero, zero, zero]
            b[slot] = TensorElement.unit(alg, k)
            out.append(HermMatrix3.from_parts(alg, [0, 0, 0], b))
    return out


def _eta_twist(m, metric):
    """sigma_eta(A) = eta A eta for a diagonal sign metric eta."""
    grid = [
        [m.entries[i][j] if metric[i] * metric[j] > 0 else -m.entries[i][j]
         for j in range(3)]
        for i in range(3)
    ]
    return HermMatrix3(m.alg, grid, m.conj_kind, m.metric)


def _cubic_trilinear(basis):
    """T3[i][j][k] = full polarization of det on basis triples (real rationals)."""
    n = len(basis)
    det_cache = {}

    def det_of(ids):
        key = tuple(sorted(ids))
        if key not in det_cache:
            m = basis[key[0]]
            for i in key[1:]:
                m = m + basis[i]
            d = m.det()
            if d.im != 0:
                raise ArithmeticError("cubic form is not real on the real basis")
            det_cache[key] = d.re
        return det_cache[key]

    t3 = {}
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                val = (
                    det_of((i, j, k))
                    - det_of((i, j)) - det_of((i, k)) - det_of((j, k))
                    + det_of((i,)) + det_of((j,)) + det_of((k,))
                )
                if val != 0:
                    t3[(i, j, k)] = val
    return t3


def _t3_lookup(t3, i, j, k):
    return t3.get(tuple(sorted((i, j, k))), Q(0))


@lru_cache(maxsize=None)
def unitary_span(oct_name, metric=IDENTITY_METRIC):
    """Complex-linear operators X = U + iV on the complexified Jordan algebra
    that kill the polarized determinant and are anti-Hermitian for
    h(A,B) = T(sigma_eta(tau(A)), B), tau = coefficient-wise complex
    conjugation on the chosen real form."""
    basis = _complex_jordan_basis(oct_name)
    n = len(basis)
    t3 = _cubic_trilinear(basis)
    # H[j][k] = T(sigma_eta(e_j), e_k), real symmetric
    h = np.zeros((n, n), dtype=object)
    denom = 1
    twisted = [_eta_twist(b, metric) for b in basis]
    hq = [[twisted[j].trace_form(basis[k]) for k in range(n)] for j in range(n)]
    for j in range(n):
        for k in range(n):
            if hq[j][k].im != 0:
                raise ArithmeticError("trace pairing is not real on the real basis")
            denom = lcm(denom, hq[j][k].re.denominator)
    for v in t3.values():
        denom = lcm(denom, v.denominator)
    for j in range(n):
        for k in range(n):
            h[j, k] = int(hq[j][k].re * denom)

    nn = n * n
    rows = []
    # cubic rows: identical conditions on U (columns 0..nn) and V (nn..2nn)
    for block in (0, nn):
        for i in range(n):
            for j in range(i, n):
                for k in range(j, n):
                    row = np.zeros(2 * nn, dtype=np.int64)
                    for b in range(n):
                        row[block + b * n + i] += int(_t3_lookup(t3, b, j, k) * denom)
                        row[block + b * n + j] += int(_t3_lookup(t3, b, i, k) * denom)
                        row[block + b * n + k] += int(_t3_lookup(t3, b, i, j) * denom)
                    if row.any():
                        rows.append(row)
    # Hermiticity rows: U^T H + H U = 0 and H V - V^T H = 0
    for j in range(n):
        for k in range(j, n):
            row = np.zeros(2 * nn, dtype=np.int64)
            for b in range(n):
                row[b * n + j] += int(h[b, k])
                row[b * n + k] += int(h[j, b])
            if row.any():
                rows.append(row)
    for j in range(n):
        for k in range(n):
            row = np.zeros(2 * nn, dtype=np.int64)
            for b in range(n):
                row[nn + b * n + j] -= int(h[b, k])
                row[nn + b * n + k] += int(h[j, b])
            if row.any():
                rows.append(row)
    ns = certified_nullspace(np.array(rows, dtype=np.int64))
    tag = "" if metric == IDENTITY_METRIC else ";2,1"
    return LieSpan.from_nullspace(
        f"unitary(Cx{oct_name}{tag})", ns, _COMPLEX_OP, n
    )


@lru_cache(maxsize=None)
def unitary_report(oct_name, metric=IDENTITY_METRIC, float_tol=1e-8):
    span = unitary_span(oct_name, metric)
    rep = span.character(float_tol)
    rep["name"] = span.name
    return rep


# ---------------------------------------------------------------------------
# complex-linear derivations of the complexified Jordan algebra
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def complexified_derivation_span(oct_name):
    """C-linear derivations X = U + iV of the complexified Jordan algebra.

    The structure constants on the real-form basis are real, so the
    derivation condition decouples into the same real system on U and V.
    """
    key = f"J3({oct_name})"
    n = _carrier(key).dim
    ns = derivation_nullspace(key)
    m = n * n
    # the doubled system is block diagonal, so its nullspace is the direct
    # sum of the (U, 0) and (0, V) copies of the real solution
    nums, dens, readcols = [], [], []
    for j in range(ns.dim):
        vec = np.zeros(2 * m, dtype=object)
        vec[:m] = ns.basis_num[j]
        nums.append(vec)
        dens.append(ns.basis_den[j])
        readcols.append(ns.freecols[j])
    for j in range(ns.dim):
        vec = np.zeros(2 * m, dtype=object)
        vec[m:] = ns.basis_num[j]
        nums.append(vec)
        dens.append(ns.basis_den[j])
        readcols.append(m + ns.freecols[j])
    return LieSpan(f"derC(Cxherm3({oct_name}))", nums, dens, readcols,
                   _COMPLEX_OP, n)


@lru_cache(maxsize=None)
def complexified_derivation_report(oct_name, float_tol=1e-8):
    span = complexified_derivation_span(oct_name)
    rep = span.character(float_tol)
    rep["name"] = span.name
    rep["dim_complex"] = rep["dim"] // 2
    return rep


# ---------------------------------------------------------------------------
# matrix-model parameter counts
# ---------------------------------------------------------------------------

def _model_space(alg_key):
    """(basis, coords, conj) of the coefficient algebra for the models."""
    if alg_key in ("O", "Os"):
        alg = algebra("R", alg_key)
        basis = [TensorElement.unit(alg, k) for k in range(8)]
        return basis, (lambda m: [c.re for c in m.z]), OCTONIONIC
    if alg_key in ("CxO", "CxOs"):
        alg = algebra("C", alg_key[2:])
        return _tensor_basis(alg), _tensor_coords, FULL
    raise ValueError(f"unknown coefficient algebra {alg_key!r}")


@lru_cache(maxsize=None)
def matrix_model_dimension(model, alg_key):
    """Real dimension of a3 (traceless) or sa3 (traceless anti-Hermitian)
    3x3 matrices over the coefficient algebra, by exact nullity of the
    defining linear constraints."""
    basis, coords, conj = _model_space(alg_key)
    d = len(basis)
    ncols = 9 * d
    conj_mat = [coords(b.conjugate(conj)) for b in basis]

    def col(i, j, t):
        return (3 * i + j) * d + t

    rows = []
    # trace rows: sum_i a_ii = 0, coefficient-wise
    for c in range(d):
        row = [Q(0)] * ncols
        for i in range(3):
            row[col(i, i, c)] += 1
        rows.append(row)
    if model == "sa3":
        # a_ij + conj(a_ji) = 0 for all i, j
        for i in range(3):
            for j in range(3):
                for c in range(d):
                    row = [Q(0)] * ncols
                    for t in range(d):
                        if t == c:
                            row[col(i, j, t)] += 1
                        row[col(j, i, t)] += conj_mat[t][c]
                    rows.append(row)
    elif model != "a3":
        raise ValueError(f"unknown matrix model {model!r}")
    return len(nullspace_exact(rows, ncols))


def matrix_model_report():
    """Parameter counts of the matrix models and their sums with dim der(O)."""
    a3_o = matrix_model_dimension("a3", "O")
    sa3_o = matrix_model_dimension("sa3", "O")
    sa3_co = matrix_model_dimension("sa3", "CxO")
    g2 = derivation_report("O")["dim"]
    return {
        "a3(O)": a3_o,
        "sa3(O)": sa3_o,
        "sa3(CxO)": sa3_co,
        "der(O)": g2,
        "collineation_sum": {"value": a3_o + g2, "expected": 78,
                             "pass": a3_o + g2 == 78},
        "isometry_sum": {"value": sa3_o + g2, "expected": 52,
                         "pass": sa3_o + g2 == 52},
        "bioctonionic_sum": {"value": sa3_co + g2, "expected": 78,
                             "pass": sa3_co + g2 == 78},
    }


# ---------------------------------------------------------------------------
# summary tables and coset arithmetic
# ---------------------------------------------------------------------------

_F4_EXPECTED = {
    "der(O)": (14, -14),
    "der(J3(O))": (52, -52),
    "der(J3(Os))": (52, 4),
    "der(J2,1(O))": (52, -20),
}

_E6_EXPECTED = {
    "str0(J3(O))": (78, -26),
    "str0(J3(Os))": (78, 6),
    "unitary(CxO)": (78, -78),
    "unitary(CxO;2,1)": (78, -14),
    "unitary(CxOs)": (78, 2),
}


def derivation_table(float_tol=1e-8):
    """Derivation algebras (the F4 family plus g2) with expected values."""
    out = []
    for key in ("O", "J3(O)", "J3(Os)", "J2,1(O)"):
        rep = derivation_report(key, float_tol)
        exp_dim, exp_chi = _F4_EXPECTED[f"der({key})"]
        out.append({
            "algebra": rep["name"],
            "dim": rep["dim"], "expected_dim": exp_dim,
            "character": rep["character"], "expected_character": exp_chi,
            "signature_exact": rep["signature_exact"],
            "paths_agree": rep["paths_agree"],
            "pass": rep["dim"] == exp_dim and rep["character"] == exp_chi
                    and rep["paths_agree"],
        })
    return out


def structure_table(float_tol=1e-8):
    """Reduced structure and unitary algebras (the E6 family)."""
    out = []
    for oct_name in ("O", "Os"):
        rep = reduced_structure_report(oct_name, float_tol)
        exp_dim, exp_chi = _E6_EXPECTED[f"str0(J3({oct_name}))"]
        out.append({
            "algebra": rep["name"],
            "dim": rep["dim"], "expected_dim": exp_dim,
            "character": rep["character"], "expected_character": exp_chi,
            "signature_exact": rep["signature_exact"],
            "paths_agree": rep["paths_agree"],
            "pass": rep["dim"] == exp_dim and rep["character"] == exp_chi,
        })
    for oct_name, metric, tag in (
        ("O", IDENTITY_METRIC, "unitary(CxO)"),
        ("O", LORENTZ_METRIC, "unitary(CxO;2,1)"),
        ("Os", IDENTITY_METRIC, "unitary(CxOs)"),
    ):
        rep = unitary_report(oct_name, metric, float_tol)
        exp_dim, exp_chi = _E6_EXPECTED[tag]
        out.append({
            "algebra": rep["name"],
            "dim": rep["dim"], "expected_dim": exp_dim,
            "character": rep["character"], "expected_character": exp_chi,
            "signature_exact": rep["signature_exact"],
            "paths_agree": rep["paths_agree"],
            "pass": rep["dim"] == exp_dim and rep["character"] == exp_chi,
        })
    return out


def coset_dimensions():
    """Symmetric-space dimension arithmetic for the projective and hyperbolic
    planes: F4/Spin(9) and the E6(-14) coset."""
    f4 = {"total": 52, "stabilizer": 36, "dim": 52 - 36, "expected": 16}
    e6 = {"total": 78, "stabilizer": 45, "center": 1,
          "dim": 78 - 45 - 1, "expected": 32}
    f4["pass"] = f4["dim"] == f4["expected"]
    e6["pass"] = e6["dim"] == e6["expected"]
    return {"octonionic_projective": f4, "bioctonionic_projective": e6}
