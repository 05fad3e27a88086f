"""Exact linear algebra: small dense rational elimination, and a certified
modular nullspace engine for the large derivation / isometry solves.

The modular engine row-reduces an integer matrix over several word-sized
prime fields, lifts the nullspace by CRT + rational reconstruction, and then
*proves* the result over Q:

  * each reconstructed vector is checked against the original integer matrix
    with exact integer arithmetic, so nullity_Q >= k;
  * for an integer matrix rank can only drop modulo p, hence
    nullity_Q <= nullity_p = k.

Together these certify both the rational basis and the exact rank, with no
tolerance anywhere.
"""

from math import gcd, isqrt, lcm

import numpy as np

from .scalars import Q

# All primes satisfy (p-1)**2 * 1458 < 2**53, so any sum of <= 1458 products
# of two reduced residues is exactly representable in float64 and the BLAS
# matmul used during echelon reduction is exact; p**2 * 4096 < 2**63 keeps
# the int64 paths exact as well.
_PRIMES = (2479991, 2479987, 2479963, 2479927, 2479913, 2479903, 2479901, 2479879)
_MAX_COLS = 1458


class ClosureError(RuntimeError):
    """A candidate operator basis is not closed under commutators."""


# ---------------------------------------------------------------------------
# small exact elimination over the rationals
# ---------------------------------------------------------------------------

def rank_exact(rows):
    """Exact rank of a list of rows of gmpy2 rationals (destructive on a copy)."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                piv = r
                break
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
        rank += 1
        if rank == len(m):
            break
    return rank


def nullspace_exact(rows, ncols):
    """Exact rational nullspace basis of the system ``rows * x = 0``.

    Returns a list of length-``ncols`` lists of gmpy2 rationals.
    """
    m = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                piv = r
                break
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
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * ncols
        v[f] = Q(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][f]
        basis.append(v)
    return basis


def solve_in_span(basis_vecs, target, ncols):
    """Express ``target`` as a rational combination of ``basis_vecs``.

    Returns the coefficient list, or None if the target is not in the span.
    Small dense exact solve; used only for modest systems.
    """
    rows = []
    for c in range(ncols):
        rows.append([v[c] for v in basis_vecs] + [target[c]])
    # eliminate
    k = len(basis_vecs)
    m = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(k):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        inv = 1 / prow[col]
        for c in range(col, k + 1):
            prow[c] *= inv
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                for c in range(col, k + 1):
                    m[r][c] -= f * prow[c]
        pivots.append(col)
        rank += 1
    coeffs = [Q(0)] * k
    for r, pc in enumerate(pivots):
        coeffs[pc] = m[r][k]
    # consistency rows
    for r in range(len(m)):
        if r >= rank and m[r][k] != 0:
            return None
    # verify (guards float-free correctness of the elimination bookkeeping)
    for c in range(ncols):
        acc = Q(0)
        for j in range(k):
            acc += coeffs[j] * basis_vecs[j][c]
        if acc != target[c]:
            return None
    return coeffs


# ---------------------------------------------------------------------------
# modular echelon machinery
# ---------------------------------------------------------------------------

def _echelon_mod(a, p, chunk=512):
    """Forward row echelon of integer matrix ``a`` modulo ``p``.

    Returns (pivot_cols, echelon) with pivot entries normalized to 1 and each
    row fully reduced at its insertion time.  The bulk reduction runs through
    float64 BLAS matmuls, which are exact here because every dot product stays
    below 2**53 (see the prime bounds above).
    """
    n = a.shape[1]
    if n > _MAX_COLS:
        raise ValueError("matrix too wide for the modular engine")
    erows = []            # int64 rows, entries in [0, p)
    pivcols = []
    pivmap = {}
    for start in range(0, a.shape[0], chunk):
        block = np.mod(a[start : start + chunk].astype(np.int64), p)
        if erows:
            e = np.array(erows, dtype=np.float64)
            coeff = block[:, pivcols].astype(np.float64)
            block = np.mod((block.astype(np.float64) - coeff @ e).astype(np.int64), p)
        for row in block:
            while True:
                nz = np.nonzero(row)[0]
                if not nz.size:
                    break
                col = int(nz[0])
                hit = pivmap.get(col)
                if hit is None:
                    row = (row * pow(int(row[col]), -1, p)) % p
                    pivmap[col] = len(pivcols)
                    pivcols.append(col)
                    erows.append(row)
                    break
                row = (row - int(row[col]) * erows[hit]) % p
    order = np.argsort(pivcols, kind="stable")
    pivcols = [pivcols[i] for i in order]
    erows = [erows[i] for i in order]
    return pivcols, (np.array(erows, dtype=np.int64) if erows else np.zeros((0, n), np.int64))


def _nullspace_mod(a, p):
    """Nullspace basis of ``a`` modulo ``p`` in free-variable normal form.

    Returns (pivcols, freecols, basis) where basis has shape (nfree, ncols),
    basis[j] has 1 at freecols[j] and 0 at the other free columns.
    """
    n = a.shape[1]
    pivcols, e = _echelon_mod(a, p)
    pivset = set(pivcols)
    freecols = [c for c in range(n) if c not in pivset]
    k = len(freecols)
    x = np.zeros((n, k), dtype=np.int64)
    for j, f in enumerate(freecols):
        x[f, j] = 1
    # back substitution: rows are in increasing pivot order, each row has
    # zeros at earlier pivot columns, so process bottom-up
    for i in range(len(pivcols) - 1, -1, -1):
        pc = pivcols[i]
        row = e[i]
        acc = np.mod(row[pc + 1 :] @ x[pc + 1 :, :], p)
        x[pc, :] = np.mod(-acc, p)
    return pivcols, freecols, x.T


def _crt_pair(r1, m1, r2, m2):
    inv = pow(m1 % m2, -1, m2)
    t = ((r2 - r1) * inv) % m2
    return r1 + m1 * t, m1 * m2


def _rat_reconstruct(r, m):
    """Wang rational reconstruction of residue r mod m, or None."""
    lim = isqrt(m // 2)
    v0, v1 = m, r % m
    c0, c1 = 0, 1
    while v1 > lim:
        q = v0 // v1
        v0, v1 = v1, v0 - q * v1
        c0, c1 = c1, c0 - q * c1
    num, den = v1, c1
    if den == 0:
        return None
    if den < 0:
        num, den = -num, -den
    if abs(num) > lim or den > lim:
        return None
    if gcd(abs(num), den) != 1:
        return None
    return num, den


class Nullspace:
    """Certified rational nullspace: ``basis_num[j] / basis_den[j]``."""

    def __init__(self, ncols, rank, pivcols, freecols, basis_num, basis_den, primes):
        self.ncols = ncols
        self.rank = rank
        self.pivcols = pivcols
        self.freecols = freecols
        self.basis_num = basis_num  # list of python-int numpy vectors
        self.basis_den = basis_den  # list of ints; vector j is basis_num[j]/basis_den[j]
        self.primes = primes

    @property
    def dim(self):
        return len(self.basis_num)

    def vector_q(self, j):
        d = self.basis_den[j]
        return [Q(int(x), d) for x in self.basis_num[j]]


def _verify_int_nullvector(a, v):
    """Exact check a @ v == 0 for integer matrix a (int64) and int vector v."""
    amax = int(np.abs(a).max()) if a.size else 0
    vmax = max((abs(int(x)) for x in v), default=0)
    if amax * vmax * a.shape[1] < 2**62:
        r = a @ np.asarray(v, dtype=np.int64)
        return not np.any(r)
    acc = a.astype(object) @ np.asarray([int(x) for x in v], dtype=object)
    return not any(acc)


def certified_nullspace(a):
    """Exact rational nullspace of integer matrix ``a`` (numpy int array).

    Raises ArithmeticError if certification fails with all available primes
    (never observed for the systems in this package).
    """
    a = np.ascontiguousarray(a, dtype=np.int64)
    n = a.shape[1]
    residues = None
    modulus = None
    pivcols0 = freecols0 = None
    used = []
    for p in _PRIMES:
        pivcols, freecols, basis = _nullspace_mod(a, p)
        if pivcols0 is None:
            pivcols0, freecols0 = pivcols, freecols
            residues = basis.astype(object)
            modulus = p
        else:
            if pivcols != pivcols0:
                # rank dropped modulo one of the primes; keep whichever prime
                # saw the higher rank and restart the accumulation from it
                if len(pivcols) > len(pivcols0):
                    pivcols0, freecols0 = pivcols, freecols
                    residues = basis.astype(object)
                    modulus = p
                    used = [p]
                continue
            new = basis.astype(object)
            for j in range(residues.shape[0]):
                for c in range(n):
                    residues[j, c], _ = _crt_pair(int(residues[j, c]), modulus, int(new[j, c]), p)
            modulus *= p
        used.append(p)
        if len(used) < 2:
            continue
        # attempt reconstruction + certification
        ok = True
        nums, dens = [], []
        for j in range(residues.shape[0]):
            entries = []
            for c in range(n):
                rec = _rat_reconstruct(int(residues[j, c]) % modulus, modulus)
                if rec is None:
                    ok = False
                    break
                entries.append(rec)
            if not ok:
                break
            den = 1
            for _, d in entries:
                den = lcm(den, d)
            vec = np.array([num * (den // d) for num, d in entries], dtype=object)
            if not _verify_int_nullvector(a, vec):
                ok = False
                break
            nums.append(vec)
            dens.append(den)
        if ok:
            return Nullspace(n, len(pivcols0), pivcols0, freecols0, nums, dens, tuple(used))
    raise ArithmeticError("rational reconstruction of nullspace failed")


# ---------------------------------------------------------------------------
# signatures of symmetric matrices
# ---------------------------------------------------------------------------

def signature_exact(k):
    """Signature (pos, neg, zero) of a symmetric matrix of rationals.

    Congruence diagonalization with the usual row+column trick when a zero
    diagonal pivot meets a nonzero off-diagonal entry.
    """
    m = [[Q(x) for x in row] for row in k]
    n = len(m)

    def add_multiple(i, j, f):
        # row_i += f*row_j, then col_i += f*col_j  (congruence by E_ij(f))
        for c in range(n):
            m[i][c] += f * m[j][c]
        for r in range(n):
            m[r][i] += f * m[r][j]

    pos = neg = zero = 0
    for i in range(n):
        if m[i][i] == 0:
            j = next((j for j in range(i + 1, n) if m[i][j] != 0), None)
            if j is None:
                zero += 1
                continue
            # 2*s*m[i][j] + m[j][j] cannot vanish for both signs s
            s = Q(1) if 2 * m[i][j] + m[j][j] != 0 else Q(-1)
            add_multiple(i, j, s)
        d = m[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for r in range(i + 1, n):
            if m[r][i] != 0:
                add_multiple(r, i, -m[r][i] / d)
    return pos, neg, zero


def signature_float(k, tol=1e-8):
    """Signature of a symmetric float matrix by eigenvalue sign counting."""
    w = np.linalg.eigvalsh(np.asarray(k, dtype=float))
    scale = max(1.0, float(np.abs(w).max()))
    pos = int(np.sum(w > tol * scale))
    neg = int(np.sum(w < -tol * scale))
    return pos, neg, len(w) - pos - neg
