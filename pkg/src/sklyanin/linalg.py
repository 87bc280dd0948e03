"""Exact dense linear algebra over any of the scalar fields.

Matrices are lists of rows. The pure routines work for Fraction, QZeta and
Fp entries alike; ``rank_int``, ``rank_mod`` and ``rank_zeta`` hand large integer matrices to
FLINT.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from flint import fmpz_mat, nmod_mat


def rref(rows):
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        inv = Fraction(1, piv) if isinstance(piv, int) else 1 / piv
        m[r] = [v * inv for v in m[r]]
        piv = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], piv)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int, one=1):
    """Basis of {v : rows . v = 0}, one vector per free column."""
    red, pivots = rref(rows)
    zero = one - one
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(rows, rhs, one=1):
    """One solution x of rows . x = rhs, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    zero = one - one
    x = [zero] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[-1]
    return x


# ----------------------------------------------------------------------
# fast exact ranks


def rank_int(mat: np.ndarray) -> int:
    """Exact rank over Q of an integer matrix."""
    if mat.size == 0:
        return 0
    return fmpz_mat(mat.astype(object).tolist()).rank()


def rank_mod(mat: np.ndarray, p: int) -> int:
    """Exact rank over F_p of an integer matrix (entries reduced mod p)."""
    if mat.size == 0:
        return 0
    return nmod_mat((mat % p).astype(object).tolist(), p).rank()


def rank_zeta(a: np.ndarray, b: np.ndarray) -> int:
    """Rank over Q(zeta) of the matrix a + b*zeta with integer a, b.

    Uses the regular representation of Q(zeta) over Q: multiplication by
    a + b*zeta on the basis (1, zeta) is [[a, -b], [b, a - b]], so the
    realified matrix has exactly twice the rank.
    """
    if a.size == 0:
        return 0
    real = np.block([[a, -b], [b, a - b]])
    r = rank_int(real)
    assert r % 2 == 0
    return r // 2
