"""
The point parameter ring B of S(1,1,1).

B_d is computed as the space of degree-d multilinear forms restricted to
V_d. On a component with l line slots such a restriction has degree at most
one in each line parameter, so it is pinned down by its values on the grid
[1:0], [0:1] in every line slot. The rank of the grid evaluation matrix is
therefore exactly dim B_d.

Large ranks go through integer matrices: over Q(zeta) every grid coordinate
lies in Z[zeta] and is carried as a pair of int64 arrays (a, b) for a + b*zeta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .freealg import NcPoly, all_words
from .geometry import ComponentSpec, Line, ProjPoint, component_specs, singular_locus, slot_geometry
from .linalg import nullspace, rank, rank_mod, rank_zeta, rref
from .rewrite import RewriteSystem, normal_form, normal_words
from .scalars import QW, Field, QZeta


class TooLarge(ValueError):
    pass


def dim_B(d: int) -> int:
    if d < 0:
        raise ValueError("negative degree")
    if d == 0:
        return 1
    if d == 1:
        return 3
    return 3 * (2 ** ((d + 1) // 2) + 2 ** math.ceil((d - 1) / 2)) - 6


# ----------------------------------------------------------------------
# grids


GRID_PARAMS = ((1, 0), (0, 1))


@dataclass(frozen=True)
class GridSpec:
    """Two parameter points per line slot; point slots are fixed."""

    spec: ComponentSpec
    params: tuple = GRID_PARAMS

    def rows(self, fld: Field) -> list[tuple]:
        """Coordinate triples (one per slot) for each grid point."""
        geoms = [slot_geometry(s, fld) for s in self.spec.slots()]
        choices = []
        for g in geoms:
            if isinstance(g, ProjPoint):
                choices.append([g.coords])
            else:
                choices.append([g.representative(fld(y), fld(z)) for y, z in self.params])
        return list(product(*choices))


def grid_rows(d: int, fld: Field) -> list[tuple]:
    if d == 1:
        one, zero = fld.one, fld.zero
        return [((one, zero, zero),), ((zero, one, zero),), ((zero, zero, one),)]
    rows = []
    for spec in component_specs(d):
        rows.extend(GridSpec(spec).rows(fld))
    return rows


# ----------------------------------------------------------------------
# integer encodings of exact coordinates


def _zeta_pair(x) -> tuple[int, int]:
    x = QW(x)
    if x.a.denominator != 1 or x.b.denominator != 1:
        raise ValueError(f"{x} is not in Z[zeta]")
    return int(x.a), int(x.b)


def _coord_arrays(rows, fld: Field):
    """Arrays of shape (rows, d, 3): one int array over F_p, or (a, b) over Q(zeta)."""
    if fld.spec.kind == "prime":
        return (np.array([[[int(c) for c in p] for p in r] for r in rows], dtype=np.int64),)
    pairs = [[[_zeta_pair(c) for c in p] for p in r] for r in rows]
    arr = np.array(pairs, dtype=np.int64)
    return arr[..., 0], arr[..., 1]


def _zmul(a1, b1, a2, b2):
    bb = b1 * b2
    return a1 * a2 - bb, a1 * b2 + a2 * b1 - bb


def eval_matrix(rows, words, fld: Field):
    """Entry (r, w) = prod_j coord_{w_j}(p_j); returned as integer arrays."""
    d = len(words[0]) if words else 0
    W = np.array([list(w) for w in words], dtype=np.int64).reshape(len(words), d)
    arrays = _coord_arrays(rows, fld)
    n = len(rows)
    if fld.spec.kind == "prime":
        (C,) = arrays
        p = fld.p
        out = np.ones((n, len(words)), dtype=np.int64)
        for j in range(d):
            out = (out * C[:, j, :][:, W[:, j]]) % p
        return (out,)
    A, B = arrays
    oa = np.ones((n, len(words)), dtype=np.int64)
    ob = np.zeros((n, len(words)), dtype=np.int64)
    for j in range(d):
        oa, ob = _zmul(oa, ob, A[:, j, :][:, W[:, j]], B[:, j, :][:, W[:, j]])
    return oa, ob


def full_eval_matrix(rows, fld: Field):
    """All 3^d word columns in lexicographic order, built by outer products."""
    arrays = _coord_arrays(rows, fld)
    n, d = arrays[0].shape[:2]
    if fld.spec.kind == "prime":
        (C,) = arrays
        out = np.ones((n, 1), dtype=np.int64)
        for j in range(d):
            out = (out[:, :, None] * C[:, j, None, :]).reshape(n, -1) % fld.p
        return (out,)
    A, B = arrays
    oa = np.ones((n, 1), dtype=np.int64)
    ob = np.zeros((n, 1), dtype=np.int64)
    for j in range(d):
        oa, ob = _zmul(oa[:, :, None], ob[:, :, None], A[:, j, None, :], B[:, j, None, :])
        oa, ob = oa.reshape(n, -1), ob.reshape(n, -1)
    return oa, ob


def matrix_rank(mats, fld: Field) -> int:
    if fld.spec.kind == "prime":
        return rank_mod(mats[0], fld.p)
    return rank_zeta(*mats)


def to_field_matrix(mats, fld: Field) -> list[list]:
    if fld.spec.kind == "prime":
        return [[fld(int(v)) for v in row] for row in mats[0]]
    A, B = mats
    return [[QZeta(int(a), int(b)) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


# ----------------------------------------------------------------------
# dimensions


def dim_B_oracle(d: int, fld: Field = QW, bound: int = 8) -> int:
    if d > bound:
        raise TooLarge(f"oracle degree {d} exceeds bound {bound} (3^d columns)")
    if d == 0:
        return 1
    return matrix_rank(full_eval_matrix(grid_rows(d, fld), fld), fld)


def _section_basis_values(spec: ComponentSpec, pts, fld: Field) -> list:
    """Values at ``pts`` of the 2^l monomials choosing y or z in each line slot.

    Points are given with first coordinate 1; the line representative at
    parameters (y, z) = (p_1, p_2) must reproduce that normalization.
    """
    vals = []
    lines = spec.line_slots()
    for j in lines:
        g = slot_geometry(spec.slots()[j], fld)
        assert isinstance(g, Line) and tuple(g.representative(pts[j][1], pts[j][2])) == tuple(pts[j].coords)
    for choice in product((1, 2), repeat=len(lines)):
        v = fld.one
        for j, k in zip(lines, choice):
            v = v * pts[j][k]
        vals.append(v)
    return vals


def glue_matrix(d: int, fld: Field = QW) -> tuple[list[list], int]:
    """Rows: one per singular point, section values on one component minus
    the other. Returns (matrix, total number of section coordinates)."""
    specs = component_specs(d)
    offsets, total = {}, 0
    for s in specs:
        offsets[s.index] = total
        total += 2 ** len(s.line_slots())
    rows = []
    for pts, (i, j) in singular_locus(d, fld):
        row = [fld.zero] * total
        for idx, sign in ((i, 1), (j, -1)):
            spec = specs[idx - 1]
            for k, v in enumerate(_section_basis_values(spec, pts, fld)):
                row[offsets[idx] + k] = row[offsets[idx] + k] + v * sign
        rows.append(row)
    return rows, total


def glued_section_dim(d: int, fld: Field = QW) -> int:
    if d < 2:
        raise ValueError("glued sections need d >= 2")
    rows, total = glue_matrix(d, fld)
    return total - rank(rows)


def glue_rank(d: int, fld: Field = QW) -> int:
    return rank(glue_matrix(d, fld)[0])


# ----------------------------------------------------------------------
# generation and kernel


def normal_word_matrix(d: int, rs: RewriteSystem, fld: Field):
    words = normal_words(rs, d)
    return words, eval_matrix(grid_rows(d, fld), words, fld)


def generation_rank(d: int, rs: RewriteSystem, fld: Field = QW) -> int:
    if d == 0:
        return 1
    _, mats = normal_word_matrix(d, rs, fld)
    return matrix_rank(mats, fld)


def check_degree_one_generation(d: int, rs: RewriteSystem, fld: Field = QW) -> bool:
    return generation_rank(d, rs, fld) == dim_B(d)


def kernel_basis(d: int, rs: RewriteSystem, fld: Field = QW) -> list[NcPoly]:
    """Basis of ker(S_d -> B_d) in normal-word coordinates."""
    if d == 0:
        return []
    words, mats = normal_word_matrix(d, rs, fld)
    M = to_field_matrix(mats, fld)
    return [NcPoly(dict(zip(words, v))) for v in nullspace(M, len(words), fld.one)]


def evaluate(p: NcPoly, pts, fld: Field = QW):
    """Evaluate a homogeneous polynomial at a tuple of coordinate triples."""
    total = fld.zero
    for w, c in p.terms.items():
        v = c
        for j, g in enumerate(w):
            v = v * pts[j][g]
        total = total + v
    return total


def ideal_span_rank(K: list[NcPoly], rs: RewriteSystem, fld: Field = QW) -> tuple[int, list[NcPoly]]:
    """Rank of S_1 K + K S_1 one degree up, in normal-word coordinates."""
    prods = []
    for kappa in K:
        for g in range(rs.n_generators):
            x = NcPoly.gen(g, fld.one)
            prods.append(normal_form(rs, x * kappa))
            prods.append(normal_form(rs, kappa * x))
    words = sorted({w for p in prods for w in p.terms}, key=rs.order.key)
    rows = [[p.terms.get(w, fld.zero) for w in words] for p in prods]
    return (len(rref(rows)[1]) if rows else 0), prods


@dataclass
class KernelReport:
    d: int
    dim_S: int
    dim_B: int
    basis: list
    new_generators: int | None = None


def kernel_report(d: int, rs: RewriteSystem, fld: Field = QW) -> KernelReport:
    K = kernel_basis(d, rs, fld)
    dim_S = len(normal_words(rs, d))
    rep = KernelReport(d, dim_S, dim_S - len(K), K)
    if d >= 2:
        prev = kernel_basis(d - 1, rs, fld)
        r, _ = ideal_span_rank(prev, rs, fld)
        rep.new_generators = len(K) - r
    return rep


# ----------------------------------------------------------------------
# Hilbert series


def series_coefficients(D: int) -> list[int]:
    """Taylor coefficients of (1+t^2)(1+2t) / ((1-2t^2)(1-t))."""
    num = [1, 2, 1, 2]
    den = [1, -1, -2, 2]
    out = []
    for n in range(D + 1):
        v = Fraction(num[n] if n < len(num) else 0)
        for k in range(1, min(n, len(den) - 1) + 1):
            v -= den[k] * out[n - k]
        out.append(v)
    assert all(v.denominator == 1 for v in out)
    return [int(v) for v in out]


def hilbert_series_report(D: int) -> dict:
    if D < 4:
        raise ValueError("series report needs D >= 4")
    dims = [dim_B(d) for d in range(D + 1)]
    coeffs = series_coefficients(D)
    ratios = {d: Fraction(dims[d + 2], dims[d]) for d in range(4, D - 1, 2)}
    step_ratios = {d: Fraction(dims[d + 2] - dims[d], dims[d] - dims[d - 2]) for d in range(4, D - 1, 2)}
    return {
        "dims": dims,
        "series": coeffs,
        "series_match": dims == coeffs,
        "even_ratios": {d: str(r) for d, r in ratios.items()},
        "even_ratios_exactly_2": all(r == 2 for r in ratios.values()),
        "even_increment_ratios": {d: str(r) for d, r in step_ratios.items()},
        "roots": {d: dims[d] ** (1 / d) for d in range(1, D + 1)},
    }
