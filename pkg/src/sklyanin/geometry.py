"""
Truncated point schemes V_d inside (P^2)^d.

A tuple (p_0, ..., p_{d-1}) lies in V_d when every relation, multilinearized
across consecutive factors, vanishes on it. For S(a,b,c) this is the
condition M(p_i) p_{i+1} = 0 with

    M(p) = [[c x, a z, b y],
            [b z, c y, a x],
            [a y, b x, c z]]

whose determinant is the cubic (a^3+b^3+c^3) xyz - abc (x^3+y^3+z^3).

For S(1,1,1) the scheme is a union of six alternating products. With
omega a cube root of unity, Point(omega) = [1:omega:omega^2] and
Line(omega) is the kernel of M(Point(omega)); a point of Line(omega) that is
not itself a rank-one point is followed only by Point(omega).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .freealg import QuadPresentation
from .linalg import nullspace, rank
from .scalars import QW, Field, PrimeField


class NoExtension(ValueError):
    """M(p) is invertible: nothing follows p."""


# ----------------------------------------------------------------------
# points


class ProjPoint:
    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(coords)
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        self.coords = tuple(c / lead for c in coords)

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def format(self, fld: Field = QW) -> str:
        return "[" + ":".join(fld.format(c) for c in self.coords) + "]"

    def __repr__(self):
        return f"ProjPoint{self.format(_field_of(self.coords[0]))}"


def _field_of(x) -> Field:
    from .scalars import Fp, make_field, FieldSpec, QQ
    if isinstance(x, Fp):
        return make_field(FieldSpec.prime(x.p))
    from .scalars import QZeta
    return QW if isinstance(x, QZeta) else QQ


def projective_points(fld: PrimeField, n: int = 3) -> list[ProjPoint]:
    """All points of P^{n-1}(F_p)."""
    out = []
    elems = fld.elements()
    for lead in range(n):
        for tail in product(elems, repeat=n - lead - 1):
            out.append(ProjPoint((fld.zero,) * lead + (fld.one,) + tail))
    return out


def subspace_points(basis, fld: PrimeField) -> list[ProjPoint]:
    """Projective points of the span of ``basis`` over F_p."""
    k = len(basis)
    if k == 0:
        return []
    out = set()
    for coeffs in projective_points(fld, k):
        v = [sum((c * b[i] for c, b in zip(coeffs, basis)), fld.zero) for i in range(len(basis[0]))]
        out.add(ProjPoint(v))
    return sorted(out, key=lambda p: tuple(int(c) for c in p))


# ----------------------------------------------------------------------
# multilinearization


@dataclass(frozen=True)
class MultilinearForm:
    """A form on (P^2)^d supported on factors i and i+1:
    ``coeffs[(l, m)]`` multiplies coordinate l of factor i and coordinate m
    of factor i+1."""

    degree: int
    factor: int
    coeffs: tuple

    def evaluate(self, pts) -> object:
        p, q = pts[self.factor], pts[self.factor + 1]
        zero = p[0] - p[0]
        return sum((c * p[l] * q[m] for (l, m), c in self.coeffs), zero)


def multilinearize(P: QuadPresentation, d: int) -> list[MultilinearForm]:
    """Each relation term c * (l0 l1) becomes c * l0_{i+1} l1_i; the left
    letter sits on the later factor."""
    if d < 2:
        raise ValueError("multilinearization needs d >= 2")
    forms = []
    for i in range(d - 1):
        for r in P.relations:
            coeffs = tuple(sorted(((w[1], w[0]), c) for w, c in r.terms.items()))
            forms.append(MultilinearForm(d, i, coeffs))
    return forms


def relation_matrix(P: QuadPresentation, p) -> list[list]:
    """Rows indexed by relations: row r applied to q gives relation r at (p, q)."""
    zero = P.field.zero
    M = [[zero] * 3 for _ in P.relations]
    for r, rel in enumerate(P.relations):
        for w, c in rel.terms.items():
            M[r][w[0]] = M[r][w[0]] + c * p[w[1]]
    return M


def right_relation_matrix(P: QuadPresentation, q) -> list[list]:
    """Columns indexed by relations: p^T applied to it gives relation values at (p, q)."""
    zero = P.field.zero
    N = [[zero] * len(P.relations) for _ in range(3)]
    for r, rel in enumerate(P.relations):
        for w, c in rel.terms.items():
            N[w[1]][r] = N[w[1]][r] + c * q[w[0]]
    return N


def m_matrix(a, b, c, p) -> list[list]:
    x, y, z = p
    return [[c * x, a * z, b * y],
            [b * z, c * y, a * x],
            [a * y, b * x, c * z]]


def det3(M) -> object:
    return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))


def e_cubic(a, b, c, p) -> object:
    x, y, z = p
    return (a ** 3 + b ** 3 + c ** 3) * x * y * z - a * b * c * (x ** 3 + y ** 3 + z ** 3)


def on_curve_E(a, b, c, p) -> bool:
    cubic = e_cubic(a, b, c, p)
    det = det3(m_matrix(a, b, c, p))
    assert cubic == det, "determinant of M disagrees with the cubic"
    return not cubic


# ----------------------------------------------------------------------
# lines, points and extension


def cube_roots(fld: Field) -> list:
    w = fld.primitive_cube_root()
    return [fld.one, w, w * w]


def special_point(omega, fld: Field) -> ProjPoint:
    """[1 : omega : omega^2]."""
    return ProjPoint((fld.one, omega, omega * omega))


@dataclass(frozen=True)
class Line:
    """The line x = theta_y * y + theta_z * z, parameterized by [y:z]."""

    theta_y: object
    theta_z: object

    def at(self, y, z) -> ProjPoint:
        return ProjPoint((self.theta_y * y + self.theta_z * z, y, z))

    def representative(self, y, z) -> tuple:
        return (self.theta_y * y + self.theta_z * z, y, z)

    def contains(self, p) -> bool:
        return p[0] == self.theta_y * p[1] + self.theta_z * p[2]

    def intersect(self, other: "Line"):
        """Common point of two distinct lines, None when they coincide."""
        if self == other:
            return None
        # theta_y y + theta_z z = theta'_y y + theta'_z z
        dy = self.theta_y - other.theta_y
        dz = self.theta_z - other.theta_z
        return self.at(-dz, dy) if (dy or dz) else None


@dataclass(frozen=True)
class Unique:
    point: ProjPoint


@dataclass(frozen=True)
class Pencil:
    """All q with normal . q = 0; ``line`` set when the x-coefficient is nonzero."""

    normal: tuple
    line: Line | None


def kernel_line(M, fld: Field) -> Line:
    row = next(r for r in M if any(r))
    if not row[0]:
        raise ValueError("kernel is not a graph over [y:z]")
    return Line(-row[1] / row[0], -row[2] / row[0])


def extend_point(p, a=1, b=1, c=1, fld: Field = QW):
    """Admissible next factors after p: a unique point or a whole line."""
    a, b, c = fld(a), fld(b), fld(c)
    M = m_matrix(a, b, c, p)
    r = rank(M)
    if r == 3:
        raise NoExtension(f"{p} is not on E")
    if r == 2:
        return Unique(ProjPoint(nullspace(M, 3, fld.one)[0]))
    row = next(rw for rw in M if any(rw))
    return Pencil(tuple(row), kernel_line(M, fld) if row[0] else None)


def special_line(omega, fld: Field = QW) -> Line:
    """Line(omega) for S(1,1,1): the kernel of M at [1:omega:omega^2]."""
    one = fld.one
    return kernel_line(m_matrix(one, one, one, special_point(omega, fld)), fld)


def rank_one_points(a, b, c, fld: Field = QW) -> list[ProjPoint]:
    """Rank-one points of M among the coordinate points and [1:w^i:w^j]."""
    a, b, c = fld(a), fld(b), fld(c)
    zero, one = fld.zero, fld.one
    roots = cube_roots(fld)
    cands = [ProjPoint(v) for v in ((one, zero, zero), (zero, one, zero), (zero, zero, one))]
    cands += [ProjPoint((one, u, v)) for u in roots for v in roots]
    return [p for p in cands if rank(m_matrix(a, b, c, p)) == 1]


# ----------------------------------------------------------------------
# components of V_d for S(1,1,1)


@dataclass(frozen=True)
class Slot:
    kind: str  # "L" or "P"
    omega_index: int  # omega = zeta^omega_index


@dataclass(frozen=True)
class ComponentSpec:
    """Alternating Line(omega)/Point(omega) pattern. Odd indices start with
    a line, even indices with a point; omega = zeta^((index-1)//2)."""

    index: int
    d: int

    @property
    def omega_index(self) -> int:
        return (self.index - 1) // 2

    @property
    def starts_with_line(self) -> bool:
        return self.index % 2 == 1

    def slots(self) -> list[Slot]:
        first, second = ("L", "P") if self.starts_with_line else ("P", "L")
        return [Slot(first if j % 2 == 0 else second, self.omega_index) for j in range(self.d)]

    def line_slots(self) -> list[int]:
        return [j for j, s in enumerate(self.slots()) if s.kind == "L"]

    def label(self) -> str:
        names = ["1", "w", "w^2"]
        om = names[self.omega_index]
        return " x ".join(f"Line({om})" if s.kind == "L" else f"Point({om})" for s in self.slots())


def component_specs(d: int, representative=(1, 1, 1)) -> list[ComponentSpec]:
    if tuple(representative) != (1, 1, 1):
        raise NotImplementedError("component tables are only tabulated for S(1,1,1)")
    if d < 1:
        raise ValueError("d must be positive")
    return [ComponentSpec(i, d) for i in range(1, 7)]


def slot_geometry(slot: Slot, fld: Field):
    omega = cube_roots(fld)[slot.omega_index]
    if slot.kind == "P":
        return special_point(omega, fld)
    return special_line(omega, fld)


def component_points(spec: ComponentSpec, fld: PrimeField) -> set[tuple]:
    line_pts = projective_points(fld, 2)
    choices = []
    for slot in spec.slots():
        g = slot_geometry(slot, fld)
        choices.append([g] if isinstance(g, ProjPoint) else [g.at(t[0], t[1]) for t in line_pts])
    return set(product(*choices))


def component_contains(spec: ComponentSpec, pts, fld: Field = QW) -> bool:
    for slot, p in zip(spec.slots(), pts):
        g = slot_geometry(slot, fld)
        if isinstance(g, ProjPoint):
            if ProjPoint(p) != g:
                return False
        elif not g.contains(ProjPoint(p)):
            return False
    return True


def _slot_intersection(s: Slot, t: Slot, fld: Field):
    """'all' when both slots agree, a point, or None for empty."""
    g, h = slot_geometry(s, fld), slot_geometry(t, fld)
    if isinstance(g, ProjPoint) and isinstance(h, ProjPoint):
        return "all" if g == h else None
    if isinstance(g, Line) and isinstance(h, Line):
        return "all" if g == h else g.intersect(h)
    pt, ln = (g, h) if isinstance(g, ProjPoint) else (h, g)
    return pt if ln.contains(pt) else None


def intersect_components(A: ComponentSpec, B: ComponentSpec, fld: Field = QW):
    """None if empty, a tuple of points if a single point, 'positive' otherwise."""
    pts = []
    for s, t in zip(A.slots(), B.slots()):
        x = _slot_intersection(s, t, fld)
        if x is None:
            return None
        pts.append(x)
    if any(isinstance(x, str) for x in pts):
        if all(isinstance(x, str) for x in pts):
            return "positive"
        # slot-wise 'all' on a Point slot is still a single point
        fixed = []
        for x, s in zip(pts, A.slots()):
            if isinstance(x, str):
                g = slot_geometry(s, fld)
                if isinstance(g, Line):
                    return "positive"
                fixed.append(g)
            else:
                fixed.append(x)
        pts = fixed
    return tuple(pts)


def singular_locus(d: int, fld: Field = QW) -> list[tuple]:
    """Points lying on two components: (point tuple, (i, j))."""
    specs = component_specs(d)
    out = []
    for A, B in combinations(specs, 2):
        x = intersect_components(A, B, fld)
        if x == "positive":
            raise AssertionError(f"components {A.index} and {B.index} share a positive-dimensional piece")
        if x is not None:
            out.append((x, (A.index, B.index)))
    return out


def alternating_tuple(first, second, d: int, fld: Field = QW) -> tuple:
    """([1:first:first^2], [1:second:second^2], ...) of length d."""
    p, q = special_point(first, fld), special_point(second, fld)
    return tuple(p if j % 2 == 0 else q for j in range(d))


# ----------------------------------------------------------------------
# brute-force enumeration over F_p


def in_Vd(P: QuadPresentation, pts) -> bool:
    return all(not f.evaluate(pts) for f in multilinearize(P, len(pts)))


def next_points(P: QuadPresentation, p, fld: PrimeField) -> list[ProjPoint]:
    M = relation_matrix(P, p)
    return subspace_points(nullspace(M, 3, fld.one), fld)


def enumerate_V2_exhaustive(P: QuadPresentation, fld: PrimeField) -> set[tuple]:
    pts = projective_points(fld)
    return {(p, q) for p in pts for q in pts if in_Vd(P, (p, q))}


def enumerate_Vd(P: QuadPresentation, d: int, fld: PrimeField, bound: int = 5) -> set[tuple]:
    """All F_p-points of V_d by chain extension through kernels of M."""
    if d < 1 or d > bound:
        raise ValueError(f"d must lie in 1..{bound}")
    if P.field != fld:
        raise ValueError("presentation must be defined over the enumeration field")
    layer = [(p,) for p in projective_points(fld)]
    cache: dict = {}
    for _ in range(d - 1):
        nxt = []
        for t in layer:
            last = t[-1]
            if last not in cache:
                cache[last] = next_points(P, last, fld)
            nxt.extend(t + (q,) for q in cache[last])
        layer = nxt
    return set(layer)


def support_profile(V) -> dict[str, int]:
    """Count points of V by coordinate support per slot, e.g. "xy|z".

    Used to describe V_d when no component table is available.
    """
    counts: dict[str, int] = {}
    for t in V:
        key = "|".join("".join("xyz"[k] for k in range(3) if p[k]) for p in t)
        counts[key] = counts.get(key, 0) + 1
    return dict(sorted(counts.items()))
