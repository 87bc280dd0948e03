"""Koszul duals, Zhang twists, the Ore-extension presentation of S(1,b,c),
and certification of normal elements."""

from __future__ import annotations

from dataclasses import dataclass

from .freealg import NcPoly, QuadPresentation, nc_multiply
from .linalg import nullspace, rref, solve
from .rewrite import RewriteSystem, normal_form
from .scalars import QW, Field


class InvalidAutomorphism(ValueError):
    pass


@dataclass(frozen=True)
class GradedAutomorphism:
    """Degree-0 automorphism given by the images of the generators:
    ``images[j][k]`` is the coefficient of x_k in sigma(x_j)."""

    images: tuple[tuple, ...]
    name: str = ""

    def __post_init__(self):
        if len(rref([list(r) for r in self.images])[1]) != len(self.images):
            raise InvalidAutomorphism(f"{self.name or 'matrix'} is singular")

    @classmethod
    def from_matrix(cls, entries, fld: Field = QW, name: str = "matrix"):
        """Nine scalars, row j giving sigma(x_j)."""
        vals = [fld(e) for e in entries]
        if len(vals) != 9:
            raise InvalidAutomorphism("need nine scalars")
        return cls(tuple(tuple(vals[3 * j: 3 * j + 3]) for j in range(3)), name)

    def inverse(self) -> "GradedAutomorphism":
        n = len(self.images)
        one = next(c for r in self.images for c in r if c) / next(c for r in self.images for c in r if c)
        zero = one - one
        aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.images)]
        red, _ = rref(aug)
        return GradedAutomorphism(tuple(tuple(r[n:]) for r in red), f"{self.name}^-1")

    def compose(self, other: "GradedAutomorphism") -> "GradedAutomorphism":
        """self after other."""
        n = len(self.images)
        zero = self.images[0][0] - self.images[0][0]
        rows = []
        for j in range(n):
            row = [zero] * n
            for k, c in enumerate(other.images[j]):
                if c:
                    for l, e in enumerate(self.images[k]):
                        row[l] = row[l] + c * e
            rows.append(tuple(row))
        return GradedAutomorphism(tuple(rows), f"{self.name}{other.name}")

    def __pow__(self, n: int):
        base = self if n >= 0 else self.inverse()
        one = next(c for r in self.images for c in r if c)
        one = one / one
        out = GradedAutomorphism(tuple(tuple(one if i == j else one - one for j in range(3)) for i in range(3)))
        for _ in range(abs(n)):
            out = base.compose(out)
        name = self.name if n == 1 else f"{self.name}^{n}"
        return GradedAutomorphism(out.images, name)

    def apply_linear(self, j: int) -> NcPoly:
        return NcPoly.linear(self.images[j])

    def apply(self, p: NcPoly) -> NcPoly:
        out = NcPoly()
        for w, c in p.terms.items():
            term = NcPoly.monomial(b"", c)
            for g in w:
                term = nc_multiply(term, self.apply_linear(g))
            out = out + term
        return out


def sigma(fld: Field = QW) -> GradedAutomorphism:
    w = fld.primitive_cube_root()
    z, o = fld.zero, fld.one
    return GradedAutomorphism(((w, z, z), (z, w * w, z), (z, z, o)), "sigma")


def tau(fld: Field = QW) -> GradedAutomorphism:
    z, o = fld.zero, fld.one
    return GradedAutomorphism(((z, o, z), (z, z, o), (o, z, z)), "tau")


def identity(fld: Field = QW) -> GradedAutomorphism:
    z, o = fld.zero, fld.one
    return GradedAutomorphism(((o, z, z), (z, o, z), (z, z, o)), "id")


def _from_rows(rows, P: QuadPresentation, label: str) -> QuadPresentation:
    basis = P.degree2_words()
    rels = [NcPoly({w: c for w, c in zip(basis, r) if c}) for r in rref(rows)[0]]
    return QuadPresentation(P.field, rels, P.n_generators, names=P.names, label=label)


def koszul_dual(P: QuadPresentation) -> QuadPresentation:
    """Relation space R^perp under <x_i x_j, x_k* x_l*> = delta_ik delta_jl."""
    rows = P.coefficient_rows()
    perp = nullspace(rows, len(P.degree2_words()), P.field.one)
    return _from_rows(perp, P, f"{P.label}^!")


def pairing_matrix(P: QuadPresentation, Q: QuadPresentation):
    """All pairings <r, s> for r in P, s in Q; zero iff Q's span is in R^perp."""
    return [[sum((a * b for a, b in zip(r, s)), P.field.zero) for s in Q.coefficient_rows()]
            for r in P.coefficient_rows()]


def zhang_twist(P: QuadPresentation, auto: GradedAutomorphism) -> QuadPresentation:
    """Relation space (id x sigma^-1)(R).

    In the twist, x_i * x_j = x_i sigma(x_j), so sum c_ij x_i * sigma^-1(x_j)
    equals the old relation sum c_ij x_i x_j and vanishes.
    """
    inv = auto.inverse()
    rels = []
    for r in P.relations:
        out = NcPoly()
        for w, c in r.terms.items():
            left = NcPoly.monomial(w[:1], c)
            out = out + nc_multiply(left, inv.apply_linear(w[1]))
        rels.append(out)
    rows = [[r.coefficient(w) or P.field.zero for w in P.degree2_words()] for r in rels]
    return _from_rows(rows, P, f"{P.label}^{auto.name}")


# ----------------------------------------------------------------------
# Ore extension k{x,y}[z; alpha, delta]


@dataclass(frozen=True)
class OreData:
    """alpha(x) = -b x, alpha(y) = -b^2 y; delta(x) = -c y^2, delta(y) = -b^2 c x^2."""

    b: object
    c: object

    def alpha(self, g: int) -> NcPoly:
        return NcPoly.gen(g, -self.b if g == 0 else -self.b * self.b)

    def alpha_poly(self, p: NcPoly) -> NcPoly:
        out = NcPoly()
        for w, c in p.terms.items():
            term = NcPoly.monomial(b"", c)
            for g in w:
                term = term * self.alpha(g)
            out = out + term
        return out

    def delta(self, g: int) -> NcPoly:
        if g == 0:
            return NcPoly.monomial(b"\x01\x01", -self.c)
        return NcPoly.monomial(b"\x00\x00", -self.b * self.b * self.c)

    def delta_poly(self, p: NcPoly) -> NcPoly:
        """Extension by delta(rs) = alpha(r) delta(s) + delta(r) s."""
        out = NcPoly()
        for w, c in p.terms.items():
            out = out + self._delta_word(w).scale(c)
        return out

    def _delta_word(self, w: bytes) -> NcPoly:
        if not w:
            return NcPoly()
        if len(w) == 1:
            return self.delta(w[0])
        r, s = NcPoly.monomial(w[:1]), NcPoly.monomial(w[1:])
        return self.alpha_poly(r) * self._delta_word(w[1:]) + self.delta(w[0]) * s

    def leibniz_holds(self, r: NcPoly, s: NcPoly) -> bool:
        lhs = self.delta_poly(r * s)
        rhs = self.alpha_poly(r) * self.delta_poly(s) + self.delta_poly(r) * s
        return lhs == rhs

    def ore_relations(self) -> list[NcPoly]:
        """z g - alpha(g) z - delta(g) for g = x, y."""
        z = NcPoly.gen(2)
        return [z * NcPoly.gen(g) - self.alpha(g) * z - self.delta(g) for g in (0, 1)]

    def omega(self) -> NcPoly:
        return NcPoly({b"\x00\x01": 1, b"\x01\x00": self.b, b"\x02\x02": self.c})


def ore_extension(b, c, fld: Field = QW) -> QuadPresentation:
    """The two-relation presentation of k{x,y}[z; alpha, delta] itself."""
    data = OreData(fld(b), fld(c))
    return QuadPresentation(fld, data.ore_relations(), label="ore")


def ore_presentation(b, c, fld: Field = QW) -> QuadPresentation:
    b, c = fld(b), fld(c)
    if b ** 3 != 1 or c ** 3 != 1:
        raise ValueError("ore presentation needs b^3 = c^3 = 1")
    data = OreData(b, c)
    return QuadPresentation(fld, data.ore_relations() + [data.omega()], params=(fld.one, b, c), label="ore/Omega")


# ----------------------------------------------------------------------
# normal elements


def certify_normal(rs: RewriteSystem, omega: NcPoly, generators=(0, 1, 2)):
    """For each generator g, a linear form g' with g.omega = omega.g' modulo
    the ideal, or None if some g has no such form."""
    deg = omega.homogeneous_degree()
    if deg is None:
        raise ValueError("omega must be homogeneous")
    n = rs.n_generators
    cert = []
    for g in generators:
        target = normal_form(rs, NcPoly.gen(g, rs.one) * omega)
        cols = [normal_form(rs, omega * NcPoly.gen(k, rs.one)) for k in range(n)]
        words = sorted({w for p in cols + [target] for w in p.terms})
        rows = [[cols[k].terms.get(w, rs.zero) for k in range(n)] for w in words]
        rhs = [target.terms.get(w, rs.zero) for w in words]
        if not words:
            cert.append(tuple(rs.zero for _ in range(n)))
            continue
        sol = solve(rows, rhs, rs.one)
        if sol is None:
            return None
        cert.append(tuple(sol))
    return cert


def diagonal_scalars(cert):
    """(lambda_0, lambda_1, ...) when certificate maps each x_i to lambda_i x_i."""
    if cert is None:
        return None
    out = []
    for i, row in enumerate(cert):
        if any(c for j, c in enumerate(row) if j != i):
            return None
        out.append(row[i])
    return tuple(out)
