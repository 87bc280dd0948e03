"""
Words, noncommutative polynomials and quadratic presentations on three
generators x, y, z.

A word is a ``bytes`` object of generator indices (0 = x, 1 = y, 2 = z);
``b""`` is the identity. An ``NcPoly`` maps words to nonzero scalars.

    >>> p = NcPoly.gen(0) + NcPoly.gen(1)
    >>> print(p * p)
    x.x + x.y + y.x + y.y
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product

from .linalg import rref
from .scalars import QW, Field

LETTERS = "xyz"


class InvalidPresentation(ValueError):
    pass


class PresentationSyntaxError(InvalidPresentation):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


def word(text: str, names: str = LETTERS) -> bytes:
    """``word("xyz") == b"\\x00\\x01\\x02"``; dots are ignored."""
    return bytes(names.index(ch) for ch in text if ch != ".")


def word_str(w: bytes, names: str = LETTERS, sep: str = "") -> str:
    if not w:
        return "1"
    return sep.join(names[i] for i in w)


def all_words(n_gens: int, d: int) -> list[bytes]:
    """All words of length d in lexicographic index order."""
    return [bytes(t) for t in product(range(n_gens), repeat=d)]


class NcPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[bytes, object] = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[bytes(w)] = c

    @classmethod
    def gen(cls, i: int, coeff=1):
        return cls({bytes([i]): coeff})

    @classmethod
    def monomial(cls, w: bytes, coeff=1):
        return cls({w: coeff})

    @classmethod
    def linear(cls, coeffs):
        """Linear form sum_i coeffs[i] * x_i."""
        return cls({bytes([i]): c for i, c in enumerate(coeffs)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NcPoly._raw(out)

    def __neg__(self):
        return NcPoly._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        if not s:
            return NcPoly()
        return NcPoly._raw({w: c * s for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return nc_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        return p

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def homogeneous_degree(self) -> int | None:
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def coefficient(self, w: bytes):
        return self.terms.get(w, 0)

    def map_coeffs(self, fn):
        return NcPoly({w: fn(c) for w, c in self.terms.items()})

    def format(self, fld: Field = QW, names: str = LETTERS) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = fld.format(self.terms[w])
            if any(ch in c[1:] for ch in "+-*"):
                c = f"({c})"
            parts.append(f"{c}*{word_str(w, names, '.')}")
        return " + ".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for w in sorted(self.terms):
            c = self.terms[w]
            ws = word_str(w, sep=".")
            out.append(ws if c == 1 else f"{c!s}*{ws}")
        return " + ".join(out)

    def __repr__(self):
        return f"NcPoly({self})"


def nc_multiply(p: NcPoly, q: NcPoly) -> NcPoly:
    out: dict[bytes, object] = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            w = u + v
            c = out.get(w, 0) + a * b
            if c:
                out[w] = c
            else:
                out.pop(w, None)
    return NcPoly._raw(out)


# ----------------------------------------------------------------------
# quadratic presentations


@dataclass
class QuadPresentation:
    field: Field
    relations: list[NcPoly]
    n_generators: int = 3
    params: tuple | None = None
    names: str = LETTERS
    label: str = ""
    _rows: list = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        basis = self.degree2_words()
        self.relations = [r.map_coeffs(self.field) for r in self.relations]
        for r in self.relations:
            if not r:
                raise InvalidPresentation("zero relation")
            if r.homogeneous_degree() != 2:
                raise InvalidPresentation(f"relation {r} is not homogeneous quadratic")
        rows = [relation_row(r, basis, self.field) for r in self.relations]
        if len(rref(rows)[1]) != len(rows):
            raise InvalidPresentation("relations are linearly dependent")
        self._rows = rows

    def degree2_words(self) -> list[bytes]:
        return all_words(self.n_generators, 2)

    def coefficient_rows(self) -> list[list]:
        return [list(r) for r in self._rows]

    def format(self) -> str:
        lines = ["generators: " + " ".join(self.names[: self.n_generators])]
        lines += [r.format(self.field, self.names) for r in self.relations]
        return "\n".join(lines) + "\n"


def relation_row(r: NcPoly, basis: list[bytes], fld: Field) -> list:
    return [fld(r.coefficient(w)) if r.coefficient(w) else fld.zero for w in basis]


def normalize_projective(a, b, c, fld: Field):
    vals = [fld(a), fld(b), fld(c)]
    lead = next((v for v in vals if v), None)
    if lead is None:
        raise InvalidPresentation("(a, b, c) = (0, 0, 0)")
    return tuple(v / lead for v in vals)


def sklyanin_relations(a, b, c) -> list[NcPoly]:
    """f, g, h: each cyclic shift of a*yz + b*zy + c*xx, zero terms dropped."""
    rels = []
    for i in range(3):
        x, y, z = i, (i + 1) % 3, (i + 2) % 3
        rels.append(NcPoly({bytes([y, z]): a, bytes([z, y]): b, bytes([x, x]): c}))
    return rels


def sklyanin_presentation(a, b, c, fld: Field = QW) -> QuadPresentation:
    a, b, c = normalize_projective(a, b, c, fld)
    return QuadPresentation(
        fld,
        sklyanin_relations(a, b, c),
        params=(a, b, c),
        label=f"S({fld.format(a)},{fld.format(b)},{fld.format(c)})",
    )


def in_degenerate_locus(a, b, c) -> bool:
    vals = [a, b, c]
    if all(not v for v in vals):
        raise InvalidPresentation("(a, b, c) = (0, 0, 0)")
    if sum(1 for v in vals if v) == 1:
        return True
    cubes = [v * v * v for v in vals]
    return bool(cubes[0]) and cubes[0] == cubes[1] == cubes[2]


def relation_span_equal(P: QuadPresentation, Q: QuadPresentation) -> bool:
    if P.n_generators != Q.n_generators:
        raise ValueError("different numbers of generators")
    rp, _ = rref(P.coefficient_rows())
    rq, _ = rref(Q.coefficient_rows())
    return rp == rq


# ----------------------------------------------------------------------
# text format

_TERM_RE = re.compile(r"\s*([+-]?)\s*(?:(\([^()]*\)|[^*\s()]+)\s*\*\s*)?([A-Za-z](?:\s*\.\s*[A-Za-z])*)\s*")


def parse_polynomial(text: str, fld: Field, names: str = LETTERS, line: int = 1) -> NcPoly:
    """Parse ``1*y.z + (1+2*w)*z.y - x.x``."""
    poly = NcPoly()
    pos = 0
    text = text.rstrip()
    if not text.strip():
        raise PresentationSyntaxError("empty relation", line, 1)
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise PresentationSyntaxError(f"unexpected {text[pos:pos + 10]!r}", line, pos + 1)
        if pos > 0 and not m.group(1):
            raise PresentationSyntaxError("missing '+' or '-' between terms", line, pos + 1)
        sign, coeff, letters = m.groups()
        try:
            c = fld.parse(coeff) if coeff else fld.one
        except ValueError as exc:
            raise PresentationSyntaxError(str(exc), line, m.start(2) + 1) from None
        if sign == "-":
            c = -c
        w = []
        for ch in letters.replace(".", "").replace(" ", ""):
            if ch not in names:
                raise PresentationSyntaxError(f"unknown generator {ch!r}", line, m.start(3) + 1)
            w.append(names.index(ch))
        poly = poly + NcPoly.monomial(bytes(w), c)
        pos = m.end()
    return poly


def parse_presentation(text: str, fld: Field = QW) -> QuadPresentation:
    lines = text.splitlines()
    body = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip() and not ln.lstrip().startswith("#")]
    if not body:
        raise PresentationSyntaxError("empty presentation", 1, 1)
    lineno, header = body[0]
    m = re.fullmatch(r"\s*generators\s*:\s*(.+?)\s*", header)
    if not m:
        raise PresentationSyntaxError("expected 'generators: x y z'", lineno, 1)
    names = "".join(m.group(1).split())
    if len(names) != 3 or len(set(names)) != 3:
        raise PresentationSyntaxError("exactly three single-letter generators required", lineno, 1)
    rels = []
    for lineno, ln in body[1:]:
        p = parse_polynomial(ln, fld, names, lineno)
        if p.homogeneous_degree() != 2:
            raise InvalidPresentation(f"line {lineno}: relation is not homogeneous quadratic")
        rels.append(p)
    if not rels:
        raise InvalidPresentation("no relations")
    return QuadPresentation(fld, rels, names=names)
