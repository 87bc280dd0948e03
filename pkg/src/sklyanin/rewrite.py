"""
Degree-truncated completion of quadratic presentations into confluent
rewriting systems, normal forms, and Hilbert functions by counting the words
that avoid every leading word.

    >>> from sklyanin.freealg import sklyanin_presentation
    >>> rs = complete_to_degree(sklyanin_presentation(1, 1, 1), MonomialOrder(), 5)
    >>> hilbert_function(rs, 5)
    [1, 3, 6, 12, 24, 48]
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .freealg import LETTERS, NcPoly, QuadPresentation, all_words
from .linalg import rref


class NeedsDeeperCompletion(ValueError):
    pass


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-lexicographic order; ``precedence`` lists generators from
    smallest to largest, so the default means x < y < z."""

    precedence: tuple[int, ...] = (0, 1, 2)

    @classmethod
    def parse(cls, text: str, names: str = LETTERS) -> "MonomialOrder":
        parts = [p for p in text.replace("<", ",").split(",") if p.strip()]
        idx = tuple(names.index(p.strip()) for p in parts)
        if sorted(idx) != list(range(len(names))):
            raise ValueError(f"order {text!r} is not a permutation of {','.join(names)}")
        return cls(idx)

    def rank_table(self) -> bytes:
        table = bytearray(range(256))
        for r, g in enumerate(self.precedence):
            table[g] = r
        return bytes(table)

    def key(self, w: bytes):
        return (len(w), w.translate(self.rank_table()))

    def label(self, names: str = LETTERS) -> str:
        return "<".join(names[g] for g in self.precedence)


@dataclass
class RewriteSystem:
    rules: dict[bytes, NcPoly]
    order: MonomialOrder
    degree: int
    zero: object
    one: object
    n_generators: int = 3
    _nf_cache: dict = field(default_factory=dict, repr=False)
    _automaton: object = field(default=None, repr=False)

    def leads(self) -> list[bytes]:
        key = self.order.key
        return sorted(self.rules, key=key)

    def find_lead(self, w: bytes):
        """First (position, lead) with w[pos:pos+len(lead)] == lead."""
        for pos in range(len(w)):
            for n in self._lead_lengths:
                lead = w[pos:pos + n]
                if len(lead) == n and lead in self.rules:
                    return pos, lead
        return None

    @property
    def _lead_lengths(self):
        lengths = self.__dict__.get("_lengths_cache")
        if lengths is None:
            lengths = sorted({len(l) for l in self.rules})
            self.__dict__["_lengths_cache"] = lengths
        return lengths

    def word_normal_form(self, w: bytes) -> dict:
        cached = self._nf_cache.get(w)
        if cached is not None:
            return cached
        if len(w) > self.degree:
            raise NeedsDeeperCompletion(f"word of degree {len(w)} exceeds completion degree {self.degree}")
        hit = self.find_lead(w)
        if hit is None:
            result = {w: self.one}
        else:
            pos, lead = hit
            pre, post = w[:pos], w[pos + len(lead):]
            result = {}
            for t, c in self.rules[lead].terms.items():
                for u, e in self.word_normal_form(pre + t + post).items():
                    v = result.get(u, self.zero) + c * e
                    if v:
                        result[u] = v
                    else:
                        result.pop(u, None)
        self._nf_cache[w] = result
        return result

    def is_irreducible(self, w: bytes) -> bool:
        return self.find_lead(w) is None


def normal_form(rs: RewriteSystem, p: NcPoly) -> NcPoly:
    out: dict = {}
    for w, c in p.terms.items():
        for u, e in rs.word_normal_form(w).items():
            v = out.get(u, rs.zero) + c * e
            if v:
                out[u] = v
            else:
                out.pop(u, None)
    return NcPoly._raw(out)


def _overlaps(l1: bytes, l2: bytes):
    """Yield k such that the last k letters of l1 are the first k of l2."""
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k]:
            yield k


def _rule_poly(lead: bytes, tail: NcPoly, one) -> NcPoly:
    """lead - tail (an element of the ideal)."""
    return NcPoly.monomial(lead, one) - tail


def s_polynomials(rs: RewriteSystem, degree: int):
    """Overlap ambiguities of total length ``degree``: for l1 = u.s, l2 = s.v
    the two reductions of u.s.v differ by tail1.v - u.tail2."""
    out = []
    leads = rs.leads()
    for l1 in leads:
        for l2 in leads:
            for k in _overlaps(l1, l2):
                if len(l1) + len(l2) - k != degree:
                    continue
                u, v = l1[: len(l1) - k], l2[k:]
                left = rs.rules[l1] * NcPoly.monomial(v, rs.one)
                right = NcPoly.monomial(u, rs.one) * rs.rules[l2]
                out.append(((l1, l2, k), left - right))
    return out


def _rows_to_rules(polys, order: MonomialOrder, one, zero):
    """Interreduce homogeneous polynomials of one degree into rules."""
    words = sorted({w for p in polys for w in p.terms}, key=order.key, reverse=True)
    if not words:
        return {}
    rows = [[p.terms.get(w, zero) for w in words] for p in polys]
    red, pivots = rref(rows)
    rules = {}
    for row, pc in zip(red, pivots):
        lead = words[pc]
        tail = NcPoly({words[j]: -row[j] for j in range(pc + 1, len(words)) if row[j]})
        rules[lead] = tail
    return rules


def complete_to_degree(P: QuadPresentation, order: MonomialOrder | None = None, D: int = 8) -> RewriteSystem:
    if D < 2:
        raise ValueError("completion degree must be at least 2")
    order = order or MonomialOrder()
    fld = P.field
    rules = _rows_to_rules(P.relations, order, fld.one, fld.zero)
    rs = RewriteSystem(dict(rules), order, 2, fld.zero, fld.one, P.n_generators)
    for n in range(3, D + 1):
        rs.degree = n
        rs._nf_cache.clear()
        reduced = [normal_form(rs, s) for _, s in s_polynomials(rs, n)]
        new = _rows_to_rules([s for s in reduced if s], order, fld.one, fld.zero)
        if new:
            rs.rules.update(new)
            rs.__dict__.pop("_lengths_cache", None)
            rs._nf_cache.clear()
            rs._automaton = None
            # every ambiguity of this degree must now resolve
            assert all(not normal_form(rs, s) for _, s in s_polynomials(rs, n))
    return rs


def check_confluence(rs: RewriteSystem, D: int | None = None) -> list:
    """Ambiguities of degree <= D whose two resolutions disagree."""
    D = rs.degree if D is None else D
    bad = []
    for n in range(3, D + 1):
        for amb, s in s_polynomials(rs, n):
            if normal_form(rs, s):
                bad.append(amb)
    return bad


# ----------------------------------------------------------------------
# counting irreducible words


class ForbiddenFactorAutomaton:
    """Aho-Corasick automaton over the leading words; states reached without
    passing through a match are exactly the prefixes of irreducible words."""

    def __init__(self, patterns, n_letters: int):
        self.n = n_letters
        goto = [dict()]
        terminal = [False]
        for p in patterns:
            s = 0
            for ch in p:
                if ch not in goto[s]:
                    goto.append({})
                    terminal.append(False)
                    goto[s][ch] = len(goto) - 1
                s = goto[s][ch]
            terminal[s] = True
        fail = [0] * len(goto)
        delta = [[0] * n_letters for _ in goto]
        queue = deque()
        for ch in range(n_letters):
            t = goto[0].get(ch)
            if t is None:
                delta[0][ch] = 0
            else:
                delta[0][ch] = t
                queue.append(t)
        while queue:
            s = queue.popleft()
            terminal[s] = terminal[s] or terminal[fail[s]]
            for ch in range(n_letters):
                t = goto[s].get(ch)
                if t is None:
                    delta[s][ch] = delta[fail[s]][ch]
                else:
                    fail[t] = delta[fail[s]][ch]
                    delta[s][ch] = t
                    queue.append(t)
        self.delta = delta
        self.terminal = terminal

    def count(self, D: int) -> list[int]:
        live = [i for i, t in enumerate(self.terminal) if not t]
        index = {s: i for i, s in enumerate(live)}
        T = np.zeros((len(live), len(live)), dtype=object)
        for s in live:
            for ch in range(self.n):
                t = self.delta[s][ch]
                if not self.terminal[t]:
                    T[index[t], index[s]] += 1
        v = np.zeros(len(live), dtype=object)
        v[index[0]] = 1
        out = [1]
        for _ in range(D):
            v = T.dot(v)
            out.append(int(sum(v)))
        return out


def hilbert_function(rs: RewriteSystem, D: int) -> list[int]:
    if D > rs.degree:
        raise NeedsDeeperCompletion(f"hilbert function to degree {D} needs completion to {D}")
    if rs._automaton is None:
        rs._automaton = ForbiddenFactorAutomaton(rs.rules, rs.n_generators)
    return rs._automaton.count(D)


def normal_words(rs: RewriteSystem, d: int) -> list[bytes]:
    """Irreducible words of degree d, increasing in the monomial order."""
    if d > rs.degree:
        raise NeedsDeeperCompletion(f"degree {d} exceeds completion degree {rs.degree}")
    layer = [b""]
    for _ in range(d):
        layer = [w + bytes([g]) for w in layer for g in range(rs.n_generators)
                 if rs.is_irreducible(w + bytes([g]))]
    return sorted(layer, key=rs.order.key)


def words_of_degree(n: int, d: int):
    return all_words(n, d)
