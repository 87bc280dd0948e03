"""
Exact coefficient fields: the rationals, the cyclotomic field Q(zeta) with
zeta^2 + zeta + 1 = 0, and prime fields F_p with p = 1 (mod 3).

Elements are plain Python values with arithmetic operators:

* rationals      -> ``fractions.Fraction``
* cyclotomic3    -> ``QZeta`` (stored as a + b*zeta on the basis {1, zeta})
* prime(p)       -> ``Fp``

A ``Field`` handle coerces ints, Fractions and text into its elements and
knows its primitive cube root of unity.

    >>> K = make_field(FieldSpec.cyclotomic3())
    >>> w = K.primitive_cube_root()
    >>> w * w * w == K.one
    True
    >>> K.format(1 + w)
    '1+w'
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class FieldError(ValueError):
    """Invalid field specification (e.g. no cube root of unity in F_p)."""


class UnsupportedField(ValueError):
    """Operation needs a primitive cube root of unity but the field has none."""


class BadPrime(ValueError):
    """A denominator is divisible by the prime we are specializing to."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ----------------------------------------------------------------------
# Q(zeta)
# ----------------------------------------------------------------------

_Rat = (int, Fraction)


class QZeta:
    """Element a + b*zeta of Q(zeta), zeta a primitive cube root of unity."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = a if type(a) is Fraction else Fraction(a)
        self.b = b if type(b) is Fraction else Fraction(b)

    @staticmethod
    def _lift(other):
        if isinstance(other, QZeta):
            return other
        if isinstance(other, _Rat):
            return QZeta(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QZeta(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QZeta(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QZeta(o.a - self.a, o.b - self.b)

    def __neg__(self):
        return QZeta(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, _Rat):
            return QZeta(self.a * other, self.b * other)
        if not isinstance(other, QZeta):
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        # zeta^2 = -1 - zeta
        return QZeta(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        a, b = self.a, self.b
        return a * a - a * b + b * b

    def conjugate(self) -> "QZeta":
        """Image under zeta -> zeta^2 (complex conjugation)."""
        return QZeta(self.a - self.b, -self.b)

    def inverse(self) -> "QZeta":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("QZeta division by zero")
        c = self.conjugate()
        return QZeta(c.a / n, c.b / n)

    def __truediv__(self, other):
        if isinstance(other, _Rat):
            if not other:
                raise ZeroDivisionError("QZeta division by zero")
            return QZeta(self.a / other, self.b / other)
        if not isinstance(other, QZeta):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = QZeta(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QZeta):
            return self.a == other.a and self.b == other.b
        if isinstance(other, _Rat):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def is_rational(self) -> bool:
        return not self.b

    def __repr__(self):
        return f"QZeta({format_qzeta(self)})"


def _fmt_rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_qzeta(x: QZeta) -> str:
    if not x.b:
        return _fmt_rat(x.a)
    if x.b == 1:
        zeta_part = "w"
    elif x.b == -1:
        zeta_part = "-w"
    else:
        zeta_part = f"{_fmt_rat(x.b)}*w"
    if not x.a:
        return zeta_part
    sep = "" if zeta_part.startswith("-") else "+"
    return f"{_fmt_rat(x.a)}{sep}{zeta_part}"


# ----------------------------------------------------------------------
# F_p
# ----------------------------------------------------------------------


class Fp:
    """Residue class modulo a prime p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.v, self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "Fp":
        if not self.v:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Fp(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o, self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.v, n, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.v == other.v and self.p == other.p
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"


Scalar = Union[Fraction, QZeta, Fp]


# ----------------------------------------------------------------------
# fields
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "rationals" | "cyclotomic3" | "prime"
    p: int | None = None

    @classmethod
    def rationals(cls):
        return cls("rationals")

    @classmethod
    def cyclotomic3(cls):
        return cls("cyclotomic3")

    @classmethod
    def prime(cls, p: int):
        return cls("prime", p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse the CLI field syntax ``q``, ``qzeta`` or ``fp:<p>``."""
        t = text.strip().lower()
        if t in ("q", "rationals", "qq"):
            return cls.rationals()
        if t in ("qzeta", "qw", "cyclotomic3", "q(zeta)"):
            return cls.cyclotomic3()
        m = re.fullmatch(r"(?:fp|f|gf|prime):?(\d+)", t)
        if m:
            return cls.prime(int(m.group(1)))
        raise FieldError(f"unknown field {text!r} (expected q, qzeta or fp:<p>)")

    def label(self) -> str:
        if self.kind == "prime":
            return f"fp:{self.p}"
        return {"rationals": "q", "cyclotomic3": "qzeta"}[self.kind]


_SCALAR_RE = re.compile(
    r"""^\s*
    (?:(?P<a>[+-]?\d+(?:/\d+)?)(?![\d/]*\s*\*?\s*w))?   # rational part
    \s*
    (?:(?P<sign>[+-])?\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?w)?   # zeta part
    \s*$""",
    re.VERBOSE,
)


class Field:
    spec: FieldSpec
    zero: Scalar
    one: Scalar

    def __call__(self, value) -> Scalar:
        raise NotImplementedError

    def has_cube_root(self) -> bool:
        return True

    def primitive_cube_root(self) -> Scalar:
        raise UnsupportedField(f"{self.spec.label()} has no primitive cube root of unity")

    def random_element(self, rng: random.Random, bound: int = 9) -> Scalar:
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        """Parse ``u``, ``u/v``, ``u+v*w``, ``u/v*w`` where ``w`` is zeta."""
        text = text.strip().replace("ζ", "w").replace("zeta", "w")
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        m = _SCALAR_RE.match(text)
        if not m or (m.group("a") is None and "w" not in text):
            raise ValueError(f"cannot parse scalar {text!r}")
        a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
        if "w" not in text:
            return self(a)
        b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
        if m.group("sign") == "-":
            b = -b
        if m.group("a") is None and m.group("sign") is None and text.lstrip().startswith("-"):
            b = -b
        return self(a) + self(b) * self.primitive_cube_root()

    def format(self, x: Scalar) -> str:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"<Field {self.spec.label()}>"


class RationalField(Field):
    def __init__(self):
        self.spec = FieldSpec.rationals()
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, QZeta):
            if value.b:
                raise UnsupportedField("zeta is not rational")
            return value.a
        if isinstance(value, str):
            return self.parse(value)
        return Fraction(value)

    def has_cube_root(self) -> bool:
        return False

    def random_element(self, rng, bound=9):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    def format(self, x) -> str:
        return _fmt_rat(Fraction(x))


class CyclotomicField(Field):
    def __init__(self):
        self.spec = FieldSpec.cyclotomic3()
        self.zero = QZeta(0)
        self.one = QZeta(1)
        self._zeta = QZeta(0, 1)

    def __call__(self, value) -> QZeta:
        if isinstance(value, QZeta):
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fp):
            raise TypeError("cannot lift an F_p residue to Q(zeta)")
        return QZeta(value, 0)

    def primitive_cube_root(self) -> QZeta:
        return self._zeta

    def random_element(self, rng, bound=9):
        return QZeta(
            Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
            Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
        )

    def format(self, x) -> str:
        return format_qzeta(self(x))


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p % 3 != 1:
            raise FieldError(f"F_{p} has no primitive cube root of unity ({p} != 1 mod 3)")
        self.spec = FieldSpec.prime(p)
        self.p = p
        self.zero = Fp(0, p)
        self.one = Fp(1, p)
        self._root = Fp(next(g for g in range(2, p) if pow(g, 3, p) == 1), p)

    def __call__(self, value) -> Fp:
        if isinstance(value, Fp):
            if value.p != self.p:
                raise ValueError(f"residue mod {value.p} used in F_{self.p}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, QZeta):
            return specialize(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise BadPrime(f"denominator of {value} divisible by {self.p}")
            return Fp(value.numerator * pow(value.denominator, -1, self.p), self.p)
        return Fp(int(value), self.p)

    def primitive_cube_root(self) -> Fp:
        return self._root

    def random_element(self, rng, bound=None):
        return Fp(rng.randrange(self.p), self.p)

    def elements(self):
        return [Fp(v, self.p) for v in range(self.p)]

    def parse(self, text: str) -> Fp:
        t = text.strip()
        if re.fullmatch(r"[+-]?\d+", t):
            return Fp(int(t), self.p)
        return super().parse(t)

    def format(self, x) -> str:
        return str(self(x).v)


def make_field(spec: FieldSpec | str) -> Field:
    if isinstance(spec, str):
        spec = FieldSpec.parse(spec)
    if spec.kind == "rationals":
        return RationalField()
    if spec.kind == "cyclotomic3":
        return CyclotomicField()
    if spec.kind == "prime":
        if spec.p is None:
            raise FieldError("prime field needs p")
        return PrimeField(spec.p)
    raise FieldError(f"unknown field kind {spec.kind!r}")


def primitive_cube_root(field: Field) -> Scalar:
    return field.primitive_cube_root()


def specialize(x, p: int) -> Fp:
    """Reduce an element of Q(zeta) (or Q) to F_p, sending zeta to the
    smallest nontrivial cube root of unity mod p."""
    if p % 3 != 1 or not is_prime(p):
        raise FieldError(f"cannot specialize to F_{p}")
    if isinstance(x, Fp):
        if x.p != p:
            raise ValueError("already a residue of another prime")
        return x
    if isinstance(x, int):
        return Fp(x, p)
    if isinstance(x, Fraction):
        x = QZeta(x)
    root = next(g for g in range(2, p) if pow(g, 3, p) == 1)
    for part in (x.a, x.b):
        if part.denominator % p == 0:
            raise BadPrime(f"denominator of {format_qzeta(x)} divisible by {p}")
    a = x.a.numerator * pow(x.a.denominator, -1, p)
    b = x.b.numerator * pow(x.b.denominator, -1, p)
    return Fp(a + b * root, p)


QQ = RationalField()
QW = CyclotomicField()
