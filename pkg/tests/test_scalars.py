from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sklyanin.scalars import (QQ, QW, BadPrime, FieldError, FieldSpec, Fp, QZeta, UnsupportedField, make_field,
                              primitive_cube_root, specialize)
from strategies import FIELD_ELEMENTS, qzetas


def test_prime_field_needs_cube_root():
    assert make_field(FieldSpec.prime(7)).p == 7
    with pytest.raises(FieldError):
        make_field(FieldSpec.prime(5))
    with pytest.raises(FieldError):
        make_field(FieldSpec.prime(91))


def test_cube_roots():
    w = primitive_cube_root(QW)
    assert w * w * w == 1 and w != 1
    assert primitive_cube_root(make_field("fp:7")) == Fp(2, 7)
    assert primitive_cube_root(make_field("fp:13")) == Fp(3, 13)
    with pytest.raises(UnsupportedField):
        primitive_cube_root(QQ)


def test_smallest_root_is_exhaustive_minimum():
    for p in (7, 13, 19, 31, 37):
        g = int(primitive_cube_root(make_field(FieldSpec.prime(p))))
        assert min(v for v in range(2, p) if pow(v, 3, p) == 1) == g


def test_specialize_examples():
    assert specialize(QZeta(0, 1), 7) == Fp(2, 7)
    assert specialize(QZeta(1, 1), 7) == Fp(3, 7)
    assert specialize(Fraction(1, 2), 7) == Fp(4, 7)
    with pytest.raises(BadPrime):
        specialize(QZeta(Fraction(1, 7), 0), 7)


@pytest.mark.parametrize("text,expected", [
    ("3", QZeta(3)), ("-1/2", QZeta(Fraction(-1, 2))), ("1+2*w", QZeta(1, 2)),
    ("1/2*w", QZeta(0, Fraction(1, 2))), ("-w", QZeta(0, -1)), ("2-w", QZeta(2, -1)), ("(1+ζ)", QZeta(1, 1)),
])
def test_parse_qzeta(text, expected):
    assert QW.parse(text) == expected


@given(qzetas)
def test_format_round_trip(x):
    assert QW.parse(QW.format(x)) == x


def test_prime_parse_is_residue():
    F = make_field("fp:7")
    assert F.parse("12") == Fp(5, 7)
    assert F.parse("1+w") == Fp(3, 7)


@pytest.mark.parametrize("name", sorted(FIELD_ELEMENTS))
def test_one_plus_omega_plus_omega_squared(name):
    fld, _ = FIELD_ELEMENTS[name]
    if not fld.has_cube_root():
        return
    w = fld.primitive_cube_root()
    assert fld.one + w + w * w == 0


@given(st.data())
def test_field_axioms(data):
    name = data.draw(st.sampled_from(sorted(FIELD_ELEMENTS)))
    fld, elems = FIELD_ELEMENTS[name]
    x, y, z = data.draw(elems), data.draw(elems), data.draw(elems)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) - y == x
    assert x * y == y * x
    if x:
        assert x * (1 / x) == 1


@given(qzetas, qzetas)
def test_specialize_is_homomorphism(x, y):
    for p in (7, 13):
        try:
            sx, sy = specialize(x, p), specialize(y, p)
        except BadPrime:
            continue
        assert specialize(x + y, p) == sx + sy
        assert specialize(x * y, p) == sx * sy


def test_qzeta_conjugate_and_norm():
    x = QZeta(2, 3)
    assert x * x.conjugate() == x.norm()
    assert QZeta(0, 1).conjugate() == QZeta(0, 1) ** 2
