import pytest
from hypothesis import given, settings, strategies as st

from sklyanin.freealg import (InvalidPresentation, NcPoly, PresentationSyntaxError, QuadPresentation,
                              in_degenerate_locus, nc_multiply, parse_presentation, relation_span_equal,
                              sklyanin_presentation, word)
from sklyanin.scalars import QQ, QW, QZeta
from strategies import polys, qzetas

W = QZeta(0, 1)


def P(text):
    out = NcPoly()
    for term in text.split("+"):
        out = out + NcPoly.monomial(word(term.strip()))
    return out


def test_s111_relations():
    S = sklyanin_presentation(1, 1, 1)
    assert S.relations == [P("yz + zy + xx"), P("zx + xz + yy"), P("xy + yx + zz")]


def test_s100_relations():
    assert sklyanin_presentation(1, 0, 0).relations == [P("yz"), P("zx"), P("xy")]


def test_projective_normalization():
    assert sklyanin_presentation(2, 2, 2).relations == sklyanin_presentation(1, 1, 1).relations
    assert sklyanin_presentation(0, 3, 6).params == (0, 1, 2)
    with pytest.raises(InvalidPresentation):
        sklyanin_presentation(0, 0, 0)


@given(qzetas.filter(bool), qzetas, qzetas, qzetas)
def test_scaling_invariance(lam, a, b, c):
    if not (a or b or c):
        return
    S1 = sklyanin_presentation(a, b, c)
    S2 = sklyanin_presentation(lam * a, lam * b, lam * c)
    assert S1.relations == S2.relations


def test_degenerate_locus():
    assert in_degenerate_locus(1, 1, 1)
    assert in_degenerate_locus(0, 0, 1)
    assert not in_degenerate_locus(1, 2, 3)
    assert in_degenerate_locus(QW.one, W, W * W)
    assert in_degenerate_locus(2, 2 * W, 2)
    assert not in_degenerate_locus(1, 1, 0)


def test_multiply_examples():
    x, y, z = (NcPoly.gen(i) for i in range(3))
    assert nc_multiply(x, y) == P("xy")
    assert (x + y) * (x + y) == P("xx + xy + yx + yy")
    s = x + y + z
    total = NcPoly()
    for r in sklyanin_presentation(1, 1, 1).relations:
        total = total + r
    assert s * s == total


@given(polys(), polys(), polys())
def test_multiply_associative_distributive(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r


def test_span_equal():
    S = sklyanin_presentation(1, 1, 1)
    scaled = QuadPresentation(QW, [r.scale(5) for r in S.relations])
    assert relation_span_equal(S, scaled)
    assert not relation_span_equal(S, sklyanin_presentation(1, 0, 0))


@settings(max_examples=30)
@given(st.lists(qzetas, min_size=9, max_size=9))
def test_span_equal_is_equivalence(m):
    S = sklyanin_presentation(1, 1, 1)
    mixed = [sum((r.scale(m[3 * i + j]) for j, r in enumerate(S.relations)), NcPoly()) for i in range(3)]
    try:
        T = QuadPresentation(QW, mixed)
    except InvalidPresentation:
        return
    U = QuadPresentation(QW, list(reversed(T.relations)))
    assert relation_span_equal(S, S)
    assert relation_span_equal(S, T) and relation_span_equal(T, S)
    assert relation_span_equal(T, U) and relation_span_equal(S, U)


def test_parse_round_trip_builtin():
    text = "generators: x y z\n1*y.z + 1*z.y + 1*x.x\n1*z.x + 1*x.z + 1*y.y\n1*x.y + 1*y.x + 1*z.z\n"
    assert relation_span_equal(parse_presentation(text), sklyanin_presentation(1, 1, 1))


@given(qzetas, qzetas)
def test_print_parse_round_trip(b, c):
    S = sklyanin_presentation(1, b, c)
    assert relation_span_equal(parse_presentation(S.format()), S)


def test_parse_zeta_coefficients():
    text = "generators: x y z\ny.z + (1+2*w)*z.y - x.x\nz.x + w*x.z + y.y\nx.y + y.x + z.z\n"
    Q = parse_presentation(text)
    assert Q.relations[0].coefficient(word("zy")) == QZeta(1, 2)
    assert Q.relations[0].coefficient(word("xx")) == -1


def test_parse_errors():
    with pytest.raises(InvalidPresentation, match="quadratic"):
        parse_presentation("generators: x y z\n1*x\n")
    with pytest.raises(InvalidPresentation, match="dependent"):
        parse_presentation("generators: x y z\nx.y + y.x\nx.y + y.x\n")
    with pytest.raises(PresentationSyntaxError) as exc:
        parse_presentation("generators: x y z\nx.y + q.x\n")
    assert exc.value.line == 2
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("gens x y z\nx.y\n")


def test_rational_field_presentation():
    S = sklyanin_presentation(1, 2, 3, QQ)
    assert S.params == (1, 2, 3)
