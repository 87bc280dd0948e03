from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from sklyanin.freealg import NcPoly, QuadPresentation, all_words, sklyanin_presentation, word, word_str
from sklyanin.quadops import koszul_dual
from sklyanin.rewrite import (MonomialOrder, NeedsDeeperCompletion, check_confluence, complete_to_degree,
                              hilbert_function, normal_form, normal_words)
from sklyanin.scalars import QQ, QW, QZeta, make_field
from oracles import ideal_dimensions, in_ideal
from strategies import qzetas

W = QZeta(0, 1)
CUBE_ROOT_CASES = [(1, 1, 1), (1, W, W), (1, 1, W)]


@pytest.mark.parametrize("abc", CUBE_ROOT_CASES + [(1, 0, 0)])
def test_degenerate_dims_against_oracle(abc):
    S = sklyanin_presentation(*abc)
    rs = complete_to_degree(S, MonomialOrder(), 5)
    assert hilbert_function(rs, 5) == ideal_dimensions(S, 5) == [1, 3, 6, 12, 24, 48]


def test_nondegenerate_probe():
    S = sklyanin_presentation(1, 2, 3, QQ)
    rs = complete_to_degree(S, MonomialOrder(), 6)
    assert hilbert_function(rs, 6) == [(d + 1) * (d + 2) // 2 for d in range(7)]
    assert hilbert_function(rs, 4) == ideal_dimensions(S, 4)
    assert any(len(l) == 3 for l in rs.rules)


def test_s100_rules_are_the_monomials():
    rs = complete_to_degree(sklyanin_presentation(1, 0, 0), MonomialOrder((2, 0, 1)), 6)
    assert sorted(rs.rules) == sorted([word("yz"), word("zx"), word("xy")])
    assert all(not t for t in rs.rules.values())


def test_s111_rules():
    rs = complete_to_degree(sklyanin_presentation(1, 1, 1), MonomialOrder(), 6)
    assert sorted(map(word_str, rs.rules)) == ["zx", "zy", "zz"]
    assert check_confluence(rs) == []


def test_dual_basis_words():
    rs = complete_to_degree(koszul_dual(sklyanin_presentation(1, 1, 1)), MonomialOrder(), 6)
    for d in range(1, 7):
        got = set(map(word_str, normal_words(rs, d)))
        assert got == {"x" * d, "x" * (d - 1) + "y", "x" * (d - 1) + "z"}


def test_normal_forms():
    S = sklyanin_presentation(1, 1, 1)
    rs = complete_to_degree(S, MonomialOrder(), 3)
    s = NcPoly.linear([1, 1, 1])
    assert normal_form(rs, s * s) == 0
    assert normal_form(rs, NcPoly.gen(0)) == NcPoly.gen(0)
    b = c = W
    rs = complete_to_degree(sklyanin_presentation(1, b, c), MonomialOrder(), 3)
    assert normal_form(rs, NcPoly.linear([1, b, b * c * c]) * NcPoly.linear([c, c, b * b])) == 0


def test_degree_overflow():
    rs = complete_to_degree(sklyanin_presentation(1, 1, 1), MonomialOrder(), 3)
    with pytest.raises(NeedsDeeperCompletion):
        normal_form(rs, NcPoly.monomial(word("zzzz")))
    with pytest.raises(NeedsDeeperCompletion):
        hilbert_function(rs, 4)


def test_normal_words_examples():
    rs = complete_to_degree(sklyanin_presentation(1, 0, 0), MonomialOrder(), 3)
    assert set(map(word_str, normal_words(rs, 2))) == {"xx", "yy", "zz", "yx", "zy", "xz"}
    rs = complete_to_degree(sklyanin_presentation(1, 1, 1), MonomialOrder(), 4)
    assert normal_words(rs, 1) == [b"\x00", b"\x01", b"\x02"]
    assert len(normal_words(rs, 4)) == 24
    assert hilbert_function(rs, 0) == [1]


@pytest.mark.parametrize("prec", list(permutations(range(3))))
def test_order_invariance_s111(prec):
    rs = complete_to_degree(sklyanin_presentation(1, 1, 1), MonomialOrder(prec), 7)
    assert hilbert_function(rs, 7) == [1, 3, 6, 12, 24, 48, 96, 192]
    assert check_confluence(rs) == []


def test_order_parse():
    assert MonomialOrder.parse("x,y,z") == MonomialOrder()
    assert MonomialOrder.parse("z<x<y").precedence == (2, 0, 1)
    with pytest.raises(ValueError):
        MonomialOrder.parse("x,x,z")


def test_prime_field_completion():
    F = make_field("fp:7")
    w = F.primitive_cube_root()
    rs = complete_to_degree(sklyanin_presentation(1, w, w, F), MonomialOrder(), 6)
    assert hilbert_function(rs, 6) == [1, 3, 6, 12, 24, 48, 96]


@settings(max_examples=25, deadline=None)
@given(qzetas, qzetas, st.sampled_from(list(permutations(range(3)))))
def test_random_presentations_confluent(b, c, prec):
    S = sklyanin_presentation(1, b, c)
    rs = complete_to_degree(S, MonomialOrder(prec), 4)
    assert check_confluence(rs) == []
    assert hilbert_function(rs, 4) == ideal_dimensions(S, 4)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_normal_form_linear_idempotent_and_kills_ideal(data):
    S = sklyanin_presentation(1, W, 1)
    rs = complete_to_degree(S, MonomialOrder(), 4)
    words4 = all_words(3, 4)
    p = NcPoly({data.draw(st.sampled_from(words4)): data.draw(qzetas) for _ in range(3)})
    q = NcPoly({data.draw(st.sampled_from(words4)): data.draw(qzetas) for _ in range(3)})
    lam = data.draw(qzetas)
    assert normal_form(rs, p + q.scale(lam)) == normal_form(rs, p) + normal_form(rs, q).scale(lam)
    assert normal_form(rs, normal_form(rs, p)) == normal_form(rs, p)
    u = data.draw(st.sampled_from(all_words(3, 1)))
    v = data.draw(st.sampled_from(all_words(3, 1)))
    r = data.draw(st.sampled_from(S.relations))
    assert normal_form(rs, NcPoly.monomial(u) * r * NcPoly.monomial(v)) == 0
    assert (not normal_form(rs, p)) == in_ideal(S, p)
