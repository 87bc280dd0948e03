import pytest
from hypothesis import given, settings

from sklyanin.freealg import NcPoly, QuadPresentation, relation_span_equal, sklyanin_presentation, word
from sklyanin.quadops import (GradedAutomorphism, InvalidAutomorphism, OreData, certify_normal, diagonal_scalars,
                              identity, koszul_dual, ore_extension, ore_presentation, pairing_matrix, sigma, tau,
                              zhang_twist)
from sklyanin.report import printed_dual
from sklyanin.rewrite import MonomialOrder, complete_to_degree, hilbert_function
from sklyanin.scalars import QW, QZeta
from strategies import qzetas

W = QZeta(0, 1)
W2 = W * W
REPS = [(1, 1, 1), (1, W, W), (1, 1, W), (1, 0, 0)]


@pytest.mark.parametrize("abc", REPS)
def test_dual_pairs_to_zero_and_is_involutive(abc):
    S = sklyanin_presentation(*abc)
    dual = koszul_dual(S)
    assert len(dual.relations) == 6
    assert all(not v for row in pairing_matrix(S, dual) for v in row)
    assert relation_span_equal(koszul_dual(dual), S)


def test_dual_of_monomial_algebra():
    dual = koszul_dual(sklyanin_presentation(1, 0, 0))
    monos = {next(iter(r.terms)) for r in dual.relations}
    assert monos == {word(t) for t in ("xx", "xz", "yx", "yy", "zy", "zz")}


@pytest.mark.parametrize("b,c", [(1, 1), (1, W), (1, W2)])
def test_printed_dual_holds_when_b_is_one(b, c):
    assert relation_span_equal(printed_dual(QW(b), QW(c), QW), koszul_dual(sklyanin_presentation(1, b, c)))


@pytest.mark.parametrize("b,c", [(W, W), (W2, 1), (W, W2)])
def test_printed_dual_fails_when_b_is_not_one(b, c):
    # zy - b^2 yz pairs with f = yz + b zy + c xx to b - b^2
    S = sklyanin_presentation(1, b, c)
    pd = printed_dual(QW(b), QW(c), QW)
    assert not relation_span_equal(pd, koszul_dual(S))
    assert pairing_matrix(S, pd)[0][2] == QW(b) - QW(b) * QW(b)


@pytest.mark.parametrize("abc", REPS[:3])
def test_dual_dims(abc):
    rs = complete_to_degree(koszul_dual(sklyanin_presentation(*abc)), MonomialOrder(), 8)
    assert hilbert_function(rs, 8) == [1] + [3] * 8


def test_dual_chain_of_s100():
    rs = complete_to_degree(koszul_dual(sklyanin_presentation(1, 0, 0)), MonomialOrder(), 8)
    assert all(rs.is_irreducible(bytes(i % 3 for i in range(k))) for k in range(9))
    assert hilbert_function(rs, 8) == [1] + [3] * 8


SIGMA_TABLE = [
    ((1, 1, 1), 1, (1, W, W2)), ((1, 1, 1), -1, (1, W2, W)),
    ((1, 1, W), 1, (1, W, 1)), ((1, 1, W), -1, (1, W2, W2)),
    ((1, W, W), 1, (1, W2, 1)), ((1, W, W), -1, (1, 1, W2)),
]


@pytest.mark.parametrize("src,n,dst", SIGMA_TABLE)
def test_sigma_twists(src, n, dst):
    T = zhang_twist(sklyanin_presentation(*src), sigma() ** n)
    assert relation_span_equal(T, sklyanin_presentation(*dst))
    assert hilbert_function(complete_to_degree(T, D=8), 8) == [1] + [3 * 2 ** (d - 1) for d in range(1, 9)]


def test_tau_twists_land_on_the_other_coordinate_points():
    S = sklyanin_presentation(1, 0, 0)
    assert relation_span_equal(zhang_twist(S, tau()), sklyanin_presentation(0, 0, 1))
    assert relation_span_equal(zhang_twist(S, tau() ** -1), sklyanin_presentation(0, 1, 0))
    # x * x = x tau(x) = xy vanishes, so xx is a relation of the twist
    assert not relation_span_equal(zhang_twist(S, tau()), sklyanin_presentation(0, 1, 0))


def test_twist_by_identity_and_back():
    for abc in REPS:
        S = sklyanin_presentation(*abc)
        assert relation_span_equal(zhang_twist(S, identity()), S)
        for auto in (sigma(), tau()):
            assert relation_span_equal(zhang_twist(zhang_twist(S, auto), auto ** -1), S)


def test_twist_orbits_cover_the_cube_root_points():
    found = set()
    for abc in REPS[:3]:
        for n in (0, 1, 2):
            T = zhang_twist(sklyanin_presentation(*abc), sigma() ** n)
            for i in range(3):
                for j in range(3):
                    if relation_span_equal(T, sklyanin_presentation(1, W ** i, W ** j)):
                        found.add((i, j))
    assert found == {(i, j) for i in range(3) for j in range(3)}


def test_singular_automorphism_rejected():
    with pytest.raises(InvalidAutomorphism):
        GradedAutomorphism.from_matrix([1, 0, 0, 1, 0, 0, 0, 0, 1])


@pytest.mark.parametrize("b,c", [(1, 1), (W, W), (1, W)])
def test_ore_presentation_spans(b, c):
    assert relation_span_equal(ore_presentation(b, c), sklyanin_presentation(1, b, c))


def test_ore_relation_is_relation_g():
    data = OreData(QW(1), W)
    g = sklyanin_presentation(1, 1, W).relations[1]
    assert data.ore_relations()[0] == g


@pytest.mark.parametrize("b,c", [(1, 1), (W, W), (1, W), (W2, W)])
def test_omega_certificate(b, c):
    b, c = QW(b), QW(c)
    rs = complete_to_degree(ore_extension(b, c), D=4)
    cert = diagonal_scalars(certify_normal(rs, OreData(b, c).omega()))
    assert cert == (b, b * b, 1)


def test_twisted_leibniz_rule():
    data = OreData(W, W2)
    gens = [NcPoly.gen(i) for i in range(2)]
    for r in gens + [gens[0] * gens[1]]:
        for s in gens + [gens[1] * gens[1]]:
            assert data.leibniz_holds(r, s)


def test_certify_examples():
    rs = complete_to_degree(sklyanin_presentation(1, 0, 0), D=3)
    x2 = NcPoly.monomial(word("xx"))
    cert = certify_normal(rs, x2, (0,))
    assert cert is not None and cert[0] == (1, 0, 0)
    rs = complete_to_degree(sklyanin_presentation(1, 1, 1), D=3)
    assert certify_normal(rs, NcPoly.gen(0)) is None


@settings(max_examples=20, deadline=None)
@given(qzetas, qzetas)
def test_twist_preserves_dims_random(b, c):
    S = sklyanin_presentation(1, b, c)
    T = zhang_twist(S, sigma())
    assert hilbert_function(complete_to_degree(S, D=4), 4) == hilbert_function(complete_to_degree(T, D=4), 4)
