from fractions import Fraction

from hypothesis import strategies as st

from sklyanin.freealg import NcPoly
from sklyanin.scalars import QQ, QW, Fp, QZeta, make_field

F7 = make_field("fp:7")
F13 = make_field("fp:13")

small_ints = st.integers(-20, 20)
rationals = st.builds(Fraction, small_ints, st.integers(1, 12))
qzetas = st.builds(QZeta, rationals, rationals)


def residues(p):
    return st.builds(lambda v: Fp(v, p), st.integers(0, p - 1))


FIELD_ELEMENTS = {
    "q": (QQ, rationals),
    "qzeta": (QW, qzetas),
    "fp:7": (F7, residues(7)),
    "fp:13": (F13, residues(13)),
}


def words(max_len=3):
    return st.binary(min_size=0, max_size=max_len).map(lambda b: bytes(x % 3 for x in b))


def polys(coeffs=qzetas, max_terms=4, max_len=3):
    return st.dictionaries(words(max_len), coeffs, max_size=max_terms).map(NcPoly)
