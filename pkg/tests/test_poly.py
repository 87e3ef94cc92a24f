from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ellsurf.errors import BothZero, BothZeroPolys, PolySyntaxError, SingularSurface, ZeroPoly
from ellsurf.poly import (
    Poly,
    discriminant_cubic,
    eval_homogeneous,
    format_poly,
    gcd,
    helfgott_shape,
    multiplicative_part,
    radical,
    rational_roots,
    shift,
    squarefree_decompose,
)

small = st.integers(-20, 20)
polys = st.lists(small, min_size=1, max_size=6).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())

T = Poly([0, 1])


def test_parse_and_format_roundtrip_examples():
    assert Poly.parse("27T^6 + 16") == 27 * T**6 + 16
    assert Poly.parse("T^4 - 6*T^2 + 8T - 3") == Poly([-3, 8, -6, 0, 1])
    assert format_poly(Poly.parse("1/2 t - t^2")) == "-T^2 + 1/2*T"
    assert format_poly(Poly()) == "0"


@pytest.mark.parametrize("bad", ["", "T^", "2**T", "T+x", "(T+1)^2", "3T^2^2"])
def test_parse_rejects(bad):
    with pytest.raises(PolySyntaxError):
        Poly.parse(bad)


@given(polys)
def test_format_parse_roundtrip(p):
    assert Poly.parse(format_poly(p)) == p


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()


@given(polys, nonzero_polys)
def test_division_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(a, b):
    g = gcd(a, b)
    assert (a % g).is_zero() and (b % g).is_zero()


def test_eval_homogeneous_example():
    assert eval_homogeneous(T**2 + 1, 1, 2) == 5
    assert eval_homogeneous(27 * T**6 + 16, 1, 1) == 43
    with pytest.raises(BothZero):
        eval_homogeneous(T, 0, 0)


@given(polys, st.integers(-30, 30), st.integers(1, 30))
def test_eval_homogeneous_matches_rational_eval(p, m, n):
    D = max(p.degree, 0)
    assert eval_homogeneous(p, m, n, D) == p(Fraction(m, n)) * n**D


@given(polys, st.integers(-5, 5), st.integers(-10, 10))
def test_shift_is_composition(p, b, x):
    assert shift(p, b)(x) == p(x + b)


def test_discriminant_variants():
    A, B = T, T
    assert discriminant_cubic(A, B) == 4 * T**3 + 27 * T**2
    assert discriminant_cubic(A, B, minus=True) == 4 * T**3 - 27 * T**2
    assert discriminant_cubic(A, B, scaled=True) == -16 * (4 * T**3 + 27 * T**2)
    with pytest.raises(BothZeroPolys):
        discriminant_cubic(Poly(), Poly())


@given(nonzero_polys, nonzero_polys)
def test_squarefree_decomposition_reconstructs(a, b):
    P = a * a * b
    sf = squarefree_decompose(P)
    assert sf.product() == P
    for f, _ in sf.factors:
        assert gcd(f, f.derivative()).degree == 0


def test_radical_and_roots():
    P = (T - 1) ** 3 * (T + 2) ** 2 * (T**2 + 1)
    assert radical(P) == ((T - 1) * (T + 2) * (T**2 + 1)).primitive()
    assert rational_roots(P) == [-2, -2, 1, 1, 1]
    assert rational_roots(Poly([1, 0, 2])) == []
    assert rational_roots(2 * T**2 - T) == [0, Fraction(1, 2)]
    with pytest.raises(ZeroPoly):
        rational_roots(Poly())


def test_multiplicative_part_example():
    M = multiplicative_part(T, T)
    assert M.poly == 4 * T + 27
    assert not M.at_infinity


def test_multiplicative_part_at_infinity():
    # the T^12 terms of Delta cancel, so 1/T divides Delta but not A
    M = multiplicative_part(-3 * T**4, 2 * T**6 + 1)
    assert M.at_infinity and M.poly == 4 * T**6 + 1
    assert str(M) == "4*T^6 + 1 (times V)"


def test_multiplicative_part_isotrivial_is_empty():
    assert multiplicative_part(Poly(), T**5 + 1).poly == Poly([1])
    with pytest.raises(SingularSurface):
        multiplicative_part(-3 * T**2, 2 * T**3)


def test_helfgott_shapes():
    assert helfgott_shape(Poly([1])).label == "M empty"
    assert helfgott_shape((T - 1) * (T + 3)).unconditional
    assert helfgott_shape(T * (T**2 + 1)).label == "linear × quadratic"
    assert not helfgott_shape(T**4 + 2).unconditional
