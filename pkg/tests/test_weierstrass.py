from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from ellsurf.errors import NonIntegralModel, NotIntegralAfterScaling, PointNotOnCurve, SingularCurve
from ellsurf.weierstrass import (
    INFINITY,
    Point,
    WeierstrassCurve,
    add,
    double,
    integral_scaling,
    lutz_nagell_filter,
    multiply,
    negate,
    scale_point,
    scale_to_integral,
    torsion_order,
)

E1 = WeierstrassCurve.short(0, 1)  # y^2 = x^3 + 1, torsion Z/6


def test_double_example():
    assert double(E1, Point.at(2, 3)) == Point.at(0, 1)
    assert torsion_order(E1, Point.at(2, 3)).order == 6
    assert str(torsion_order(E1, Point.at(-1, 0))) == "Order(2)"


def test_singular_rejected():
    with pytest.raises(SingularCurve):
        WeierstrassCurve.short(0, 0)
    with pytest.raises(SingularCurve):
        WeierstrassCurve.short(-3, 2)


def test_point_not_on_curve():
    with pytest.raises(PointNotOnCurve):
        add(E1, Point.at(1, 1), INFINITY)


def test_scaling_example():
    E = WeierstrassCurve.short(Fraction(1, 3), 0)
    S = scale_to_integral(E, 3)
    assert S.ainvs[3] == 27
    with pytest.raises(NotIntegralAfterScaling):
        scale_to_integral(E, 2)
    assert integral_scaling(WeierstrassCurve.short(Fraction(1, 4), Fraction(1, 6))) == 12


def test_lutz_nagell_needs_integral_model():
    E = WeierstrassCurve.short(Fraction(1, 2), 1)
    with pytest.raises(NonIntegralModel):
        lutz_nagell_filter(E, INFINITY)


def test_rank_one_point_is_infinite():
    E = WeierstrassCurve.short(0, -2)  # y^2 = x^3 - 2, generator (3, 5)
    P = Point.at(3, 5)
    assert lutz_nagell_filter(E, P).label == "InfiniteOrder"
    assert torsion_order(E, P).kind == "infinite"


def test_torsion_points_are_candidates():
    E5 = WeierstrassCurve(0, -1, 1, 0, 0)  # y^2 + y = x^3 - x^2
    assert torsion_order(E5, Point.at(0, 0)).order == 5
    assert not lutz_nagell_filter(E5, Point.at(0, 0)).infinite_order
    E3 = WeierstrassCurve(1, 0, 1, -1, 0)
    assert torsion_order(E3, Point.at(0, 0)).order == 3


# points on y^2 = x^3 - 2 x + 1 style curves generated from x and b = y^2 - x^3 - a x
pts = st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))


def _curve_through(a, x, y):
    b = y * y - x**3 - a * x
    assume(4 * a**3 + 27 * b**2 != 0)
    return WeierstrassCurve.short(a, b), Point.at(x, y)


@given(pts)
def test_group_law_properties(data):
    a, x, y = data
    E, P = _curve_through(a, x, y)
    assert add(E, P, negate(E, P)).is_infinity
    assert add(E, P, INFINITY) == P
    P2, P3 = multiply(E, P, 2), multiply(E, P, 3)
    assert E.contains(P2) and E.contains(P3)
    assert add(E, P2, P) == P3
    assert add(E, add(E, P, P2), P3) == add(E, P, add(E, P2, P3))
    assert multiply(E, P, -2) == negate(E, P2)


@given(pts, st.integers(1, 5))
def test_scaling_preserves_membership(data, alpha):
    a, x, y = data
    E, P = _curve_through(a, x, y)
    S = scale_to_integral(E, alpha)
    assert S.contains(scale_point(P, alpha))


@given(pts)
def test_filter_agrees_with_torsion_order(data):
    a, x, y = data
    E, P = _curve_through(a, x, y)
    res = torsion_order(E, P)
    if lutz_nagell_filter(E, P).infinite_order:
        assert res.kind != "order"
    if res.kind == "order":
        assert multiply(E, P, res.order).is_infinity


def test_torsion_against_pari(pari):
    for a in range(-6, 7):
        for x in range(-6, 7):
            for y in range(0, 7):
                b = y * y - x**3 - a * x
                if 4 * a**3 + 27 * b**2 == 0:
                    continue
                E = WeierstrassCurve.short(a, b)
                res = torsion_order(E, Point.at(x, y))
                order = int(pari.ellorder(pari.ellinit([0, 0, 0, a, b]), [x, y]))
                if order:
                    assert res.kind == "order" and res.order == order
                else:
                    assert res.kind != "order"
