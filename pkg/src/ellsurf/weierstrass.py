"""Long Weierstrass curves over Q and their group law, in exact arithmetic."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import NonIntegralModel, NotIntegralAfterScaling, PointNotOnCurve, SingularCurve

Number = Union[int, Fraction]

MAZUR_ORDERS = frozenset({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12})


@dataclass(frozen=True)
class Point:
    """Affine point, or the point at infinity when ``x`` is None."""

    x: Fraction | None = None
    y: Fraction | None = None

    @classmethod
    def at(cls, x: Number, y: Number) -> "Point":
        return cls(Fraction(x), Fraction(y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def is_integral(self) -> bool:
        return self.is_infinity or (self.x.denominator == 1 and self.y.denominator == 1)

    def __str__(self) -> str:
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = Point()


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __init__(self, a1: Number = 0, a2: Number = 0, a3: Number = 0, a4: Number = 0, a6: Number = 0):
        for name, val in zip(("a1", "a2", "a3", "a4", "a6"), (a1, a2, a3, a4, a6)):
            object.__setattr__(self, name, Fraction(val))
        if self.discriminant == 0:
            raise SingularCurve(f"singular curve {self.ainvs}")

    @classmethod
    def short(cls, a: Number, b: Number) -> "WeierstrassCurve":
        return cls(0, 0, 0, a, b)

    @property
    def ainvs(self) -> tuple[Fraction, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b2(self) -> Fraction:
        return self.a1**2 + 4 * self.a2

    @property
    def b4(self) -> Fraction:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> Fraction:
        return self.a3**2 + 4 * self.a6

    @property
    def b8(self) -> Fraction:
        a1, a2, a3, a4, a6 = self.ainvs
        return a1**2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3**2 - a4**2

    @property
    def c4(self) -> Fraction:
        return self.b2**2 - 24 * self.b4

    @property
    def c6(self) -> Fraction:
        return -self.b2**3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -(b2**2) * b8 - 8 * b4**3 - 27 * b6**2 + 9 * b2 * b4 * b6

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.ainvs)

    def contains(self, P: Point) -> bool:
        if P.is_infinity:
            return True
        x, y = P.x, P.y
        a1, a2, a3, a4, a6 = self.ainvs
        return y * y + a1 * x * y + a3 * y == x**3 + a2 * x * x + a4 * x + a6

    def __str__(self) -> str:
        def term(c: Fraction, mono: str) -> str:
            if c == 0:
                return ""
            sign = " - " if c < 0 else " + "
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}{mono}" if mono else f"{mag}")
            return sign + body

        lhs = "y^2" + term(self.a1, "xy") + term(self.a3, "y")
        rhs = "x^3" + term(self.a2, "x^2") + term(self.a4, "x") + term(self.a6, "")
        return f"{lhs} = {rhs}"


def _check(curve: WeierstrassCurve, *points: Point) -> None:
    for P in points:
        if not curve.contains(P):
            raise PointNotOnCurve(f"{P} is not on {curve}")


def negate(curve: WeierstrassCurve, P: Point) -> Point:
    _check(curve, P)
    if P.is_infinity:
        return P
    return Point(P.x, -P.y - curve.a1 * P.x - curve.a3)


def add(curve: WeierstrassCurve, P: Point, Q: Point) -> Point:
    _check(curve, P, Q)
    return _add(curve, P, Q)


def _add(curve: WeierstrassCurve, P: Point, Q: Point) -> Point:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    a1, a2, a3, a4, _ = curve.ainvs
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if y1 + y2 + a1 * x2 + a3 == 0:
            return INFINITY
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return Point(x3, y3)


def double(curve: WeierstrassCurve, P: Point) -> Point:
    return add(curve, P, P)


def multiply(curve: WeierstrassCurve, P: Point, k: int) -> Point:
    _check(curve, P)
    if k < 0:
        P, k = negate(curve, P), -k
    out = INFINITY
    while k:
        if k & 1:
            out = _add(curve, out, P)
        P = _add(curve, P, P)
        k >>= 1
    return out


def scale_to_integral(curve: WeierstrassCurve, alpha: int) -> WeierstrassCurve:
    """Multiply a_i by alpha^i (the change x -> alpha^2 x, y -> alpha^3 y)
    and insist that the result is integral."""
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    a1, a2, a3, a4, a6 = curve.ainvs
    out = WeierstrassCurve(a1 * alpha, a2 * alpha**2, a3 * alpha**3, a4 * alpha**4, a6 * alpha**6)
    if not out.is_integral():
        raise NotIntegralAfterScaling(f"alpha={alpha} leaves {out}")
    return out


def scale_point(P: Point, alpha: int) -> Point:
    if P.is_infinity:
        return P
    return Point(P.x * alpha**2, P.y * alpha**3)


def integral_scaling(curve: WeierstrassCurve) -> int:
    """A small alpha (the lcm of the coefficient denominators) that makes the
    curve integral."""
    return math.lcm(*(a.denominator for a in curve.ainvs))


@dataclass(frozen=True)
class FilterResult:
    infinite_order: bool
    detail: str

    @property
    def label(self) -> str:
        return "InfiniteOrder" if self.infinite_order else "TorsionCandidate"


def lutz_nagell_filter(curve: WeierstrassCurve, P: Point) -> FilterResult:
    """Infinite order if P or [2]P is non-integral while neither [2]P nor [4]P is O.

    On an integral long Weierstrass model a torsion point of order other than 2
    has integral coordinates; points of order 2 can have denominator 2 when
    a1 or a3 is odd, which is why [4]P = O is excluded as well.
    """
    if not curve.is_integral():
        raise NonIntegralModel(f"{curve} is not integral")
    _check(curve, P)
    if P.is_infinity:
        return FilterResult(False, "P = O")
    P2 = _add(curve, P, P)
    if P2.is_infinity:
        return FilterResult(False, "[2]P = O")
    P4 = _add(curve, P2, P2)
    if P4.is_infinity:
        return FilterResult(False, "[4]P = O")
    if not P.is_integral():
        return FilterResult(True, f"P = {P} is not integral")
    if not P2.is_integral():
        return FilterResult(True, f"[2]P = {P2} is not integral")
    return FilterResult(False, "P and [2]P integral")


@dataclass(frozen=True)
class TorsionResult:
    kind: str  # "order", "infinite" or "inconclusive"
    order: int | None = None
    detail: str = ""

    def __str__(self) -> str:
        if self.kind == "order":
            return f"Order({self.order})"
        return self.kind.capitalize()


def torsion_order(curve: WeierstrassCurve, P: Point, bound: int = 12) -> TorsionResult:
    """Exact order up to ``bound``, else Infinite when some multiple [k]P with
    [2k]P != O is non-integral on an integral model, else Inconclusive."""
    _check(curve, P)
    alpha = integral_scaling(curve)
    E = scale_to_integral(curve, alpha) if alpha != 1 else curve
    Q = scale_point(P, alpha)
    multiples = [INFINITY]
    R = INFINITY
    for k in range(1, bound + 1):
        R = _add(E, R, Q)
        if R.is_infinity:
            assert k in MAZUR_ORDERS, f"order {k} is not a possible torsion order over Q"
            return TorsionResult("order", k)
        multiples.append(R)
    for k in range(1, bound // 2 + 1):
        if not multiples[k].is_integral():
            return TorsionResult("infinite", None, f"[{k}]P = {multiples[k]} is not integral")
    return TorsionResult("inconclusive", None, f"multiples up to {bound} are integral and nonzero")
