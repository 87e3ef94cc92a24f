"""Surface-level structure of y^2 = x^3 + A(T) x + B(T) over Q(T).

Places are handled without factoring over Q: the discriminant is split into
squarefree pieces and each piece is refined by gcds until A and B have a
constant valuation on it, which is all the Kodaira table needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

from .classify import SurfaceJ0, SurfaceJ1728
from .errors import (
    GoodReduction,
    LeadingNotSquare,
    NotDegreeFour,
    NotDepressed,
    SingularCurve,
    SingularFiber,
    SingularSurface,
)
from .poly import Poly, discriminant_cubic, eval_homogeneous, format_poly, gcd, rational_roots, shift, squarefree_decompose
from .weierstrass import (
    FilterResult,
    Point,
    TorsionResult,
    WeierstrassCurve,
    lutz_nagell_filter,
    scale_point,
    scale_to_integral,
    torsion_order,
)

Number = Union[int, Fraction]
INF_VAL = 1 << 20  # valuation of the zero polynomial


# models and places -------------------------------------------------------------

@dataclass(frozen=True)
class EllipticSurfaceModel:
    """y^2 = x^3 + A(T) x + B(T)."""

    A: Poly
    B: Poly

    def __post_init__(self) -> None:
        if discriminant_cubic_safe(self.A, self.B).is_zero():
            raise SingularSurface("4A^3 + 27B^2 vanishes identically")

    @classmethod
    def parse(cls, A: str, B: str) -> "EllipticSurfaceModel":
        return cls(Poly.parse(A), Poly.parse(B))

    @property
    def discriminant(self) -> Poly:
        return discriminant_cubic_safe(self.A, self.B)

    @property
    def index(self) -> int:
        """Smallest N with deg A <= 4N and deg B <= 6N (N = 1: rational)."""
        return max(1, math.ceil(max(self.A.degree, 0) / 4), math.ceil(max(self.B.degree, 0) / 6))

    def __str__(self) -> str:
        return f"y^2 = x^3 + ({format_poly(self.A)})x + ({format_poly(self.B)})"


def discriminant_cubic_safe(A: Poly, B: Poly) -> Poly:
    if A.is_zero() and B.is_zero():
        return Poly()
    return discriminant_cubic(A, B)


@dataclass(frozen=True)
class Place:
    """A finite place given by a squarefree polynomial (ideally irreducible,
    or a product of places of identical type), or the place at infinity."""

    poly: Poly | None = None

    @classmethod
    def infinity(cls) -> "Place":
        return cls(None)

    @classmethod
    def at(cls, r: Number) -> "Place":
        return cls(Poly([-Fraction(r), 1]))

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    def __str__(self) -> str:
        return "1/T" if self.poly is None else format_poly(self.poly.monic())


def _val(P: Poly, place: Poly) -> int:
    if P.is_zero():
        return INF_VAL
    v = 0
    while True:
        q, r = divmod(P, place)
        if not r.is_zero():
            return v
        P, v = q, v + 1


def place_valuations(surface: EllipticSurfaceModel, place: Place) -> tuple[int, int, int]:
    """(v(A), v(B), v(Delta)) before minimalization; weights (4N, 6N, 12N) at infinity."""
    A, B, D = surface.A, surface.B, surface.discriminant
    if place.is_infinite:
        N = surface.index
        va = INF_VAL if A.is_zero() else 4 * N - A.degree
        vb = INF_VAL if B.is_zero() else 6 * N - B.degree
        return va, vb, 12 * N - D.degree
    return _val(A, place.poly), _val(B, place.poly), _val(D, place.poly)


# Kodaira types -------------------------------------------------------------------

@dataclass(frozen=True)
class KodairaType:
    symbol: str  # "I", "I*", "II", "III", "IV", "IV*", "III*", "II*"
    m: int = 0

    @property
    def euler(self) -> int:
        return {"I": self.m, "I*": self.m + 6, "II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}[self.symbol]

    def __str__(self) -> str:
        if self.symbol == "I":
            return f"I{self.m}"
        if self.symbol == "I*":
            return f"I{self.m}*"
        return self.symbol


def kodaira_from_valuations(va: int, vb: int, vd: int) -> KodairaType:
    """Characteristic-zero table, after removing (4, 6, 12) as often as possible."""
    while va >= 4 and vb >= 6:
        va, vb, vd = va - 4, vb - 6, vd - 12
    if vd == 0:
        raise GoodReduction("v(Delta) = 0 on the minimal model")
    if va == 0 or vb == 0:
        return KodairaType("I", vd)
    if vb == 1:
        return KodairaType("II")
    if va == 1:
        return KodairaType("III")
    if vb == 2:
        return KodairaType("IV")
    if vd == 6:
        return KodairaType("I*", 0)
    if va == 2 and vb == 3:
        return KodairaType("I*", vd - 6)
    if vb == 4:
        return KodairaType("IV*")
    if va == 3:
        return KodairaType("III*")
    return KodairaType("II*")


def kodaira_type(surface: EllipticSurfaceModel, place: Place) -> KodairaType:
    return kodaira_from_valuations(*place_valuations(surface, place))


def _split_by(f: Poly, X: Poly) -> dict[int, Poly]:
    """Split the squarefree f into pieces on which v(X) is constant."""
    if X.is_zero():
        return {INF_VAL: f}
    out: dict[int, Poly] = {}
    rest = f
    prev = Poly([1])
    i = 1
    while rest.degree > 0:
        cur = gcd(f**i, X)
        ge_i = cur // prev  # product of places with v(X) >= i
        exact = rest // gcd(rest, ge_i)
        if exact.degree > 0:
            out[i - 1] = exact
        rest = gcd(rest, ge_i)
        prev = cur
        i += 1
    return out


def bad_places(surface: EllipticSurfaceModel) -> list[tuple[Place, KodairaType]]:
    """Places of bad reduction grouped by type, the infinite place last."""
    out: list[tuple[Place, KodairaType]] = []
    for f, _ in squarefree_decompose(surface.discriminant).factors:
        for _, fa in _split_by(f, surface.A).items():
            for _, fb in _split_by(fa, surface.B).items():
                place = Place(fb.monic())
                try:
                    out.append((place, kodaira_type(surface, place)))
                except GoodReduction:  # pragma: no cover - f divides Delta
                    pass
    try:
        out.append((Place.infinity(), kodaira_type(surface, Place.infinity())))
    except GoodReduction:
        pass
    return out


def euler_sum(surface: EllipticSurfaceModel) -> int:
    """Sum of deg(place) * e(fiber); 12N for a minimal model of index N."""
    return sum(place.degree * kt.euler for place, kt in bad_places(surface))


# global tests ------------------------------------------------------------------------

def is_rational_surface(A: Poly, B: Poly) -> bool:
    if discriminant_cubic_safe(A, B).is_zero():
        raise SingularSurface("4A^3 + 27B^2 vanishes identically")
    return 0 < max(3 * A.degree, 2 * B.degree) <= 12


def is_del_pezzo_degree1(surface: EllipticSurfaceModel) -> bool:
    """Every bad fiber, at infinity included, of type II or I1."""
    if not is_rational_surface(surface.A, surface.B):
        return False
    ok = {"II", "I1"}
    return all(str(kt) in ok for _, kt in bad_places(surface))


class Isotriviality(str, Enum):
    NON_ISOTRIVIAL = "NonIsotrivial"
    J0 = "J0"
    J1728 = "J1728"
    TWIST_FORM = "TwistForm"


def isotriviality(surface: EllipticSurfaceModel) -> Isotriviality:
    A, B = surface.A, surface.B
    if A.is_zero():
        return Isotriviality.J0
    if B.is_zero():
        return Isotriviality.J1728
    # A^3 / B^2 constant  <=>  A^3 * lead(B)^2 == B^2 * lead(A^3)
    A3, B2 = A**3, B**2
    if A3.degree == B2.degree and A3 * B2.lead == B2 * A3.lead:
        return Isotriviality.TWIST_FORM
    return Isotriviality.NON_ISOTRIVIAL


# quartic models -----------------------------------------------------------------------

@dataclass(frozen=True)
class QuarticModel:
    """Y^2 = a4 T^4 + a3 T^3 + a2 T^2 + a1 T + a0.

    ``shift`` records the substitution T = T' + shift applied to reach this
    model from the one it was derived from (0 for an original model).
    """

    a4: Fraction
    a3: Fraction
    a2: Fraction
    a1: Fraction
    a0: Fraction
    shift: Fraction = Fraction(0)

    def __init__(self, a4: Number, a3: Number, a2: Number, a1: Number, a0: Number, shift: Number = 0):
        vals = [Fraction(c) for c in (a4, a3, a2, a1, a0, shift)]
        for name, v in zip(("a4", "a3", "a2", "a1", "a0", "shift"), vals):
            object.__setattr__(self, name, v)
        if self.a4 == 0:
            raise SingularCurve("a4 must be nonzero")

    @property
    def is_nonsingular(self) -> bool:
        P = self.poly
        return gcd(P, P.derivative()).degree == 0

    @classmethod
    def from_poly(cls, P: Poly, shift: Number = 0) -> "QuarticModel":
        if P.degree != 4:
            raise NotDegreeFour(f"degree {P.degree}")
        return cls(*(P.coeff(i) for i in (4, 3, 2, 1, 0)), shift=shift)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return (self.a4, self.a3, self.a2, self.a1, self.a0)

    @property
    def poly(self) -> Poly:
        return Poly([self.a0, self.a1, self.a2, self.a3, self.a4])

    def contains(self, T: Number, Y: Number) -> bool:
        return Fraction(Y) ** 2 == self.poly(Fraction(T))


def depress_quartic(q: QuarticModel) -> QuarticModel:
    """Kill the cubic term with T = T' - a3/(4 a4)."""
    if q.a3 == 0:
        return q
    s = -q.a3 / (4 * q.a4)
    return QuarticModel.from_poly(shift(q.poly, s), shift=q.shift + s)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


@dataclass(frozen=True)
class QuarticTransport:
    """Result of putting a depressed quartic with square leading coefficient in
    Weierstrass form S^2 + (h1/4) S = R^3 - g0 R^2 - (h0/4) R."""

    quartic: QuarticModel
    curve: WeierstrassCurve
    b: Fraction
    g0: Fraction
    h0: Fraction
    h1: Fraction

    @property
    def infinity_minus(self) -> Point:
        return Point.at(0, -self.h1 / 4)

    def transport(self, T: Number, Y: Number) -> Point:
        """Image of an affine point (T, Y) of the quartic: R = (Y/b + T^2 + g0)/2, S = T R."""
        T, Y = Fraction(T), Fraction(Y)
        if not self.quartic.contains(T, Y):
            raise ValueError(f"({T}, {Y}) is not on the quartic")
        R = (Y / self.b + T * T + self.g0) / 2
        return Point(R, T * R)


def quartic_to_weierstrass(q: QuarticModel) -> QuarticTransport:
    """∞+ goes to the identity and ∞- to (0, -h1/4)."""
    if q.a3 != 0:
        raise NotDepressed("cubic coefficient must vanish")
    if not q.is_nonsingular:
        raise SingularCurve(f"{format_poly(q.poly)} is not squarefree")
    b = _rational_sqrt(q.a4)
    if b is None:
        raise LeadingNotSquare(f"a4 = {q.a4} is not a rational square")
    g0 = q.a2 / (2 * q.a4)
    h1 = q.a1 / q.a4
    h0 = (4 * q.a4 * q.a0 - q.a2**2) / (4 * q.a4**2)
    curve = WeierstrassCurve(0, -g0, h1 / 4, -h0 / 4, 0)
    return QuarticTransport(q, curve, b, g0, h0, h1)


# sections of y^2 = x^3 + A(T) x ---------------------------------------------------------

@dataclass(frozen=True)
class SectionAnalysis:
    kind: str  # "InfiniteOrderSection", "TwoTorsionOnly", "BiquadraticConicBundle"
    depressed: Poly
    shift: Fraction
    alpha: Fraction | None = None
    beta: Fraction | None = None

    def __str__(self) -> str:
        if self.kind == "BiquadraticConicBundle":
            return f"BiquadraticConicBundle({self.alpha}, {self.beta})"
        return self.kind


def _depress_poly(A: Poly) -> tuple[Poly, Fraction]:
    s = -A.coeff(3) / (4 * A.coeff(4))
    return (shift(A, s) if s else A), s


def analyze_section_j1728(A: Poly) -> SectionAnalysis:
    """Decide which of the three section behaviours y^2 = x^3 + A(T) x has."""
    if A.degree != 4:
        raise NotDegreeFour(f"deg A = {A.degree}")
    D, s = _depress_poly(A)
    if D.coeff(1) != 0:
        return SectionAnalysis("InfiniteOrderSection", D, s)
    # even quartic a4 u^2 + a2 u + a0 in u = T^2
    roots = rational_roots(Poly([D.coeff(0), D.coeff(2), D.coeff(4)]))
    if len(roots) == 2:
        return SectionAnalysis("BiquadraticConicBundle", D, s, roots[0], roots[1])
    return SectionAnalysis("TwoTorsionOnly", D, s)


def fiber_quartic(A: Poly, x: Number) -> QuarticModel:
    """C_x : y^2 = x A(T) + x^3, i.e. the fibre of (x, y, T) -> x."""
    x = Fraction(x)
    if x == 0:
        raise SingularCurve("x = 0")
    P = A * x + x**3
    return QuarticModel.from_poly(P)


@dataclass(frozen=True)
class SectionSample:
    x: Fraction
    alpha: int
    curve: WeierstrassCurve  # integral model after scaling by alpha
    point: Point  # image of ∞- on that model
    filter: FilterResult
    torsion: TorsionResult


def admissible_x(a4: int, k: int) -> Fraction:
    """x = a4 (k / d)^2 with d = 2|a4|k + 1, a denominator prime to 2 a4."""
    return a4 * Fraction(k, 2 * abs(a4) * k + 1) ** 2


def sample_section_points(A: Poly, ks: Iterable[int] = range(1, 21)) -> list[SectionSample]:
    """For each k, transport ∞- of C_x (x = admissible_x(a4, k)) to an integral
    Weierstrass model scaled by alpha = 2 a4 d and test it."""
    D, _ = _depress_poly(A)
    if not D.is_integral():
        D = D * math.lcm(*(c.denominator for c in D.coeffs))
    a4 = int(D.lead)
    out = []
    for k in ks:
        x = admissible_x(a4, k)
        tr = quartic_to_weierstrass(fiber_quartic(D, x))
        alpha = 2 * abs(a4) * x.denominator
        E = scale_to_integral(tr.curve, alpha)
        P = scale_point(tr.infinity_minus, alpha)
        out.append(SectionSample(x, alpha, E, P, lutz_nagell_filter(E, P), torsion_order(E, P)))
    return out


# fibers ---------------------------------------------------------------------------------

def fiber_curve(surface, t: Number) -> WeierstrassCurve:
    """Integral model of the fiber at t = m/n via homogeneous evaluation."""
    t = Fraction(t)
    m, n = t.numerator, t.denominator
    if isinstance(surface, SurfaceJ0):
        d = surface.delta(m, n)
        if d == 0:
            raise SingularFiber(f"t = {t}")
        return WeierstrassCurve.short(0, d)
    if isinstance(surface, SurfaceJ1728):
        d = surface.delta(m, n)
        if d == 0:
            raise SingularFiber(f"t = {t}")
        return WeierstrassCurve.short(d, 0)
    N = surface.index
    a = eval_homogeneous(surface.A, m, n, 4 * N) if not surface.A.is_zero() else 0
    b = eval_homogeneous(surface.B, m, n, 6 * N) if not surface.B.is_zero() else 0
    if 4 * Fraction(a) ** 3 + 27 * Fraction(b) ** 2 == 0:
        raise SingularFiber(f"t = {t}")
    return WeierstrassCurve.short(a, b)
