"""Dense univariate polynomials over Q in the variable T.

Coefficients are stored low degree first as Fractions.  Integer polynomials
are just polynomials whose coefficients happen to have denominator 1.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .arith import factorize
from .errors import BothZero, BothZeroPolys, PolySyntaxError, SingularSurface, ZeroPoly

Number = Union[int, Fraction]


def _trim(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    # construction ---------------------------------------------------------
    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls([c])

    @classmethod
    def T(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, c: Number, k: int) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return parse_poly(text)

    # basic queries --------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integral coefficients")
        return [int(c) for c in self.coeffs]

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "Poly | Number") -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly | Number") -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: Number) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other: "Poly | Number") -> "Poly":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        lead = other.lead
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            quot[i - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    __divmod__ = divmod

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def content(self) -> Fraction:
        """Positive rational c with self / c primitive in Z[T]."""
        if self.is_zero():
            return Fraction(0)
        den = math.lcm(*(c.denominator for c in self.coeffs))
        num = math.gcd(*(int(c * den) for c in self.coeffs))
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        """Integer primitive polynomial with positive leading coefficient."""
        if self.is_zero():
            return self
        p = self * (1 / self.content())
        return -p if p.lead < 0 else p

    def compose_shift(self, b: Number) -> "Poly":
        return shift(self, b)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


def _as_poly(x: "Poly | Number") -> Poly:
    return x if isinstance(x, Poly) else Poly([x])


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# textual form ---------------------------------------------------------------

def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly, var: str = "T") -> str:
    """Canonical text, highest degree first: ``27*T^6 + 16``, ``-T^2 + 1/2*T``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = _fmt_coeff(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


_TERM = re.compile(
    r"""^(?P<coef>\d+(?:/\d+)?)?      # optional coefficient
        (?:\*?(?P<var>[TtXxuU])(?:\^(?P<exp>\d+))?)?$""",
    re.VERBOSE,
)


def parse_poly(text: str) -> Poly:
    """Parse sums of terms ``c*T^k``; whitespace is ignored, ``*`` optional."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise PolySyntaxError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    terms = re.findall(r"[+-][^+-]*", s)
    if "".join(terms) != s:
        raise PolySyntaxError(f"cannot parse polynomial {text!r}")
    out: dict[int, Fraction] = {}
    var_seen: set[str] = set()
    for term in terms:
        sign, body = term[0], term[1:]
        m = _TERM.match(body)
        if not body or not m or (m.group("coef") is None and m.group("var") is None):
            raise PolySyntaxError(f"bad term {term!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("var"):
            var_seen.add(m.group("var").upper())
            k = int(m.group("exp")) if m.group("exp") else 1
        else:
            if m.group("exp"):
                raise PolySyntaxError(f"bad term {term!r}")
            k = 0
        out[k] = out.get(k, Fraction(0)) + (coef if sign == "+" else -coef)
    if len(var_seen) > 1:
        raise PolySyntaxError(f"mixed variables in {text!r}")
    n = max(out) + 1
    return Poly(out.get(i, 0) for i in range(n))


# operations ------------------------------------------------------------------

def eval_homogeneous(P: Poly, m: int, n: int, D: int | None = None) -> "int | Fraction":
    """n^D * P(m/n) computed without division; an int for integer P."""
    if m == 0 and n == 0:
        raise BothZero("(m, n) = (0, 0)")
    if D is None:
        D = P.degree
    if P.degree > D:
        raise ValueError(f"degree {P.degree} exceeds bound {D}")
    total = Fraction(0)
    for k, c in enumerate(P.coeffs):
        if c:
            total += c * m**k * n ** (D - k)
    return int(total) if total.denominator == 1 else total


def shift(P: Poly, b: Number) -> Poly:
    """Q with Q(T) = P(T + b), by Horner in the shifted variable."""
    b = Fraction(b)
    out = Poly()
    lin = Poly([b, 1])
    for c in reversed(P.coeffs):
        out = out * lin + c
    return out


def discriminant_cubic(A: Poly, B: Poly, *, minus: bool = False, scaled: bool = False) -> Poly:
    """4A^3 + 27B^2, or 4A^3 - 27B^2 with ``minus``; ``scaled`` multiplies by -16."""
    if A.is_zero() and B.is_zero():
        raise BothZeroPolys("A = B = 0")
    d = 4 * A**3 + (-27 if minus else 27) * B**2
    return d * -16 if scaled else d


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """input = content * prod(factor^mult), factors primitive and pairwise coprime."""

    content: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def product(self) -> Poly:
        out = Poly([self.content])
        for f, e in self.factors:
            out = out * f**e
        return out


def squarefree_decompose(P: Poly) -> SquarefreeDecomposition:
    """Yun's algorithm over Q."""
    if P.is_zero():
        raise ZeroPoly("squarefree_decompose(0)")
    factors: list[tuple[Poly, int]] = []
    if P.degree > 0:
        a = P.monic()
        b = a.derivative()
        c = gcd(a, b)
        w = a // c
        y = b // c
        i = 1
        while w.degree > 0:
            z = y - w.derivative()
            g = gcd(w, z)
            if g.degree > 0:
                factors.append((g.primitive(), i))
            w = w // g
            y = z // g
            i += 1
    rest = Poly([1])
    for f, e in factors:
        rest = rest * f**e
    content = P.lead / rest.lead
    return SquarefreeDecomposition(content, tuple(factors))


def radical(P: Poly) -> Poly:
    """Product of the distinct irreducible factors, primitive."""
    out = Poly([1])
    for f, _ in squarefree_decompose(P).factors:
        out = out * f
    return out.primitive()


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def rational_roots(P: Poly) -> list[Fraction]:
    """Rational roots listed with multiplicity, ascending."""
    if P.is_zero():
        raise ZeroPoly("rational_roots(0)")
    roots: list[Fraction] = []
    Q = P.primitive() if P.degree > 0 else P
    while Q.degree > 0 and Q.coeff(0) == 0:
        roots.append(Fraction(0))
        Q = Q // Poly.T()
    if Q.degree <= 0:
        return sorted(roots)
    cs = Q.int_coeffs()
    cands: set[Fraction] = set()
    for p in _divisors(abs(cs[0])):
        for q in _divisors(abs(cs[-1])):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    for r in sorted(cands):
        while Q.degree > 0 and Q(r) == 0:
            roots.append(r)
            Q = Q // Poly([-r, 1])
    return sorted(roots)


@dataclass(frozen=True)
class MultiplicativePart:
    """M as a polynomial in T; ``at_infinity`` marks the place 1/T."""

    poly: Poly
    at_infinity: bool

    @property
    def homogeneous_degree(self) -> int:
        return self.poly.degree + int(self.at_infinity)

    def __str__(self) -> str:
        s = format_poly(self.poly)
        return f"{s} (times V)" if self.at_infinity else s


def multiplicative_part(A: Poly, B: Poly, *, bound_a: int = 4, bound_b: int = 6) -> MultiplicativePart:
    """Product of the places dividing Delta but not A (homogenized with (4, 6, 12))."""
    delta = discriminant_cubic(A, B)
    if delta.is_zero():
        raise SingularSurface("discriminant vanishes identically")
    R = radical(delta)
    M = R // gcd(R, A) if not A.is_zero() else Poly([1])
    M = M.primitive()
    v_inf_delta = max(12 - delta.degree, 0)
    v_inf_a = (bound_a - A.degree) if not A.is_zero() else None
    at_inf = v_inf_delta > 0 and v_inf_a == 0
    return MultiplicativePart(M, at_inf)


@dataclass(frozen=True)
class HelfgottShape:
    unconditional: bool
    label: str


def helfgott_shape(M: "Poly | MultiplicativePart") -> HelfgottShape:
    """Decide whether the multiplicative part has one of the shapes for which
    the root-number variation results hold without conjectures."""
    mp = M if isinstance(M, MultiplicativePart) else MultiplicativePart(M, False)
    if mp.poly.is_zero():
        raise ZeroPoly("helfgott_shape(0)")
    d = mp.homogeneous_degree
    if d == 0:
        return HelfgottShape(True, "M empty")
    rad = radical(mp.poly) if mp.poly.degree > 0 else Poly([1])
    linear = len(set(rational_roots(rad))) + int(mp.at_infinity) if rad.degree > 0 else int(mp.at_infinity)
    if linear == d:
        return HelfgottShape(True, "all places rational")
    if d == 3 and linear == 1:
        label = "1/T × quadratic" if mp.at_infinity else "linear × quadratic"
        return HelfgottShape(True, label)
    if d <= 3:
        return HelfgottShape(True, "degree 3" if d == 3 else "degree at most 3")
    return HelfgottShape(False, "Conditional")
