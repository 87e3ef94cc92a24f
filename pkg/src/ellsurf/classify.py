"""Decide whether the fiber root number of an isotrivial family is constant.

Two methods are offered.  ``"local"`` (the default) computes the exact image
of every local factor over P^1(Q_p) and is sound by construction.
``"literal"`` reads the lemma clause tables literally; it exists so that the
tables can be audited against the scanner, and is known to disagree with the
truth on several inputs (see the conformance report).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from . import clauses as cl
from .arith import sigma_invariant
from .errors import NoCMRepresentation, NotCoprime, ZeroInput
from .local_image import analyze
from .local_root import Family

METHODS = ("local", "literal")


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


@dataclass(frozen=True)
class SurfaceJ0:
    """y^2 = x^3 + a T^6 + b, with a/C = 3A^2 and b/C = B^2 when possible.

    ``swapped`` is set when the representation only exists after T -> 1/T,
    which exchanges a and b without changing the set of fibers.
    """

    a: int
    b: int
    C: int = field(init=False)
    A: int | None = field(init=False, default=None)
    B: int | None = field(init=False, default=None)
    swapped: bool = field(init=False, default=False)

    def __post_init__(self) -> None:
        if self.a == 0 or self.b == 0:
            raise ZeroInput("a and b must be nonzero")
        object.__setattr__(self, "C", math.gcd(self.a, self.b))
        rep = find_j0_representation(self.a, self.b)
        if rep is not None:
            A, B, C, swapped = rep
            object.__setattr__(self, "A", A)
            object.__setattr__(self, "B", B)
            object.__setattr__(self, "C", C)
            object.__setattr__(self, "swapped", swapped)

    @property
    def has_representation(self) -> bool:
        return self.A is not None

    def delta(self, m: int, n: int) -> int:
        return self.a * m**6 + self.b * n**6

    family = Family.J0


def find_j0_representation(a: int, b: int) -> tuple[int, int, int, bool] | None:
    """(A, B, C, swapped) with a = 3A^2 C and b = B^2 C, trying both orientations."""
    if (a > 0) != (b > 0):
        return None
    g = math.gcd(a, b)
    s = 1 if a > 0 else -1
    for swapped, (x, y) in ((False, (a, b)), (True, (b, a))):
        for c in (g, g // 3 if g % 3 == 0 else None):
            if c is None:
                continue
            C = s * c
            if x % (3 * C) or y % C:
                continue
            A, B = _isqrt_exact(x // (3 * C)), _isqrt_exact(y // C)
            if A and B and math.gcd(A, B) == 1:
                return A, B, C, swapped
    return None


@dataclass(frozen=True)
class SurfaceJ1728:
    """y^2 = x^3 + C (A^2 T^4 + B^2) x with gcd(A, B) = 1."""

    A: int
    B: int
    C: int

    def __post_init__(self) -> None:
        if 0 in (self.A, self.B, self.C):
            raise ZeroInput("A, B, C must be nonzero")
        if math.gcd(self.A, self.B) != 1:
            raise NotCoprime(f"gcd({self.A}, {self.B}) != 1")

    def delta(self, m: int, n: int) -> int:
        return self.C * (self.A**2 * m**4 + self.B**2 * n**4)

    family = Family.J1728


@dataclass(frozen=True)
class ComponentVerdict:
    constant: bool
    value: int | None
    clauses: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"Constant({self.value:+d})" if self.constant else "Varies"


@dataclass(frozen=True)
class ConstancyVerdict:
    constant: bool
    sign: int | None
    trail: tuple[str, ...] = ()
    reason: str = ""
    method: str = "local"

    def __post_init__(self) -> None:
        if self.constant and not self.trail:
            raise ValueError("a constant verdict needs a rule trail")

    @property
    def label(self) -> str:
        return f"Constant({self.sign:+d})" if self.constant else "Varies"

    def __str__(self) -> str:
        return self.label

    def to_dict(self) -> dict:
        out: dict = {"verdict": "constant" if self.constant else "varies"}
        if self.constant:
            out["sign"] = self.sign
        else:
            out["reason"] = self.reason
        out["method"] = self.method
        out["trail"] = list(self.trail)
        return out


def _component(table: Sequence[cl.Clause], feats: dict) -> ComponentVerdict:
    hit = cl.lookup(table, feats)
    return ComponentVerdict(hit.constant, hit.value, tuple(f"{c.lemma}:{c.label}" for c in hit.clauses))


def _need_rep(surface: SurfaceJ0) -> tuple[int, int, int]:
    if not surface.has_representation:
        raise NoCMRepresentation(f"no (A, B, C) with a = 3A^2C, b = B^2C for ({surface.a}, {surface.b})")
    return surface.A, surface.B, surface.C


def classify_w2_j0(surface: SurfaceJ0, table: Sequence[cl.Clause] = cl.J0_W2) -> ComponentVerdict:
    A, B, C = _need_rep(surface)
    return _component(table, cl.features_j0_w2(A, B, C))


def classify_w3_j0(surface: SurfaceJ0, table: Sequence[cl.Clause] = cl.J0_W3, reading: str = "v3") -> ComponentVerdict:
    A, B, C = _need_rep(surface)
    return _component(table, cl.features_j0_w3(A, B, C, reading))


def classify_w2_j1728(surface: SurfaceJ1728, table: Sequence[cl.Clause] = cl.J1728_W2) -> ComponentVerdict:
    return _component(table, cl.features_j1728_w2(surface.A, surface.B, surface.C))


def classify_w3_j1728(surface: SurfaceJ1728, table: Sequence[cl.Clause] = cl.J1728_W3) -> ComponentVerdict:
    return _component(table, cl.features_j1728_w3(surface.A, surface.B, surface.C))


def _combine(w2: ComponentVerdict, w3: ComponentVerdict, sigma: int, sigma_note: str) -> ConstancyVerdict:
    trail = (*w2.clauses, *w3.clauses, f"{sigma_note}={sigma}")
    if not w2.constant:
        return ConstancyVerdict(False, None, trail, "no w2 clause fires", "literal")
    if not w3.constant:
        return ConstancyVerdict(False, None, trail, "no w3 clause fires", "literal")
    return ConstancyVerdict(True, -w2.value * w3.value * (-1) ** sigma, trail, "", "literal")


def _local(A: int, B: int, C: int, family: Family) -> ConstancyVerdict:
    an = analyze(A, B, C, family)
    trail = tuple(an.trail())
    if an.constant:
        return ConstancyVerdict(True, an.sign, trail, "", "local")
    ps = ", ".join(str(p) for p in an.varying_primes())
    return ConstancyVerdict(False, None, trail, f"local factor takes both signs at p = {ps}", "local")


def classify_j0(
    a: int,
    b: int,
    method: str = "local",
    *,
    reading: str = "v3",
    tables: dict[str, Sequence[cl.Clause]] | None = None,
) -> ConstancyVerdict:
    """Constancy of W along y^2 = x^3 + a T^6 + b."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    surface = SurfaceJ0(a, b)
    if not surface.has_representation:
        return ConstancyVerdict(False, None, (), "a/C = 3A^2, b/C = B^2 has no solution", method)
    A, B, C = surface.A, surface.B, surface.C
    if method == "local":
        return _local(A, B, C, Family.J0)
    tables = tables or {}
    w2 = classify_w2_j0(surface, tables.get("j0_w2", cl.J0_W2))
    w3 = classify_w3_j0(surface, tables.get("j0_w3", cl.J0_W3), reading)
    return _combine(w2, w3, sigma_invariant(C, 2, 3), "sigma(C; 2 mod 3)")


def classify_j1728(
    A: int,
    B: int,
    C: int,
    method: str = "local",
    *,
    tables: dict[str, Sequence[cl.Clause]] | None = None,
) -> ConstancyVerdict:
    """Constancy of W along y^2 = x^3 + C (A^2 T^4 + B^2) x."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    surface = SurfaceJ1728(A, B, C)
    if method == "local":
        return _local(A, B, C, Family.J1728)
    tables = tables or {}
    w2 = classify_w2_j1728(surface, tables.get("j1728_w2", cl.J1728_W2))
    w3 = classify_w3_j1728(surface, tables.get("j1728_w3", cl.J1728_W3))
    return _combine(w2, w3, sigma_invariant(C, 3, 4), "sigma(C; 3 mod 4)")


def classify(surface: SurfaceJ0 | SurfaceJ1728, method: str = "local", **kw) -> ConstancyVerdict:
    if isinstance(surface, SurfaceJ0):
        return classify_j0(surface.a, surface.b, method, **kw)
    return classify_j1728(surface.A, surface.B, surface.C, method, **kw)
