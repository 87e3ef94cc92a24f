"""Exact p-adic images of the local root-number factors along a family.

For delta = C * F(m, n) with F = 3A^2 m^6 + B^2 n^6 (j = 0) or
F = A^2 m^4 + B^2 n^4 (j = 1728), a prime p >= 5 not dividing 6ABC that
divides F has (-3/p) = 1, resp. (-1/p) = 1.  Quadratic reciprocity then turns
the global root number into a finite product of locally constant functions

    W(delta) = -prod_{p in {2, 3} ∪ S} g_p(delta),   S = {p >= 5 : p | ABC},

with
    j = 0:     g_2 = W_2 (-1/|delta|'),  g_3 = W_3 (-1)^{v_3},  g_p = W_p (-1/p)^{v_p}
    j = 1728:  g_2 = W_2 (-2/|delta|'),  g_3 = W_3,             g_p = W_p (-2/p)^{v_p}

where |delta|' is the odd part of |delta|.  By weak approximation the root
number is constant on P^1(Q) exactly when every g_p is constant on P^1(Q_p),
which is decided here by refining p-adic balls until F is constant modulo
1 + p^k on each ball, or Hensel's lemma puts a root inside it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .arith import chi4, factorize, kronecker, odd_part, valuation
from .local_root import Family, w2_j0, w2_j1728, w3_j0, w3_j1728, wp_ge5

# precision needed to pin the class of delta at p: units mod 16, mod 9, mod p
_PRECISION = {2: 4, 3: 2}


def g_factor(delta: int, p: int, family: Family | str) -> int:
    """The locally constant factor g_p described in the module docstring."""
    family = Family(family)
    if p == 2:
        odd = odd_part(abs(delta))
        if family is Family.J0:
            return w2_j0(delta) * chi4(odd)
        return w2_j1728(delta) * kronecker(-2, odd)
    if p == 3:
        if family is Family.J0:
            return w3_j0(delta) * (-1) ** valuation(delta, 3)
        return w3_j1728(delta)
    v = valuation(delta, p)
    if family is Family.J0:
        return wp_ge5(p, v, family) * chi4(p) ** v
    return wp_ge5(p, v, family) * kronecker(-2, p) ** v


def split_root_number(delta: int, family: Family | str, primes: Sequence[int]) -> int:
    """-prod g_p over ``primes``; equals the root number whenever ``primes``
    contains 2, 3 and every p >= 5 at which the identity needs a correction."""
    out = -1
    for p in primes:
        out *= g_factor(delta, p, family)
    return out


def _vp(n: int, p: int) -> int:
    return valuation(n, p) if n else 1 << 30


def _taylor(coeffs: Sequence[int], a: int) -> list[int]:
    """Coefficients of f(a + z) in z (repeated synthetic division)."""
    c = list(coeffs)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += a * c[j + 1]
    return c


def full_image(p: int, sign: int, family: Family | str) -> frozenset[int]:
    """Values of g_p over every p-adic class of the given real sign."""
    units = {2: range(1, 16, 2), 3: (1, 2, 4, 5, 7, 8)}.get(p, (1,))
    return frozenset(g_factor(sign * p**v * w, p, family) for v in range(12) for w in units)


def _chart_image(
    p: int,
    f: Sequence[int],
    start: tuple[int, int],
    C: int,
    g: Callable[[int], int],
    full: frozenset[int],
    img: set[int],
) -> None:
    k = _PRECISION.get(p, 1)
    stack = [start]
    while stack and img != full:
        a, j = stack.pop()
        c = _taylor(f, a)
        w = _vp(c[0], p)
        if all(_vp(ci, p) + i * j >= w + k for i, ci in enumerate(c) if i):
            img.add(g(C * c[0]))
            continue
        v1 = _vp(c[1], p) if len(c) > 1 else 1 << 30
        if c[1] and w > 2 * v1 and w - v1 >= j:
            # a simple root lies in the ball; near it F takes every class
            img |= full
            return
        step = p**j
        stack.extend((a + t * step, j + 1) for t in range(p))


def local_image(p: int, form: Sequence[int], C: int, family: Family | str) -> frozenset[int]:
    """Image of g_p(C * F(m, n)) over primitive (m, n) in Z_p^2.

    ``form`` holds the coefficients of F(x, 1) from the constant term up;
    F must be squarefree with no zero on P^1(R), so C * F has the sign of C.
    """
    family = Family(family)
    sign = 1 if C > 0 else -1
    full = full_image(p, sign, family)
    if len(full) == 1:
        return full
    g = lambda d: g_factor(d, p, family)  # noqa: E731
    img: set[int] = set()
    f = list(form)
    _chart_image(p, f, (0, 0), C, g, full, img)            # x in Z_p
    _chart_image(p, f[::-1], (0, 1), C, g, full, img)      # (1 : y), y in pZ_p
    return frozenset(img)


@dataclass(frozen=True)
class LocalAnalysis:
    family: Family
    images: tuple[tuple[int, frozenset[int]], ...]

    @property
    def constant(self) -> bool:
        return all(len(img) == 1 for _, img in self.images)

    @property
    def sign(self) -> int | None:
        if not self.constant:
            return None
        out = -1
        for _, img in self.images:
            out *= next(iter(img))
        return out

    def varying_primes(self) -> list[int]:
        return [p for p, img in self.images if len(img) > 1]

    def trail(self) -> list[str]:
        out = []
        for p, img in self.images:
            vals = "/".join(f"{s:+d}" for s in sorted(img, reverse=True))
            out.append(f"g_{p} ∈ {{{vals}}}")
        return out


def family_form(A: int, B: int, family: Family | str) -> list[int]:
    family = Family(family)
    if family is Family.J0:
        return [B * B, 0, 0, 0, 0, 0, 3 * A * A]
    return [B * B, 0, 0, 0, A * A]


def relevant_primes(A: int, B: int, C: int) -> list[int]:
    extra = {p for n in (A, B, C) for p, _ in factorize(n) if p >= 5}
    return [2, 3, *sorted(extra)]


def analyze(A: int, B: int, C: int, family: Family | str) -> LocalAnalysis:
    """Per-prime images for delta = C (3A^2 m^6 + B^2 n^6) or C (A^2 m^4 + B^2 n^4)."""
    family = Family(family)
    form = family_form(A, B, family)
    images = tuple((p, local_image(p, form, C, family)) for p in relevant_primes(A, B, C))
    return LocalAnalysis(family, images)
