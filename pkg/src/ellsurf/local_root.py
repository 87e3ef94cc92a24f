"""Local and global root numbers of y^2 = x^3 + t (j = 0) and y^2 = x^3 + t x
(j = 1728) for a nonzero integer t.

The tables at 2 and 3 are the classical ones for these two CM families; the
primes p >= 5 follow Rohrlich's classification specialised to the families.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .arith import (
    decompose_j0,
    decompose_j1728,
    factorize,
    is_prime,
    kronecker,
    padic_split,
)
from .errors import BadPrime, ZeroInput


class Family(str, Enum):
    J0 = "j0"
    J1728 = "j1728"


class Mode(str, Enum):
    PER_PRIME = "PerPrime"
    PAPER_CLOSED_FORM = "PaperClosedForm"


@dataclass(frozen=True)
class LocalFactor:
    place: str  # "2", "3", "5", ..., "inf", or a closed-form symbol name
    sign: int
    rule: str


@dataclass(frozen=True)
class LocalTrace:
    sign: int
    factors: tuple[LocalFactor, ...] = field(default_factory=tuple)

    def product(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.sign
        return out


W_INFINITY = -1


def _nonzero(t: int) -> None:
    if t == 0:
        raise ZeroInput("t must be nonzero")


# j = 0 ---------------------------------------------------------------------

def w2_j0_rule(t: int) -> tuple[int, str]:
    _nonzero(t)
    v, u = padic_split(t, 2)
    r = v % 6
    if r in (0, 2):
        return -1, f"v2={v}≡{r} mod 6"
    if u % 4 == 3:
        return -1, f"v2={v}≡{r} mod 6, t2≡3 mod 4"
    return 1, f"v2={v}≡{r} mod 6, t2≡1 mod 4"


def w3_j0_rule(t: int) -> tuple[int, str]:
    _nonzero(t)
    v, u = padic_split(t, 3)
    r = v % 6
    if r in (1, 2) and u % 3 == 1:
        return -1, f"v3≡{r} mod 6, t3≡1 mod 3"
    if r in (4, 5) and u % 3 == 2:
        return -1, f"v3≡{r} mod 6, t3≡2 mod 3"
    if r == 0 and u % 9 in (5, 7):
        return -1, f"v3≡0 mod 6, t3≡{u % 9} mod 9"
    if r == 3 and u % 9 in (2, 4):
        return -1, f"v3≡3 mod 6, t3≡{u % 9} mod 9"
    return 1, f"v3≡{r} mod 6, t3≡{u % 9} mod 9 (otherwise)"


def w2_j0(t: int) -> int:
    return w2_j0_rule(t)[0]


def w3_j0(t: int) -> int:
    return w3_j0_rule(t)[0]


# j = 1728 ------------------------------------------------------------------

# Residues t2 mod 8 giving W2 = -1 when v2(t) is odd.  The printed table uses
# {1, 3} for both odd classes; that is right for v2 = 1 mod 4 but for
# v2 = 3 mod 4 the correct residues are {5, 7} (e.g. y^2 = x^3 + 8x has
# W = -1 and the point (1, 3) of infinite order).
_W2_1728_ODD = {1: (1, 3), 3: (5, 7)}
_W2_1728_ODD_PRINTED = {1: (1, 3), 3: (1, 3)}


def w2_j1728_rule(t: int, table: str = "corrected") -> tuple[int, str]:
    """``table="printed"`` reproduces the table exactly as printed."""
    _nonzero(t)
    v, u = padic_split(t, 2)
    r = v % 4
    if r % 2:
        odd = _W2_1728_ODD if table == "corrected" else _W2_1728_ODD_PRINTED
        if u % 8 in odd[r]:
            return -1, f"v2≡{r} mod 4, t2≡{u % 8} mod 8"
        return 1, f"v2≡{r} mod 4, t2≡{u % 8} mod 8 (otherwise)"
    bad = (1, 5, 9, 11, 13, 15) if r == 0 else (1, 3, 5, 7, 11, 15)
    if u % 16 in bad:
        return -1, f"v2≡{r} mod 4, t2≡{u % 16} mod 16"
    return 1, f"v2≡{r} mod 4, t2≡{u % 16} mod 16 (otherwise)"


def w3_j1728_rule(t: int) -> tuple[int, str]:
    _nonzero(t)
    v = padic_split(t, 3).valuation
    if v % 4 == 2:
        return -1, f"v3={v}≡2 mod 4"
    return 1, f"v3={v}≢2 mod 4"


def w2_j1728(t: int, table: str = "corrected") -> int:
    return w2_j1728_rule(t, table)[0]


def w3_j1728(t: int) -> int:
    return w3_j1728_rule(t)[0]


# p >= 5 --------------------------------------------------------------------

def wp_ge5_rule(p: int, v: int, family: Family | str) -> tuple[int, str]:
    if p < 5 or not is_prime(p):
        raise BadPrime(f"{p} is not a prime >= 5")
    if v < 0:
        raise ValueError("valuation must be nonnegative")
    family = Family(family)
    if family is Family.J0:
        r = v % 6
        if r == 0:
            return 1, "v≡0 mod 6"
        if r % 2:
            return kronecker(-1, p), f"v≡{r} mod 6: (-1/p)"
        return kronecker(-3, p), f"v≡{r} mod 6: (-3/p)"
    r = v % 4
    if r == 0:
        return 1, "v≡0 mod 4"
    if r % 2:
        return kronecker(-2, p), f"v≡{r} mod 4: (-2/p)"
    return kronecker(-1, p), "v≡2 mod 4: (-1/p)"


def wp_ge5(p: int, v: int, family: Family | str) -> int:
    return wp_ge5_rule(p, v, family)[0]


# global --------------------------------------------------------------------

def _per_prime(delta: int, family: Family, w2_table: str) -> LocalTrace:
    if family is Family.J0:
        s2, r2 = w2_j0_rule(delta)
        s3, r3 = w3_j0_rule(delta)
    else:
        s2, r2 = w2_j1728_rule(delta, w2_table)
        s3, r3 = w3_j1728_rule(delta)
    factors = [LocalFactor("inf", W_INFINITY, "W_inf = -1"), LocalFactor("2", s2, r2), LocalFactor("3", s3, r3)]
    for p, e in factorize(delta):
        if p >= 5:
            s, r = wp_ge5_rule(p, e, family)
            factors.append(LocalFactor(str(p), s, f"v={e}, {r}"))
    sign = 1
    for f in factors:
        sign *= f.sign
    return LocalTrace(sign, tuple(factors))


def global_root_j0(delta: int, mode: Mode | str = Mode.PER_PRIME) -> LocalTrace:
    """Root number of y^2 = x^3 + delta with its local trace."""
    _nonzero(delta)
    if Mode(mode) is Mode.PER_PRIME:
        return _per_prime(delta, Family.J0, "corrected")
    d = decompose_j0(delta)
    factors = (
        LocalFactor("inf", W_INFINITY, "W_inf = -1"),
        LocalFactor("2", *w2_j0_rule(delta)),
        LocalFactor("3", *w3_j0_rule(delta)),
        LocalFactor("d1", kronecker(-1, d.d1), f"(-1/d1), d1={d.d1}"),
        LocalFactor("d2", kronecker(-3, d.d2), f"(-3/d2), d2={d.d2}"),
    )
    sign = 1
    for f in factors:
        sign *= f.sign
    return LocalTrace(sign, factors)


def global_root_j1728(delta: int, mode: Mode | str = Mode.PER_PRIME, *, w2_table: str = "corrected") -> LocalTrace:
    """Root number of y^2 = x^3 + delta x with its local trace."""
    _nonzero(delta)
    if Mode(mode) is Mode.PER_PRIME:
        return _per_prime(delta, Family.J1728, w2_table)
    d = decompose_j1728(delta)
    factors = (
        LocalFactor("inf", W_INFINITY, "W_inf = -1"),
        LocalFactor("2", *w2_j1728_rule(delta, w2_table)),
        LocalFactor("3", *w3_j1728_rule(delta)),
        LocalFactor("t1", kronecker(-2, d.t1), f"(-2/t1), t1={d.t1}"),
        LocalFactor("tau2", kronecker(-1, d.tau2), f"(-1/tau2), tau2={d.tau2}"),
    )
    sign = 1
    for f in factors:
        sign *= f.sign
    return LocalTrace(sign, factors)


def global_root(delta: int, family: Family | str, mode: Mode | str = Mode.PER_PRIME) -> LocalTrace:
    if Family(family) is Family.J0:
        return global_root_j0(delta, mode)
    return global_root_j1728(delta, mode)


def root_number(delta: int, family: Family | str) -> int:
    """Just the sign, PerPrime mode."""
    return global_root(delta, family).sign
