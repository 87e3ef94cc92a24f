"""Integer arithmetic: p-adic splits, Kronecker symbols, factorization and the
delta decompositions used by the closed-form root number products.

Everything here works on Python ints, so there is no size limit beyond memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import NotPrime, ZeroInput

# Primes used for trial division.  Anything left after this stage is handed to
# Miller-Rabin and, when composite, to Pollard-rho (Brent variant).
TRIAL_BOUND = 1000

# The first 13 primes form a deterministic Miller-Rabin witness set for
# n < 3.3 * 10**24 (Sorenson and Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_EXTRA_BASES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


SMALL_PRIMES: tuple[int, ...] = tuple(_sieve(TRIAL_BOUND))
_SMALL_SET = frozenset(SMALL_PRIMES)


def is_prime(n: int) -> bool:
    """Miller-Rabin, deterministic below 3.3e24 and a strong probable-prime
    test with 25 bases above that."""
    if n < 2:
        return False
    if n <= TRIAL_BOUND:
        return n in _SMALL_SET
    for p in SMALL_PRIMES[:25]:
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < _MR_DETERMINISTIC_LIMIT else _MR_BASES + _EXTRA_BASES
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n: int) -> int:
    """Return a nontrivial factor of the odd composite n (Brent's cycle finding).

    The pseudo-random walk x -> x^2 + c is seeded deterministically, so the
    factor found for a given n is always the same.
    """
    for c in range(1, 200):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard-rho failed on {n}")  # pragma: no cover


@dataclass(frozen=True)
class FactorMultiset:
    """Prime factorization of |n| as sorted (prime, exponent) pairs."""

    pairs: tuple[tuple[int, int], ...]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def valuation(self, p: int) -> int:
        for q, e in self.pairs:
            if q == p:
                return e
        return 0

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out


def _split_composite(n: int, out: dict[int, int]) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _rho(m)
        stack.extend((d, m // d))


@lru_cache(maxsize=1 << 16)
def _factor_cached(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        _split_composite(n, out)
    return tuple(sorted(out.items()))


def factorize(n: int) -> FactorMultiset:
    """Exact factorization of |n|; ``factorize(1)`` is empty."""
    if n == 0:
        raise ZeroInput("factorize(0)")
    return FactorMultiset(_factor_cached(abs(n)))


@dataclass(frozen=True)
class PadicSplit:
    prime: int
    valuation: int
    unit: int

    def __iter__(self):
        # lets callers write ``v, u = padic_split(n, p)``
        return iter((self.valuation, self.unit))


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ZeroInput("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_split(n: int, p: int) -> PadicSplit:
    """n = p**v * u with p not dividing u; the unit keeps the sign of n."""
    if n == 0:
        raise ZeroInput("padic_split(0, p)")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return PadicSplit(p, v, n)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), defined for all integers a and n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a/n) with n odd positive
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def chi4(n: int) -> int:
    """(-1/n) for odd n > 0."""
    return 1 if n % 4 == 1 else -1


def prime_to_6(n: int) -> int:
    """|n| with all factors 2 and 3 removed."""
    n = abs(n)
    while n % 2 == 0:
        n //= 2
    while n % 3 == 0:
        n //= 3
    return n


def odd_part(n: int) -> int:
    """n with its power of 2 removed; the sign is kept."""
    if n == 0:
        raise ZeroInput("odd_part(0)")
    while n % 2 == 0:
        n //= 2
    return n


@dataclass(frozen=True)
class DeltaDecompositionJ0:
    """|delta| = 2^v2 * 3^v3 * d1 * d2^2 with d1, d2 prime to 6."""

    v2: int
    v3: int
    d1: int
    d2: int


@dataclass(frozen=True)
class DeltaDecompositionJ1728:
    """t1: primes >= 5 with odd exponent; tau2: primes >= 5 with exponent 2 mod 4."""

    v2: int
    v3: int
    t1: int
    tau2: int


def decompose_j0(delta: int) -> DeltaDecompositionJ0:
    if delta == 0:
        raise ZeroInput("decompose_j0(0)")
    fac = factorize(delta)
    d1 = d2 = 1
    for p, e in fac:
        if p < 5:
            continue
        if e % 2:
            d1 *= p**e
        else:
            d2 *= p ** (e // 2)
    return DeltaDecompositionJ0(fac.valuation(2), fac.valuation(3), d1, d2)


def decompose_j1728(delta: int) -> DeltaDecompositionJ1728:
    if delta == 0:
        raise ZeroInput("decompose_j1728(0)")
    fac = factorize(delta)
    t1 = tau2 = 1
    for p, e in fac:
        if p < 5:
            continue
        if e % 2:
            t1 *= p
        elif e % 4 == 2:
            tau2 *= p
    return DeltaDecompositionJ1728(fac.valuation(2), fac.valuation(3), t1, tau2)


def sigma_invariant(C: int, residue: int, modulus: int) -> int:
    """Number of distinct primes p with p^2 | C and p = residue mod modulus."""
    if C == 0:
        raise ZeroInput("sigma_invariant(0, ...)")
    if modulus not in (3, 4):
        raise ValueError("modulus must be 3 or 4")
    return sum(1 for p, e in factorize(C) if e >= 2 and p % modulus == residue % modulus)
