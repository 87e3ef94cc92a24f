import math
import random

import pytest
from hypothesis import given, strategies as st

from ellsurf.arith import (
    _factor_cached,
    chi4,
    decompose_j0,
    decompose_j1728,
    factorize,
    is_prime,
    kronecker,
    odd_part,
    padic_split,
    sigma_invariant,
)
from ellsurf.errors import NotPrime, ZeroInput

nonzero = st.integers(-10**12, 10**12).filter(bool)


@pytest.mark.parametrize("n,p,expected", [(12, 2, (2, 3)), (39, 3, (1, 13)), (-16, 2, (4, -1))])
def test_padic_split_examples(n, p, expected):
    assert tuple(padic_split(n, p)) == expected


def test_padic_split_errors():
    with pytest.raises(ZeroInput):
        padic_split(0, 2)
    with pytest.raises(NotPrime):
        padic_split(12, 4)


@given(nonzero, st.sampled_from([2, 3, 5, 7, 11, 101]))
def test_padic_split_reconstructs(n, p):
    v, u = padic_split(n, p)
    assert p**v * u == n and u % p != 0


@pytest.mark.parametrize("a,n,expected", [(-1, 5, 1), (-3, 7, 1), (-2, 5, -1)])
def test_kronecker_examples(a, n, expected):
    assert kronecker(a, n) == expected


def _legendre_by_squares(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if a in {x * x % p for x in range(1, p)} else -1


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 97])
def test_kronecker_matches_square_enumeration(p):
    for a in range(-2 * p, 2 * p):
        assert kronecker(a, p) == _legendre_by_squares(a, p)


@given(st.integers(-500, 500), st.integers(-500, 500), st.integers(-500, 500).filter(bool))
def test_kronecker_multiplicative_in_a(a, b, n):
    assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)


@given(st.integers(-500, 500), st.integers(-500, 500).filter(bool), st.integers(-500, 500).filter(bool))
def test_kronecker_multiplicative_in_n(a, m, n):
    assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


@given(st.integers(-10**6, 10**6), st.integers(0, 5000))
def test_kronecker_periodic_for_odd_n(a, k):
    n = 2 * k + 1
    assert kronecker(a, n) == kronecker(a % (4 * n), n)


def test_kronecker_against_pari(pari):
    rng = random.Random(3)
    for _ in range(2000):
        a, n = rng.randint(-10**9, 10**9), rng.randint(-10**9, 10**9)
        assert kronecker(a, n) == int(pari.kronecker(a, n))


@pytest.mark.parametrize("n,expected", [(39, {3: 1, 13: 1}), (1, {}), (784, {2: 4, 7: 2})])
def test_factorize_examples(n, expected):
    assert factorize(n).as_dict() == expected


def test_factorize_zero():
    with pytest.raises(ZeroInput):
        factorize(0)


def _spf_sieve(limit):
    spf = list(range(limit + 1))
    for i in range(2, math.isqrt(limit) + 1):
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


@pytest.mark.slow
def test_factorize_exhaustive_to_a_million():
    limit = 10**6
    spf = _spf_sieve(limit)
    raw = _factor_cached.__wrapped__
    for n in range(2, limit + 1):
        expect: dict[int, int] = {}
        m = n
        while m > 1:
            p = spf[m]
            expect[p] = expect.get(p, 0) + 1
            m //= p
        assert dict(raw(n)) == expect, n


@given(st.integers(2, 2**80))
def test_factorize_reconstructs_large(n):
    fac = factorize(n)
    assert fac.value() == n
    assert all(is_prime(p) for p, _ in fac)


def test_factorize_semiprimes_of_large_primes():
    p, q = 1_000_000_007, 998_244_353
    assert factorize(p * q).as_dict() == {q: 1, p: 1}
    assert factorize(p**3 * 12).as_dict() == {2: 2, 3: 1, p: 3}


def test_is_prime_against_pari(pari):
    rng = random.Random(5)
    for _ in range(3000):
        n = rng.randint(1, 10**15)
        assert is_prime(n) == bool(pari.isprime(n))
    for n in (561, 1105, 3215031751, 3825123056546413051):  # Carmichael / strong pseudoprimes
        assert not is_prime(n)


def test_decompose_examples():
    d = decompose_j0(2 * 9 * 125 * 49)
    assert (d.v2, d.v3, d.d1, d.d2) == (1, 2, 125, 7)
    assert tuple(vars(decompose_j0(1)).values()) == (0, 0, 1, 1)
    assert tuple(vars(decompose_j0(45)).values()) == (0, 2, 5, 1)
    assert tuple(vars(decompose_j1728(125 * 49)).values()) == (0, 0, 5, 7)
    assert tuple(vars(decompose_j1728(48)).values()) == (4, 1, 1, 1)
    assert tuple(vars(decompose_j1728(625)).values()) == (0, 0, 1, 1)


@given(nonzero)
def test_decompose_j0_reconstructs(delta):
    d = decompose_j0(delta)
    assert 2**d.v2 * 3**d.v3 * d.d1 * d.d2**2 == abs(delta)


@given(nonzero)
def test_d1_character_identity(delta):
    d = decompose_j0(delta)
    v3 = padic_split(delta, 3).valuation
    assert kronecker(-1, d.d1) == kronecker(-1, odd_part(abs(delta))) * (-1) ** v3


def test_sigma_examples():
    assert sigma_invariant(39, 2, 3) == 0
    assert sigma_invariant(25, 2, 3) == 1
    assert sigma_invariant(49, 3, 4) == 1
    assert sigma_invariant(5 * 11**2 * 17**3, 2, 3) == 2


def test_chi4():
    assert [chi4(n) for n in (1, 3, 5, 7)] == [1, -1, 1, -1]
