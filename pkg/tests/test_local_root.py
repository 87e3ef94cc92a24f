import random

import pytest
from hypothesis import given, strategies as st

from ellsurf.arith import factorize
from ellsurf.errors import BadPrime, ZeroInput
from ellsurf.local_root import (
    Family,
    Mode,
    global_root,
    global_root_j0,
    global_root_j1728,
    root_number,
    w2_j0,
    w2_j1728,
    w3_j0,
    w3_j1728,
    wp_ge5,
)
from tests.conftest import pari_root_number

nonzero = st.integers(-10**9, 10**9).filter(bool)


def _ainvs(delta, family):
    return [0, 0, 0, 0, delta] if Family(family) is Family.J0 else [0, 0, 0, delta, 0]


def test_local_examples():
    assert w2_j0(48) == -1
    assert w3_j0(5) == -1
    assert w2_j1728(2) == -1
    assert w2_j1728(3) == 1
    assert w3_j1728(81) == 1
    assert w3_j1728(9) == -1
    assert wp_ge5(7, 2, Family.J0) == 1
    assert wp_ge5(7, 1, Family.J0) == -1


def test_errors():
    with pytest.raises(ZeroInput):
        w2_j0(0)
    with pytest.raises(BadPrime):
        wp_ge5(3, 1, "j0")
    with pytest.raises(BadPrime):
        wp_ge5(25, 1, "j0")


def test_printed_j1728_table_is_wrong_at_v2_3():
    # y^2 = x^3 + 8x has a point of infinite order, so W must be -1
    assert root_number(8, "j1728") == -1
    assert global_root_j1728(8, w2_table="printed").sign == 1


@given(nonzero, st.sampled_from(list(Family)))
def test_trace_product_is_sign(delta, family):
    for mode in Mode:
        tr = global_root(delta, family, mode)
        assert tr.product() == tr.sign
        assert tr.factors[0].place == "inf" and tr.factors[0].sign == -1


@given(nonzero, st.integers(1, 50))
def test_twist_invariance(delta, s):
    assert root_number(delta, "j0") == root_number(s**6 * delta, "j0")
    assert root_number(delta, "j1728") == root_number(s**4 * delta, "j1728")


def test_j1728_modes_agree_exhaustively():
    for d in range(-5000, 5001):
        if d:
            assert global_root_j1728(d).sign == global_root_j1728(d, Mode.PAPER_CLOSED_FORM).sign, d


@pytest.mark.parametrize("family", list(Family))
def test_global_root_against_pari(pari, family):
    rng = random.Random(11)
    deltas = list(range(-300, 301)) + [rng.randint(-10**12, 10**12) for _ in range(700)]
    for d in deltas:
        if d:
            assert root_number(d, family) == pari_root_number(pari, _ainvs(d, family)), d


@pytest.mark.parametrize("family,w2,w3", [(Family.J0, w2_j0, w3_j0), (Family.J1728, w2_j1728, w3_j1728)])
def test_local_factors_against_pari(pari, family, w2, w3):
    rng = random.Random(13)
    for _ in range(600):
        d = rng.choice((-1, 1)) * 2 ** rng.randint(0, 13) * 3 ** rng.randint(0, 13) * rng.randint(1, 10**4)
        E = pari.ellinit(_ainvs(d, family))
        assert w2(d) == int(pari.ellrootno(E, 2)), d
        assert w3(d) == int(pari.ellrootno(E, 3)), d


@pytest.mark.parametrize("family", list(Family))
def test_wp_against_pari(pari, family):
    for p in (5, 7, 11, 13, 17, 19, 23):
        for v in range(12):
            d = p**v * 2
            E = pari.ellinit(_ainvs(d, family))
            assert wp_ge5(p, v, family) == int(pari.ellrootno(E, p)), (p, v)


def test_j0_closed_form_domain():
    bad_in_domain = []
    for d in range(-3000, 3001):
        if d and global_root_j0(d).sign != global_root_j0(d, Mode.PAPER_CLOSED_FORM).sign:
            if all(e <= 3 for p, e in factorize(d) if p >= 5):
                bad_in_domain.append(d)
    assert bad_in_domain == []
