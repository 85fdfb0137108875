import random
from math import gcd

import pytest

from dtj import cjp
from dtj.knots import MINUSMINUS, MINUSPLUS, TwoBridge, two_bridge_params
from dtj.qalgebra import ONE, LaurentPoly, RationalFn
from dtj.takata import (
    lattice_size,
    multi_indices,
    raw_a,
    takata_a_closed_m2,
    takata_a_closed_m2_corrected,
    takata_colored_jones,
    x_cleared,
    x_literal,
)


def test_multi_indices():
    assert list(multi_indices(0, 3)) == [()]
    got = list(multi_indices(2, 2))
    assert got == [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
    for length in range(4):
        for top in range(4):
            assert len(list(multi_indices(length, top))) == lattice_size(length, top)


def _valid(limit):
    return [TwoBridge(l, t) for l in range(3, limit + 1, 2) for t in range(1, l, 2) if gcd(l, t) == 1]


@pytest.mark.parametrize("tb", _valid(31), ids=str)
def test_first_color_is_one(tb):
    assert takata_colored_jones(tb, 1) == ONE


@pytest.mark.parametrize("tb", _valid(11), ids=str)
@pytest.mark.parametrize("N", [2, 3, 4])
def test_value_at_one(tb, N):
    poly = takata_colored_jones(tb, N)
    assert isinstance(poly, LaurentPoly)
    assert poly.evaluate(1) == 1


def test_torus_family_examples():
    # b(2k+1, 1) gives the (2, 2k+1) torus knots, which K(0, k) also names
    for k in (1, 2, 3):
        for N in (2, 3):
            assert takata_colored_jones(TwoBridge(2 * k + 1, 1), N) == cjp.jones_torus(k, N)


def test_oracle_examples():
    assert takata_colored_jones(TwoBridge(5, 3), 2) == cjp.jones_thm1(1, 1, 2)
    assert takata_colored_jones(TwoBridge(7, 5), 2) == cjp.jones_thm2(1, 1, 2)


def test_x_cleared_matches_literal():
    rng = random.Random(7)
    for tb in [TwoBridge(5, 3), TwoBridge(7, 5), TwoBridge(11, 9), TwoBridge(13, 3), TwoBridge(9, 7)]:
        for _ in range(25):
            N = rng.randint(1, 6)
            nbar = sorted(rng.randint(0, N - 1) for _ in range(tb.pprime))
            assert RationalFn(x_cleared(tb, nbar, N)) == x_literal(tb, nbar, N)


def test_a_closed_form_examples():
    assert takata_a_closed_m2(1, (0, 0, 0, 0, 0)) == -1
    assert takata_a_closed_m2(1, (0, 0, 1, 1, 1)) == 0
    with pytest.raises(ValueError):
        takata_a_closed_m2(2, (0, 0, 0))


def _random_nbars(p, count, seed):
    rng = random.Random(seed)
    return [sorted(rng.randint(0, 15) for _ in range(5 * p)) for _ in range(count)]


@pytest.mark.parametrize("p", [1, 2, 3])
def test_corrected_a_closed_form_matches_raw(p):
    tb = TwoBridge(10 * p + 1, 8 * p + 1)
    assert tb == two_bridge_params(2, p, MINUSPLUS)
    for nbar in _random_nbars(p, 50, p):
        assert raw_a(tb, nbar) == takata_a_closed_m2_corrected(p, nbar)


def test_printed_a_closed_form_disagrees_with_raw():
    # raw a(0,0,1,1,1) is -2; the printed simplification gives 0
    tb = TwoBridge(11, 9)
    assert raw_a(tb, (0, 0, 1, 1, 1)) == -2
    assert takata_a_closed_m2(1, (0, 0, 1, 1, 1)) == 0


def test_rejects_bad_color():
    with pytest.raises(ValueError):
        takata_colored_jones(TwoBridge(5, 3), 0)
