import json
import threading
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dtj.qalgebra import (
    ONE,
    CyclotomicElt,
    LaurentPoly,
    RationalFn,
    cyclotomic_poly,
    divisors,
    euler_phi,
    galois_invert,
    lp_invert_q,
    q,
    qbinomial,
    qfactorial,
    qmultinomial,
    qpochhammer,
    reduce_mod_phi,
)
from dtj.qalgebra import qcomb

coeffs = st.integers(min_value=-10**30, max_value=10**30)
laurent = st.dictionaries(st.integers(-12, 12), coeffs, max_size=8).map(LaurentPoly)
small_laurent = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)
nonzero_small = small_laurent.filter(lambda f: not f.is_zero())
rational = st.tuples(small_laurent, nonzero_small).map(lambda t: RationalFn(*t))


def lp(*pairs):
    return LaurentPoly(list(pairs))


# -- LaurentPoly ---------------------------------------------------------------


def test_worked_products():
    assert (q - 1) * (q + 1) == q**2 - 1
    assert (1 - q**-1) * q**-2 == lp((-2, 1), (-3, -1))


def test_canonical_form_drops_zeros():
    f = LaurentPoly({3: 0, 1: 2})
    assert f.terms == {1: 2}
    assert LaurentPoly([(2, 1), (2, -1)]).is_zero()
    assert (q - q).terms == {}


def test_invert_q_examples():
    f = lp((-1, 1), (-3, 1), (-4, -1))
    assert lp_invert_q(f) == lp((1, 1), (3, 1), (4, -1))
    assert lp_invert_q(ONE) == ONE


@settings(max_examples=150)
@given(laurent, laurent, laurent)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f * 1 == f
    assert f - f == LaurentPoly()


@given(laurent)
def test_invert_is_involution_and_multiplicative(f):
    assert lp_invert_q(lp_invert_q(f)) == f
    assert lp_invert_q(f * (q + 3)) == lp_invert_q(f) * lp_invert_q(q + 3)


@given(laurent)
def test_text_round_trip(f):
    assert LaurentPoly.parse(f.to_text()) == f


@given(laurent)
def test_json_round_trip(f):
    assert LaurentPoly.from_json(json.loads(json.dumps(f.to_json()))) == f


def test_text_format():
    assert lp((-4, -1), (-3, 1), (-1, 1)).to_text() == "-q^-4 + q^-3 + q^-1"
    assert LaurentPoly().to_text() == "0"
    assert ONE.to_text() == "1"


@given(laurent, st.integers(-3, 3))
def test_evaluate_is_homomorphism(f, x):
    if x == 0:
        return
    from fractions import Fraction
    g = q**2 - 3
    assert (f * g).evaluate(Fraction(x)) == f.evaluate(Fraction(x)) * g.evaluate(Fraction(x))


def test_big_coefficients_are_exact():
    f = (1 + q) ** 200
    assert f.coeff(100) == comb(200, 100)
    assert f.evaluate(1) == 2**200


@given(small_laurent, st.sampled_from([q - 1, q**2 + q**-1 + 4, cyclotomic_poly(6), qfactorial(3)]))
def test_exact_div_recovers_factor(f, g):
    assert (f * g).exact_div(g) == f


# -- RationalFn -----------------------------------------------------------------


@settings(max_examples=120)
@given(rational, rational, rational)
def test_rational_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(rational)
def test_rational_canonical_denominator(r):
    den = r.den
    assert not den.is_zero()
    assert den.valuation == 0
    assert den.coeff(0) > 0


@given(small_laurent, nonzero_small)
def test_rational_cancels_to_laurent(f, g):
    r = RationalFn(f * g, g)
    assert r.is_laurent()
    assert r.to_laurent() == f


def test_rational_non_laurent_raises():
    with pytest.raises(ArithmeticError):
        RationalFn(ONE, 1 - q).to_laurent()


def test_rational_division():
    r = RationalFn(qfactorial(5), qfactorial(3))
    assert r.to_laurent() == qpochhammer(4, 2)
    assert (RationalFn(q) / RationalFn(q)) == RationalFn(1)


# -- q-combinatorics ------------------------------------------------------------


def test_qpochhammer_examples():
    assert qpochhammer(1, 2) == lp((0, 1), (1, -1), (2, -1), (3, 1))
    assert qpochhammer(7, 0) == ONE
    assert qpochhammer(-1, 1) == 1 - q**-1


def test_qpochhammer_vanishes_through_zero_factor():
    assert qpochhammer(-1, 2).is_zero()
    assert qpochhammer(0, 1).is_zero()
    assert not qpochhammer(-1, 1).is_zero()


@pytest.mark.parametrize("n", range(0, 12))
def test_qfactorial_shape(n):
    f = qfactorial(n)
    assert f.degree == n * (n + 1) // 2
    assert f.valuation == 0 and f.coeff(0) == 1


def test_qbinomial_examples():
    assert qbinomial(4, 2) == lp((0, 1), (1, 1), (2, 2), (3, 1), (4, 1))
    assert qbinomial(0, 0) == ONE
    assert qbinomial(3, 5).is_zero()
    assert qbinomial(3, -1).is_zero()


def test_qbinomial_properties():
    for n in range(16):
        for k in range(n + 1):
            b = qbinomial(n, k)
            assert b == qbinomial(n, n - k)
            assert all(c > 0 for _, c in b.items())
            assert b.valuation == 0 and b.degree == k * (n - k)
            dense = b.dense()[1]
            assert dense == dense[::-1]
            assert b.evaluate(1) == comb(n, k)


def test_qbinomial_matches_factorial_quotient():
    for n in range(9):
        for k in range(n + 1):
            assert RationalFn(qfactorial(n), qfactorial(k) * qfactorial(n - k)).to_laurent() == qbinomial(n, k)


def test_qmultinomial_examples():
    assert qmultinomial(2, [1, 1]) == 1 + q
    assert qmultinomial(5, [5]) == ONE
    assert qmultinomial(3, [1, 1, 1]) == (1 + q) * (1 + q + q**2)
    assert qmultinomial(4, [0, 2, 0, 2]) == qbinomial(4, 2)
    with pytest.raises(ValueError):
        qmultinomial(3, [1, 1])
    with pytest.raises(ValueError):
        qmultinomial(0, [1, -1])


def test_qbinomial_concurrent_readers_agree():
    qcomb.qbinomial.cache_clear()
    results = []

    def work():
        results.append([qbinomial(n, k) for n in range(14) for k in range(n + 1)])

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)


# -- cyclotomic -----------------------------------------------------------------


def test_cyclotomic_examples():
    assert cyclotomic_poly(1) == q - 1
    assert cyclotomic_poly(4) == q**2 + 1
    assert cyclotomic_poly(6) == q**2 - q + 1


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_degree_is_phi(n):
    assert cyclotomic_poly(n).degree == euler_phi(n)
    assert len(reduce_mod_phi(q, n).coeffs) == euler_phi(n)


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_product_over_divisors(n):
    prod = ONE
    for d in divisors(n):
        prod = prod * cyclotomic_poly(d)
    assert prod == q**n - 1


def test_reduce_examples():
    for n in range(1, 13):
        assert reduce_mod_phi(q**n, n) == 1
        assert reduce_mod_phi(q**-n, n) == 1
    assert reduce_mod_phi(1 + q + q**2 + q**3, 4) == 0
    assert reduce_mod_phi(q**3, 4) == reduce_mod_phi(-q, 4)


@settings(max_examples=60)
@given(small_laurent, small_laurent, st.integers(1, 12))
def test_reduce_is_ring_homomorphism(f, g, n):
    rf, rg = reduce_mod_phi(f, n), reduce_mod_phi(g, n)
    assert reduce_mod_phi(f * g, n) == rf * rg
    assert reduce_mod_phi(f + g, n) == rf + rg


@given(small_laurent, st.integers(1, 12))
def test_galois_invert(f, n):
    e = reduce_mod_phi(f, n)
    assert galois_invert(galois_invert(e)) == e
    assert galois_invert(e) == reduce_mod_phi(lp_invert_q(f), n)


def test_galois_invert_examples():
    assert galois_invert(reduce_mod_phi(q, 4)) == reduce_mod_phi(-q, 4)
    assert galois_invert(CyclotomicElt.from_int(7, 5)) == 7


@given(small_laurent, st.integers(1, 12))
def test_cyclotomic_json_round_trip(f, n):
    e = reduce_mod_phi(f, n)
    assert CyclotomicElt.from_json(json.loads(json.dumps(e.to_json()))) == e


def test_cyclotomic_rejects_wrong_length():
    with pytest.raises(ValueError):
        CyclotomicElt(5, [1, 2])
