import pytest

from dtj import cjp, kzseries
from dtj.cjp import HypothesisError
from dtj.qalgebra import CyclotomicElt, LaurentPoly, divisors, q, qfactorial, reduce_mod_phi


def test_trivial_values():
    assert kzseries.F_at_root(0, 1, 1) == 1
    assert kzseries.Ffrak_at_root(1, 1, 1) == 1
    assert kzseries.U_at_root(1, 1, 1) == 1
    assert kzseries.Ufrak_at_root(1, 1, 1) == 1


def test_F01_at_third_root():
    z = q
    expected = z * (1 + (1 - z) + (1 - z) * (1 - z**2))
    assert kzseries.F_at_root(0, 1, 3) == reduce_mod_phi(expected, 3)


@pytest.mark.parametrize("N", range(1, 13))
def test_F01_is_q_times_kontsevich_zagier(N):
    assert kzseries.F_at_root(0, 1, N) == kzseries.kz_classical_at_root(N)
    assert kzseries.check_duality_1(0, 1, N)


@pytest.mark.parametrize("tag", kzseries.SERIES)
@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("p", [1, 2])
def test_relations(tag, m, p):
    for N in range(1, 7):
        value = kzseries.series_at_root(tag, m, p, N)
        assert value == reduce_mod_phi(kzseries.jones_for_series(tag, m, p, N), N)
        assert kzseries.check_relation(tag, m, p, N)


def test_relation_targets():
    assert kzseries.check_relation("F", 0, 2, 5)
    assert kzseries.F_at_root(1, 1, 4) == reduce_mod_phi(cjp.jones_thm2(1, 1, 4), 4)
    assert kzseries.U_at_root(2, 1, 5) == reduce_mod_phi(cjp.jones_thm3_neg(2, 1, 5), 5)


def test_second_duality_example():
    left = kzseries.Ffrak_at_root(1, 1, 2)
    right = kzseries.Ufrak_at_root(2, 1, 2).galois_invert()
    assert left == right


@pytest.mark.parametrize("N", range(1, 9))
def test_dualities_all_divisors(N):
    for m in range(0, 3):
        for p in range(1, 3):
            assert kzseries.check_duality_1(m, p, N)
            if m:
                assert kzseries.check_duality_2(m, p, N)
    assert kzseries.check_duality_2(1, 1, N)


def test_divisor_levels():
    for d in divisors(6):
        v = kzseries.F_at_root(1, 1, 6, divisor=d)
        assert isinstance(v, CyclotomicElt) and v.level == d
        assert kzseries.check_relation("Ufrak", 1, 1, 6, divisor=d)
    with pytest.raises(HypothesisError):
        kzseries.F_at_root(1, 1, 6, divisor=4)


def test_ufrak_text_variant_is_a_discrepancy():
    # the alternative relation pairs Ufrak with K(-m,p); it only holds at N = 1
    assert kzseries.check_ufrak_text_variant(1, 1, 1)
    for N in range(2, 6):
        assert not kzseries.check_ufrak_text_variant(1, 1, N)


def test_F_displayed_form():
    for m in (1, 2):
        for N in range(1, 6):
            assert kzseries.F_displayed_poly(m, 1, N) == kzseries.series_poly("F", m, 1, N)
    # read literally at m = 0 the display no longer gives q times the classical series
    assert any(
        reduce_mod_phi(kzseries.F_displayed_poly(0, 1, N), N) != kzseries.kz_classical_at_root(N)
        for N in range(2, 6)
    )


def test_domain_checks():
    with pytest.raises(HypothesisError):
        kzseries.series_poly("Ffrak", 0, 1, 3)
    with pytest.raises(HypothesisError):
        kzseries.series_poly("U", 1, 0, 3)
    with pytest.raises(ValueError):
        kzseries.jones_for_series("V", 1, 1, 3)


def test_ufrak_series_leading_term_and_stability():
    for p in (1, 2):
        s = kzseries.Ufrak_series_truncated(1, p, 10)
        assert s.valuation == p and s.coeff(p) == 1
    a = kzseries.Ufrak_series_truncated(2, 1, 10)
    b = kzseries.Ufrak_series_truncated(2, 1, 14)
    assert LaurentPoly({e: c for e, c in b.terms.items() if e <= 10}) == a


def test_ufrak_series_m1_p1_direct():
    # c_{1,n} = 1 and (q)_n d_{1,n} = 1, so the series is q * sum (q)_n q^n
    direct = LaurentPoly()
    for n in range(8):
        direct = direct + (qfactorial(n) * q**n).shift(1)
    direct = LaurentPoly({e: c for e, c in direct.terms.items() if e <= 6})
    assert kzseries.Ufrak_series_truncated(1, 1, 6) == direct


def test_root_value_json():
    v = kzseries.RootOfUnitySeriesValue("F", 1, 1, 5, kzseries.F_at_root(1, 1, 5))
    obj = v.to_json()
    assert obj["series"] == "F" and obj["level"] == 5 and len(obj["coeffs"]) == 4
    assert CyclotomicElt.from_json(obj) == v.value
