import pytest

from dtj import cjp
from dtj.cjp import HypothesisError
from dtj.qalgebra import ONE, LaurentPoly, RationalFn, lp_invert_q, q, qfactorial, qpochhammer

EVALUATORS = {
    "thm1": (cjp.jones_thm1, 1),
    "thm2": (cjp.jones_thm2, 0),
    "thm3pos": (cjp.jones_thm3_pos, 1),
    "thm3neg": (cjp.jones_thm3_neg, 1),
    "walsh": (cjp.walsh_colored_jones, 1),
    "walshneg": (lambda m, p, N: cjp.walsh_colored_jones(m, -p, N), 1),
}

TREFOIL = LaurentPoly([(-1, 1), (-3, 1), (-4, -1)])
TREFOIL_MIRROR = LaurentPoly([(1, 1), (3, 1), (4, -1)])


def test_epsilon_examples():
    assert cjp.epsilon(1, 2, 1) == 1
    assert cjp.epsilon(1, 3, 1) == -1
    with pytest.raises(ValueError):
        cjp.epsilon(3, 4, 1)  # 3 is a multiple of 2m+1


def test_gamma_examples():
    # m=3, p=1 gives the linear factor q^(n1+n2-n4-n5)
    assert [cjp.gamma(i, 3) for i in (1, 2, 3, 4, 5)] == [1, 1, 0, -1, -1]
    assert cjp.gamma(2, 1) == -1


def test_delta_and_beta_examples():
    assert cjp.delta_coeff(1, 2, 2) == -1
    assert cjp.delta_coeff(1, 4, 2) == 1
    assert cjp.delta_coeff(2, 7, 2) == -1
    assert [cjp.beta_coeff(i, 2) for i in (1, 2, 3, 4, 5)] == [1, 1, -1, -1, 0]
    assert all(cjp.beta_coeff(i, 0) == 0 for i in range(1, 6))


def test_classical_values():
    assert cjp.jones_torus(1, 2) == TREFOIL
    assert cjp.jones_torus(2, 2) == LaurentPoly([(-2, 1), (-4, 1), (-5, -1), (-6, 1), (-7, -1)])
    assert cjp.jones_thm2(0, 1, 2) == TREFOIL
    assert cjp.jones_thm3_neg(1, 1, 2) == TREFOIL_MIRROR
    assert cjp.walsh_colored_jones(1, -1, 2) == TREFOIL_MIRROR
    assert cjp.habiro_left_torus_check(1, 2) == TREFOIL_MIRROR
    assert lp_invert_q(TREFOIL) == TREFOIL_MIRROR


@pytest.mark.parametrize("name", EVALUATORS)
@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("p", [1, 2])
def test_normalization(name, m, p):
    fn, _ = EVALUATORS[name]
    assert fn(m, p, 1) == ONE
    for N in range(2, 6):
        assert fn(m, p, N).evaluate(1) == 1


@pytest.mark.parametrize("p", [1, 2, 3])
@pytest.mark.parametrize("N", range(1, 7))
def test_torus_reduction(p, N):
    assert cjp.jones_thm2(0, p, N) == cjp.jones_torus(p, N)


@pytest.mark.parametrize("N", range(1, 7))
def test_thm1_mirror_small(N):
    assert lp_invert_q(cjp.jones_thm3_pos(2, 1, N)) == cjp.jones_thm1(1, 1, N)


@pytest.mark.parametrize("p", [1, 2])
@pytest.mark.parametrize("N", range(1, 6))
def test_habiro(p, N):
    assert cjp.habiro_left_torus_check(p, N) == cjp.jones_thm3_neg(1, p, N)


def test_walsh_agrees_with_thm3_small():
    assert cjp.walsh_colored_jones(1, 2, 2) == cjp.jones_thm3_pos(1, 2, 2)
    assert cjp.walsh_colored_jones(1, 1, 1) == ONE


# -- rewrites and chain sums ----------------------------------------------------


@pytest.mark.parametrize("N", range(1, 8))
def test_poch_ratio_rewrite(N):
    for n in range(0, 7):
        assert RationalFn(cjp.poch_ratio(N, n)) == cjp.poch_ratio_literal(N, n)


@pytest.mark.parametrize("N", range(1, 7))
def test_term_at_n_equals_N_vanishes(N):
    assert qpochhammer(1 - N, N).is_zero()
    assert cjp.poch_ratio(N, N).is_zero()


@pytest.mark.parametrize("m,p", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_thm3_cleared_matches_literal(m, p):
    for N in range(1, 6):
        assert RationalFn(cjp.jones_thm3_pos(m, p, N)) == cjp.jones_thm3_pos_literal(m, p, N)


def test_chain_examples():
    for p in range(1, 5):
        assert cjp.c_poly(p, 0) == ONE
        assert cjp.d_poly(p, 0) == RationalFn(1)
        assert cjp.c_neg_poly(p, 0) == ONE
    assert all(cjp.c_poly(1, n) == ONE for n in range(8))
    assert all(cjp.d_poly(1, n) == RationalFn(ONE, qfactorial(n)) for n in range(8))
    assert cjp.d_poly(2, 1) == RationalFn(1) + RationalFn(q**2, 1 - q)
    assert cjp.c_neg_poly(1, 1) == -q**-2


@pytest.mark.parametrize("k", range(1, 5))
def test_chain_closed_vs_defining(k):
    for n in range(0, 11):
        assert RationalFn(cjp.c_poly(k, n)) == cjp.c_poly_defining(k, n)
        assert cjp.d_poly(k, n) == cjp.d_poly_defining(k, n)
        assert cjp.d_cleared(k, n) == (cjp.d_poly(k, n) * qfactorial(n)).to_laurent()
        assert cjp.c_neg_poly(k, n) == cjp.c_neg_transformed(k, n)


# -- hypotheses -----------------------------------------------------------------


@pytest.mark.parametrize("call", [
    lambda: cjp.jones_thm1(0, 1, 2),
    lambda: cjp.jones_thm1(1, 0, 2),
    lambda: cjp.jones_thm2(-1, 1, 2),
    lambda: cjp.jones_thm3_pos(0, 1, 2),
    lambda: cjp.jones_thm3_neg(1, 0, 2),
    lambda: cjp.jones_torus(0, 2),
    lambda: cjp.jones_thm1(1, 1, 0),
])
def test_hypothesis_violations(call):
    with pytest.raises(HypothesisError):
        call()


def test_hypothesis_message_names_the_formula():
    with pytest.raises(HypothesisError, match="requires m >= 1"):
        cjp.jones_thm1(0, 1, 2)
