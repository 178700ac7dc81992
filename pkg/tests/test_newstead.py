from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modulik3 import newstead as ns
from modulik3.series import LaurentSeries
from strategies import rationals


def test_kappa_monomial_examples():
    assert ns.kappa_monomial(2, 3, 0, 0) == 4
    assert ns.kappa_monomial(3, 3, 0, 1) == 24
    assert ns.kappa_monomial(3, 5, 0, 0) == 0


def test_kappa_monomial_negative_beta_error():
    with pytest.raises(ValueError, match="unsupported negative"):
        ns.kappa_monomial(3, 8, -2, 1)


def test_kappa_examples():
    a, b = ns.CohClass.alpha(3), ns.CohClass.beta(3)
    assert ns.kappa(a ** 6) == 224
    assert ns.kappa(a ** 4 * b) == -64
    assert ns.kappa(a ** 5 * ns.CohClass.gob(3)) == -56


def test_gamma_power_above_genus_vanishes():
    assert ns.kappa_monomial(2, 0, -3, 3) == 0
    assert ns.kappa_monomial(3, 1, -4, 4) == 0


def _two_oracle_cases():
    for g in range(2, 6):
        top = ns.top_degree(g)
        for p in (0, 1):
            for n in range(-p, top // 2 + 1):
                m = top - 2 * n - 3 * p
                if m >= 0:
                    yield g, m, n, p


@pytest.mark.parametrize("g,m,n,p", list(_two_oracle_cases()))
def test_two_oracle_kappa(g, m, n, p):
    assert ns.kappa_monomial(g, m, n, p) == ns.kappa_monomial_residue(g, m, n, p)


@given(st.integers(2, 5), st.integers(0, 14), st.integers(-1, 7), st.integers(0, 3))
def test_grading(g, m, n, p):
    if n == -1 and p == 0:
        return
    if m + 2 * n + 3 * p != 3 * g - 3:
        assert ns.kappa_monomial(g, m, n, p) == 0
        if p <= 1:
            assert ns.kappa_monomial_residue(g, m, n, p) == 0


@given(st.integers(3, 5), rationals.filter(lambda k: k != 0),
       st.lists(rationals, min_size=8, max_size=8), st.integers(-4, 4))
def test_gamma_over_beta_mode_matches_class_route(g, k, coeffs, d):
    F_ = LaurentSeries.from_coeffs(coeffs, 0, 8)
    assert ns.kappa_residue(g, k, F_, "gamma_over_beta_plus_d", d) == \
        ns.kappa_class_route(g, k, F_, "gamma_over_beta_plus_d", d)


@pytest.mark.parametrize("mode", ns.MODES)
@pytest.mark.parametrize("g", [2, 3, 4])
def test_residue_modes_match_class_route(mode, g):
    F_ = LaurentSeries.from_coeffs([1, F(1, 3), F(-2, 5), 2, 1, 0, 3, 1], 0, 8)
    k = F(3, 2)
    if mode == "times_gamma" and g < 2:
        return
    assert ns.kappa_residue(g, k, F_, mode, 2) == ns.kappa_class_route(g, k, F_, mode, 2)


def test_kappa_residue_k_zero():
    with pytest.raises(ValueError):
        ns.kappa_residue(3, 0, LaurentSeries.constant(1, 6))


def test_kappa_residue_pushforward_rank():
    # ch(U_p) td(N) = exp(3 alpha/2) cosh(sqb/2) toddfac * 2 ; plain mode with k = 3/2
    g = 3
    c = ns.class_expr(g, "2*cosh(sqb/2)*toddfac")
    coeffs = [c.terms.get((0, i, 0), 0) * (-1) ** i for i in range(6)]
    assert ns.kappa_residue(g, F(3, 2), LaurentSeries.from_coeffs(coeffs, 0, 6)) == 8


def test_class_expr_examples():
    c = ns.class_expr(3, "2*exp(alpha/2)*cosh(sqb/2)")
    assert c.constant_term() == 2
    assert ns.td_N(3).constant_term() == 1
    assert ns.class_expr(3, "(alpha^2-beta)/4") == ns.c2_U(3)


def test_class_expr_odd_sqrt_rejected():
    with pytest.raises(ValueError, match="not a cohomology class"):
        ns.class_expr(3, "sqb")


def test_chi_examples():
    assert ns.chi(3, ns.exp_alpha(3, 1)) == 28
    assert ns.chi(3, ns.ch_U(3) * ns.exp_alpha(3, -1)) == 0


@pytest.mark.parametrize("g", range(2, 7))
def test_chi_structure_sheaf_and_vanishing(g):
    assert ns.chi(g, ns.CohClass.const(g)) == 1
    assert ns.chi(g, ns.exp_alpha(g, -1)) == 0
    assert ns.chi(g, ns.exp_alpha(g, 1)) == 2 ** (g - 1) * (2 ** g - 1)


def test_cy_invariants():
    assert ns.cy_invariants(3).as_tuple() == (4, 2, 72, 24, 2)
    assert ns.cy_invariants(4).as_tuple() == (7, 5, 13472, 3840, 0)
    inv = ns.cy_invariants(5)
    assert (inv.deg_Z, inv.chi_OZ) == (1859968, 2)
    assert (ns.cy_invariants(6).deg_Y, ns.cy_invariants(6).deg_Z) == (7477297152, 1958247936)


def test_pushforward_examples():
    assert ns.pushforward_rank_deg(3, 1) == (8, -4)
    assert ns.pushforward_rank_deg(3, 5) == (8, 12)
    # closed form 2^(g-1)(d-g+1) at g=4, d=1 is 8 * (-2)
    assert ns.pushforward_rank_deg(4, 1) == (16, -16)


def test_restricted_pushforward_examples():
    assert ns.restricted_pushforward(3, 1) == (8, -2)
    assert ns.restricted_pushforward(3, 7) == (8, 22)
    assert ns.restricted_pushforward(5, 1) == (32, -46)


def test_mu_aggregate_examples():
    assert ns.mu_aggregate(3, 1) == -2
    assert ns.mu_aggregate(4, 3) == 2


@pytest.mark.parametrize("k,j", [(1, 0), (-1, 0), (0, 0), (F(1, 2), F(1, 2)), (0, 1)])
def test_mu_residue_matches_class(k, j):
    assert ns.mu(3, 1, k, j) == ns.mu_class(3, 1, k, j)


def test_moduli_dim():
    assert ns.moduli_dim(2, 3) == 6
    assert ns.moduli_dim(3, 2) == 8
    assert ns.moduli_dim(2, 2) == 3


def test_sym2_and_adams():
    g = 3
    line = ns.ChRecord("O", ns.exp_alpha(g, 1))
    assert ns.adams(line, 2).cls == ns.exp_alpha(g, 2)
    q = ns.ch_Q(g)
    assert ns.sym2_ch(q).rank == 3


@pytest.mark.parametrize("m,expected", [(0, 34), (-1, 1), (-2, -2), (-3, 1)])
def test_chi_sym2Q(m, expected):
    assert ns.chi_sym2Q(3, m) == expected


def test_genus_cap():
    with pytest.raises(ValueError):
        ns.kappa_residue(ns.MAX_GENUS + 1, 1, LaurentSeries.constant(1, 4))
