from collections import Counter
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modulik3 import bundlecoh as bc
from modulik3.tables import registry_expressions

h = F(1, 2)


def test_canonical_indices():
    assert [bc.get_space(s).canonical_index for s in ("GR82", "OG82", "OG72")] == [8, 5, 4]


def test_space_dims():
    assert [bc.get_space(s).dim for s in ("GR82", "OG82", "OG72")] == [12, 9, 7]


def test_parse_with_prefix():
    space, tree = bc.parse_bundle("OG82: S+*S+*O(-1)")
    assert space == "OG82"
    assert bc.structural_rank("OG82", tree) == 4


@pytest.mark.parametrize("text", ["", "sym(2,", "Q**Q", "wedge(x,Q)", "XX", "sigma([1,2],K)"])
def test_parse_errors(text):
    with pytest.raises((bc.BundleParseError, ValueError)):
        bc.decompose("GR82", text)


def test_sigma_only_on_gr82():
    with pytest.raises(ValueError):
        bc.decompose("OG82", "sigma([1],K)")


def test_decompose_examples():
    out = bc.decompose("OG82", "sym(2,Q)*O(-1)*wedge(2,dual(sym(2,Q)))*wedge(2,dual(S+))")
    assert set(out) == {(-1, -5, 0, 0), (-2, -4, 0, 0), (-3, -3, 0, 0)}
    out = bc.decompose("GR82", "sym(2,Q)*wedge(3,dual(sym(2,Q)))")
    assert (-1, -3, 0, 0, 0, 0, 0, 0) in out
    assert bc.decompose("OG72", "wedge(0,S')") == Counter({(0, 0, 0): 1})


def test_cohomology_examples():
    assert bc.cohomology("GR82", "sym(2,Q)").as_dict() == {0: 36}
    assert bc.cohomology("OG82", "wedge(2,dual(sym(2,Q)))*sym(2,Q)*O(-1)").as_dict() == {4: 1}


def test_sigma_sigma_minus_two_vanish():
    shapes = [(), (1, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1), (2, 1, 1, 1, 1, 1), (2, 2, 2, 2, 2, 2)]
    for a in shapes:
        for b in shapes:
            e = bc.Tensor(bc.Tensor(bc.Sigma(a), bc.Sigma(b)), bc.Twist(-2))
            assert not bc.cohomology("GR82", e)


def test_koszul_u_udual():
    page = bc.koszul_e1("OG82", "S+*S+*O(-1)", ["sym(2,Q)"])
    assert page.as_dict() == {(0, 0): 1, (1, 2): 1}
    assert page.forced.as_dict() == {0: 1, 1: 1}
    assert page.rule == "no-differential"


def test_koszul_empty_cosection():
    page = bc.koszul_e1("GR82", "sym(2,Q)", [])
    assert page.as_dict() == {(0, 0): 36}
    assert page.forced == bc.cohomology("GR82", "sym(2,Q)")


def test_koszul_rank_bound():
    with pytest.raises(ValueError):
        bc.koszul_e1("OG72", "Q'", ["sym(2,Q')", "sym(2,Q')", "sym(2,Q')"])


def test_surface_koszul_gives_14():
    page = bc.nminus_surface_koszul(1, 2)
    assert page.as_dict() == {(0, 0): 28, (1, 0): 16, (2, 0): 2}
    assert page.forced.as_dict() == {0: 14}
    assert page.rule == "single-degree"


def test_nminus_values():
    assert bc.nminus_cohomology("O", 1).as_dict() == {0: 28}
    assert bc.nminus_cohomology("O", 0).as_dict() == {0: 1}
    assert not bc.nminus_cohomology("O", -1)
    assert bc.nminus_cohomology("U", 0).as_dict() == {0: 8}
    assert not bc.nminus_cohomology("U", -1)
    assert not bc.nminus_cohomology("U1U2", -1)


@pytest.mark.parametrize("m,expected", [(0, {0: 34}), (-1, {2: 1}), (-2, {3: 2}), (-3, {4: 1})])
def test_nminus_sym2q(m, expected):
    assert bc.nminus_cohomology("S2Q", m).as_dict() == expected
    assert bc.nminus_sym2_chi(m) == {0: 34, -1: 1, -2: -2, -3: 1}[m]


def test_force_page_rules():
    prof, rule = bc.force_page({(0, 1): 2}, 3)
    assert prof.as_dict() == {1: 2} and rule == "no-differential"
    # no term can hit another one
    prof, rule = bc.force_page({(0, 0): 1, (1, 2): 1, (1, 1): 1}, 5)
    assert prof.as_dict() == {0: 2, 1: 1} and rule == "no-differential"
    # (1,0) may map onto (0,0) and two live total degrees remain
    assert bc.force_page({(1, 0): 1, (0, 0): 1, (0, 1): 1}, 5) == (None, None)
    # a differential is possible but only total degree 0 is live
    prof, rule = bc.force_page({(1, 0): 3, (0, 0): 5}, 2)
    assert prof.as_dict() == {0: 2} and rule == "single-degree"


# ---------------------------------------------------------------------------
# random expressions

GENS = {"GR82": ["Q", "K", "O(1)", "O(-1)", "dual(Q)"],
        "OG82": ["Q", "S+", "S-", "O(1)", "dual(S+)"],
        "OG72": ["Q", "Q'", "S'", "O(-1)"]}


@st.composite
def exprs(draw, space, depth=2):
    if depth == 0 or draw(st.integers(0, 2)) == 0:
        return draw(st.sampled_from(GENS[space]))
    kind = draw(st.sampled_from(["tensor", "dual", "sym", "wedge", "sum", "twist"]))
    a = draw(exprs(space, depth - 1))
    if kind == "tensor":
        return f"{a}*{draw(exprs(space, depth - 1))}"
    if kind == "sum":
        return f"{a}(+){draw(exprs(space, depth - 1))}"
    if kind == "dual":
        return f"dual({a})"
    if kind == "twist":
        return f"({a})*O({draw(st.integers(-3, 3))})"
    k = draw(st.integers(0, 2))
    return f"{'sym' if kind == 'sym' else 'wedge'}({k},{a})"


space_exprs = st.sampled_from(sorted(GENS)).flatmap(lambda s: st.tuples(st.just(s), exprs(s)))


def _small(space, e):
    try:
        return bc.structural_rank(space, e) <= 40
    except ValueError:
        return False


@settings(max_examples=150)
@given(space_exprs)
def test_rank_conservation(se):
    space, e = se
    if not _small(space, e):
        return
    assert bc.summand_rank(space, bc.decompose(space, e)) == bc.structural_rank(space, e)


@settings(max_examples=150)
@given(space_exprs)
def test_serre_mirror_random(se):
    space, e = se
    if not _small(space, e):
        return
    n = bc.get_space(space).dim
    assert bc.cohomology(space, bc.serre_dual_expr(space, e)) == bc.cohomology(space, e).mirror(n)


@settings(max_examples=60)
@given(space_exprs)
def test_dual_twice_is_identity(se):
    space, e = se
    if not _small(space, e):
        return
    assert bc.decompose(space, f"dual(dual({e}))") == bc.decompose(space, e)


def test_serre_mirror_registry():
    exprs_ = registry_expressions()
    assert len(exprs_) >= 200
    for space, e in exprs_:
        n = bc.get_space(space).dim
        assert bc.cohomology(space, bc.serre_dual_expr(space, e)) == bc.cohomology(space, e).mirror(n), (space, e)


def test_serre_wrong_twist_breaks_mirror():
    # with O(-6) on OG82 the H^4 example has no mirror partner
    e = "wedge(2,dual(sym(2,Q)))*sym(2,Q)*O(-1)"
    wrong = bc.Tensor(bc.Dual(bc.as_expr(e)), bc.Twist(-6))
    assert bc.cohomology("OG82", wrong) != bc.cohomology("OG82", e).mirror(9)


KOSZUL_CASES = [
    ("OG82", "S+*S+*O(-1)", ["sym(2,Q)"]),
    ("OG82", "S+*O(-1)", ["sym(2,Q)"]),
    ("GR82", "sym(2,Q)", ["sym(2,Q)", "sym(2,Q)"]),
    ("GR82", "O(1)", ["sym(2,Q)", "sym(2,Q)"]),
    ("OG72", "S'*S'", ["sym(2,Q')"]),
]


@pytest.mark.parametrize("space,e,w", KOSZUL_CASES)
def test_koszul_euler_consistency(space, e, w):
    page = bc.koszul_e1(space, e, w)
    if page.forced is not None:
        assert page.forced.euler() == page.euler()


def _grr_chi(kind, m):
    from modulik3 import newstead as ns
    g = 3
    base = {"O": ns.CohClass.const(g), "S2Q": ns.sym2_ch(ns.ch_Q(g)).cls, "U": ns.ch_U(g),
            "UU": ns.ch_U(g) * ns.ch_U(g)}[kind]
    return ns.chi(g, base * ns.exp_alpha(g, m))


@pytest.mark.parametrize("kind", ["O", "S2Q", "U", "UU"])
@pytest.mark.parametrize("m", range(-4, 3))
def test_nminus_koszul_agrees_with_grr(kind, m):
    prof = bc.nminus_cohomology(kind, m)
    if prof is not None:
        assert prof.euler() == _grr_chi(kind, m)
