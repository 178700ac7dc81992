from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modulik3.liealg import RootSystem, bott, bott_index, dot, parse_weight, positive_roots, rho, singular, weyl_dim

A7, D4, B3 = RootSystem("A", 7), RootSystem("D", 4), RootSystem("B", 3)
h = F(1, 2)


def test_positive_root_counts():
    assert len(positive_roots(A7)) == 28
    assert len(positive_roots(D4)) == 12
    assert len(positive_roots(B3)) == 9


def test_rho():
    assert rho(A7) == tuple(F(x) for x in (7, 6, 5, 4, 3, 2, 1, 0))
    assert rho(D4) == (3, 2, 1, 0)
    assert rho(B3) == (F(5, 2), F(3, 2), F(1, 2))


def test_bott_examples():
    r = bott(D4, (0, -4, 0, 0))
    assert (r.vanishing, r.index, r.dominant, r.dimension) == (False, 4, (0, 0, 0, 0), 1)
    r = bott(B3, (-1, -1, 2))
    assert (r.index, r.dimension) == (2, 1)
    assert bott(A7, (-2, -2, 0, 0, 0, 0, 0, 0)).vanishing


def test_weyl_dim_examples():
    assert weyl_dim(A7, (1, 0, 0, 0, 0, 0, 0, 0)) == 8
    assert weyl_dim(A7, (2, 0, 0, 0, 0, 0, 0, 0)) == 36
    assert weyl_dim(B3, (h, h, h)) == 8
    assert weyl_dim(D4, (h, h, h, -h)) == 8


def test_weyl_dim_non_dominant():
    with pytest.raises(ValueError):
        weyl_dim(A7, (0, 1, 0, 0, 0, 0, 0, 0))


def test_rank_bounds():
    with pytest.raises(ValueError):
        RootSystem("D", 2)
    with pytest.raises(ValueError):
        RootSystem("E", 6)


def test_parse_weight():
    assert parse_weight("(3,-1,1,-1)/2") == (F(3, 2), F(-1, 2), F(1, 2), F(-1, 2))
    assert parse_weight("1,0;0,0") == (1, 0, 0, 0)


def test_a_type_equivalence():
    assert A7.equivalent((1,) * 8, (0,) * 8)


def test_d4_sign_constraint():
    assert D4.is_dominant((1, 1, 1, -1))
    assert not D4.is_dominant((1, 1, 0, -1))
    assert not B3.is_dominant((1, 1, -1))


int_weights = {
    "A": st.lists(st.integers(-6, 6), min_size=8, max_size=8),
    "D": st.lists(st.integers(-5, 5), min_size=4, max_size=4),
    "B": st.lists(st.integers(-5, 5), min_size=3, max_size=3),
}
SYSTEMS = {"A": A7, "D": D4, "B": B3}


@st.composite
def sys_weight(draw):
    fam = draw(st.sampled_from("ADB"))
    w = draw(int_weights[fam])
    if fam != "A" and draw(st.booleans()):
        w = [x + h for x in w]
    return SYSTEMS[fam], tuple(F(x) for x in w)


@given(sys_weight())
def test_bott_index_counts_negative_roots(sw):
    rs, lam = sw
    v = tuple(a + b for a, b in zip(lam, rs.rho))
    r = bott(rs, lam)
    assert r.vanishing == singular(rs, v)
    if not r.vanishing:
        assert r.index == sum(1 for a in positive_roots(rs) if dot(v, a) < 0) == bott_index(rs, v)
        assert r.dimension == weyl_dim(rs, r.dominant)


@given(sys_weight(), st.data())
def test_bott_dimension_weyl_invariant(sw, data):
    rs, lam = sw
    r = bott(rs, lam)
    # reflect lam + rho by a positive root and compare
    root = data.draw(st.sampled_from(positive_roots(rs)))
    v = tuple(a + b for a, b in zip(lam, rs.rho))
    c = 2 * dot(v, root) / dot(root, root)
    v2 = tuple(x - c * y for x, y in zip(v, root))
    lam2 = tuple(a - b for a, b in zip(v2, rs.rho))
    r2 = bott(rs, lam2)
    assert r.vanishing == r2.vanishing
    if not r.vanishing:
        assert r.dimension == r2.dimension and r.dominant == r2.dominant
        assert (r.index - r2.index) % 2 == 1
