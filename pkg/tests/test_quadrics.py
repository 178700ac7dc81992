from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from modulik3 import quadrics as qd
from strategies import rationals


def test_disc_diagonal():
    p = qd.QuadricPencil(qd.identity(8), qd.diag(range(1, 9)))
    f = qd.pencil_disc(p)
    for a in range(1, 9):
        assert f(a, 1) == 0
    assert f(1, 0) == 1
    assert f.coeffs[-1] == 1


def test_disc_2x2():
    f = qd.pencil_disc(qd.QuadricPencil(((0, 1), (1, 0)), qd.identity(2)))
    assert f.coeffs == (1, 0, -1)


def test_swap_even_size():
    p = qd.QuadricPencil(qd.identity(4), qd.diag([1, 2, 3, 5]))
    assert qd.pencil_disc(p.swapped()) == qd.pencil_disc(p).swap()


def test_is_simple_examples():
    assert qd.is_simple(qd.QuadricPencil(qd.diag(range(1, 9)), qd.identity(8))) == (True, 3)
    assert qd.is_simple(qd.QuadricPencil(qd.diag([1, 1, 3, 4, 5, 6, 7, 8]), qd.identity(8))) == (False, None)
    assert qd.is_simple(qd.QuadricPencil(qd.diag(range(1, 13)), qd.identity(12))) == (True, 5)


def test_degenerate_pencil_error():
    z = qd.diag([1, 0, 0])
    with pytest.raises(qd.DegeneratePencilError, match="degenerate pencil"):
        qd.is_simple(qd.QuadricPencil(z, z))


def test_members():
    m = qd.degenerate_members(qd.QuadricPencil(qd.identity(8), qd.diag(range(1, 9))))
    assert [x.root for x in m] == list(range(1, 9))
    assert all(x.corank == 1 for x in m)
    rep = qd.degenerate_members(qd.QuadricPencil(qd.identity(8), qd.diag([1, 1, 3, 4, 5, 6, 7, 8])))
    assert rep[0].root == 1 and rep[0].corank == 2
    two = qd.degenerate_members(qd.QuadricPencil(qd.identity(2), ((0, 1), (1, 0))))
    assert len(two) == 2 and all(x.corank == 1 for x in two)


def test_irrational_members():
    m = qd.degenerate_members(qd.QuadricPencil(qd.identity(2), ((1, 1), (1, -1))))
    assert len(m) == 1 and m[0].count == 2 and m[0].corank == 1


def test_member_at_infinity():
    m = qd.degenerate_members(qd.QuadricPencil(qd.diag([1, 0]), qd.identity(2)))
    assert [str(x.root) for x in m] == ["1", "inf"]


def test_load_pencil():
    text = "1 0\n0 1\n\n1/2 0\n0 3\n"
    p = qd.load_pencil(text)
    assert p.Q2[0][0] == F(1, 2)
    p2 = qd.load_pencil("diag 1 1 1\n---\ndiag 1 2 3\n")
    assert p2.size == 3


def test_non_symmetric_rejected():
    with pytest.raises(ValueError):
        qd.QuadricPencil(((1, 2), (0, 1)), qd.identity(2))


def test_divisor_table():
    e0 = qd.divisor_class("E_{}")
    assert qd.intersect(e0, qd.divisor_class("e_1")) == 4
    assert qd.intersect(e0, qd.divisor_class("E_{1,2,3}")) == 2
    assert qd.intersect(e0, qd.divisor_class("E_{1,2,3,4,5}")) == 0
    H = qd.divisor_class("H_M")
    assert qd.intersect(H, H) == 6
    assert all(qd.intersect(H, qd.e_class({i})) == 0 for i in range(1, 8))


def test_all_64_sextic_curves():
    sets = list(qd.odd_subsets())
    assert len(sets) == 64
    for I in sets:
        e = qd.e_class(I)
        assert qd.intersect(e, e) == -2
        assert qd.intersect(qd.H_CLASS, e) == 6


def test_canonical_class():
    assert qd.divisor_class("K") == qd.H_CLASS.scale(-1)


def test_even_sets():
    with pytest.raises(ValueError):
        qd.divisor_class("E_{1,2}")
    assert qd.divisor_class("E_{1,2}", complement=True) == qd.e_class({3, 4, 5, 6, 7})
    assert qd.e_class(range(1, 8)) == qd.e_class(())


def test_model_h2():
    assert qd.model_h2("segre_ci") == 24
    assert qd.model_h2("nodal_sextic") == 24
    assert qd.model_h2("sextic_hyperplane") == 6
    with pytest.raises(ValueError):
        qd.model_h2("cubic")


sym_entries = st.lists(rationals, min_size=6, max_size=6)


def _sym3(e):
    return ((e[0], e[1], e[2]), (e[1], e[3], e[4]), (e[2], e[4], e[5]))


@given(sym_entries, sym_entries, st.lists(rationals, min_size=20, max_size=20))
def test_disc_evaluation_agrees_with_interpolation(a, b, ts):
    p = qd.QuadricPencil(_sym3(a), _sym3(b))
    f = qd.pencil_disc(p)
    for t in ts:
        assert f(t, 1) == qd.det(p.member(t, 1))


@given(st.lists(st.integers(-6, 6), min_size=4, max_size=4, unique=True),
       st.lists(st.integers(-3, 3), min_size=16, max_size=16))
def test_is_simple_invariant_under_basis_change(roots, entries):
    A = tuple(tuple(F(entries[4 * i + j]) for j in range(4)) for i in range(4))
    assume(qd.det(A) != 0)
    p = qd.QuadricPencil(qd.identity(4), qd.diag(roots))
    q = qd.QuadricPencil(qd.transform(A, p.Q1), qd.transform(A, p.Q2))
    assert qd.is_simple(p) == qd.is_simple(q) == (True, 1)


@given(st.lists(st.integers(-4, 4), min_size=4, max_size=4),
       st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)))
def test_is_simple_invariant_under_reparametrization(roots, m):
    a, b, c, d = m
    assume(a * d - b * c != 0)
    p = qd.QuadricPencil(qd.identity(4), qd.diag(roots))
    q = qd.QuadricPencil(p.member(a, -b), p.member(-c, d))
    try:
        expected = qd.is_simple(p)
    except qd.DegeneratePencilError:
        return
    assert qd.is_simple(q) == expected


@given(st.sets(st.integers(1, 7), max_size=7), st.sets(st.integers(1, 7), max_size=7))
def test_intersection_symmetric(I, J):
    a, b = qd.e_class(I, complement=True), qd.e_class(J, complement=True)
    assert qd.intersect(a, b) == qd.intersect(b, a)
