import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from exactef import (HRep, Polyhedron, VRep, dimension, h_contains, h_to_v, is_redundant,
                     poly_equal, remove_redundancy, v_contains, v_to_h)
from exactef.arith import DimensionError
from exactef.polyhedra import canonical_hrep
from oracles import affinely_independent, satisfies

SEPARATING_POINT = (F(45, 2), -50, 100)


# -- membership ------------------------------------------------------------------

def test_h_contains_examples(X_h):
    h = X_h.hrep()
    assert h_contains(h, (8, 10, 6))
    assert not h_contains(h, SEPARATING_POINT)
    assert h_contains(HRep(3), SEPARATING_POINT)


def test_h_contains_dimension_checked(X_h):
    with pytest.raises(DimensionError):
        h_contains(X_h.hrep(), (1, 2))


def test_v_contains_examples(X_v):
    v = X_v.vrep()
    assert v_contains(v, (10, F(25, 2), F(15, 2)))
    assert not v_contains(v, SEPARATING_POINT)
    assert v_contains(VRep(2, [(3, -1)]), (3, -1))


def test_v_contains_with_rays_and_lines():
    v = VRep(2, [(0, 0)], rays=[(1, 0)], lines=[(0, 1)])
    assert v_contains(v, (5, -7))
    assert not v_contains(v, (-1, 0))


# -- dimension -------------------------------------------------------------------

def test_dimension_of_X(X_v, X_h):
    assert dimension(X_v) == 1
    assert dimension(X_h) == 1


def test_dimension_of_U(U):
    assert dimension(U) == 4
    # oracle: five affinely independent feasible points
    pts = [(2, 0, 0, 0), (3, 0, 0, 0), (2, 1, 0, 0), (2, 0, 1, 0), (2, 0, 0, 1)]
    ineqs = [(c, r) for c, r in U.hrep().inequalities]
    assert all(satisfies(ineqs, [], p) for p in pts)
    assert affinely_independent(pts) == 5


def test_dimension_empty():
    h = HRep.from_rows(1, [(1,), (-1,)], [0, -1])
    assert dimension(h) == -1
    assert h_to_v(h).is_empty


# -- conversion --------------------------------------------------------------------

def test_h_to_v_eq10(X_h):
    v = h_to_v(X_h.hrep())
    assert set(v.points) == {(8, 10, 6), (12, 15, 9)}
    assert v.rays == () and v.lines == ()


def test_h_to_v_U(U):
    v = h_to_v(U.hrep())
    assert set(v.points) == {(2, 0, 0, 0), (3, 0, 0, 0)}
    assert v.rays == ()
    assert set(v.lines) == {(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)}
    # brute-force cross-check: a grid of points satisfies U exactly when
    # the generators reproduce it
    for w, a, b in itertools.product((F(3, 2), 2, F(5, 2), 3, 4), (-3, 0, 7), (-1, 5)):
        p = (w, a, b, 1)
        assert v_contains(v, p) == h_contains(U.hrep(), p)


def test_h_to_v_unit_interval():
    v = h_to_v(HRep.from_rows(1, [(1,), (-1,)], [1, 0]))
    assert set(v.points) == {(0,), (1,)}


def test_v_to_h_segment(X_v):
    h = v_to_h(X_v.vrep())
    assert len(h.equalities) == 2 and len(h.inequalities) == 2
    # segment parameterization x = (8+4t, 10+5t, 6+3t)
    for t in (0, F(1, 3), 1):
        assert h_contains(h, (8 + 4 * t, 10 + 5 * t, 6 + 3 * t))
    for t in (F(-1, 10), F(11, 10)):
        assert not h_contains(h, (8 + 4 * t, 10 + 5 * t, 6 + 3 * t))
    assert poly_equal(h_to_v(h), X_v)


def test_v_to_h_point_and_square():
    h = v_to_h(VRep(2, [(1, 2)]))
    assert len(h.equalities) == 2 and not h.inequalities
    sq = v_to_h(VRep(2, [(0, 0), (1, 0), (0, 1), (1, 1)]))
    assert len(sq.inequalities) == 4 and not sq.equalities


def test_v_to_h_empty():
    assert dimension(v_to_h(VRep(2))) == -1


# -- redundancy ------------------------------------------------------------------

def test_is_redundant_examples(X_h):
    h = HRep.from_rows(1, [(1,), (1,)], [1, 2])
    assert is_redundant(h, 1)
    assert not is_redundant(h, 0)
    eq10 = X_h.hrep()
    idx = eq10.inequalities.index(((0, -1, 0), -10))
    assert is_redundant(eq10, idx)


def test_is_redundant_index_checked():
    with pytest.raises(IndexError):
        is_redundant(HRep(1), 0)


def test_remove_redundancy_eq10(X_h):
    r = remove_redundancy(X_h.hrep())
    assert (len(r.inequalities), len(r.equalities)) == (2, 2)
    assert poly_equal(r, X_h)


def test_remove_redundancy_U(U):
    r = remove_redundancy(U.hrep())
    assert (len(r.inequalities), len(r.equalities)) == (2, 0)


def test_remove_redundancy_duplicates():
    h = HRep.from_rows(2, [(1, 0), (2, 0), (0, 1), (-1, 0)], [1, 2, 1, 0])
    r = remove_redundancy(h)
    assert len(r.inequalities) == 3


def test_canonical_hrep_infeasible_equalities():
    h = HRep.from_rows(1, [], [], [(1,), (1,)], [0, 1])
    assert dimension(canonical_hrep(h)) == -1


# -- equality -----------------------------------------------------------------------

def test_poly_equal_examples(X_h, X_v):
    assert poly_equal(X_h, X_v)
    assert not poly_equal(X_v, HRep(3))
    assert poly_equal(X_v, X_v)


def test_poly_equal_dimension_mismatch(X_v, U):
    with pytest.raises(DimensionError):
        poly_equal(X_v, U)


def test_polyhedron_rejects_inconsistent_pair(X_h):
    with pytest.raises(ValueError):
        Polyhedron(h=X_h.hrep(), v=VRep(3, [(0, 0, 0)]))


def test_unbounded_reporting(U, X_v):
    assert not U.is_bounded()
    assert X_v.is_bounded()


# -- properties -----------------------------------------------------------------------

coords = st.integers(-5, 5)


@st.composite
def vreps(draw, max_dim=4, max_points=6):
    dim = draw(st.integers(1, max_dim))
    pts = draw(st.lists(st.tuples(*[coords] * dim), min_size=1, max_size=max_points))
    return VRep(dim, pts)


@st.composite
def hreps(draw, max_dim=3, max_rows=6):
    dim = draw(st.integers(1, max_dim))
    row = st.tuples(*[coords] * dim).filter(any)
    ineqs = draw(st.lists(st.tuples(row, coords), max_size=max_rows))
    return HRep(dim, tuple(ineqs))


@settings(max_examples=40, deadline=None)
@given(vreps())
def test_round_trip(v):
    assert poly_equal(v, h_to_v(v_to_h(v)))


@settings(max_examples=40, deadline=None)
@given(vreps(), st.lists(st.tuples(coords, coords, coords, coords), min_size=1, max_size=4))
def test_h_and_v_membership_agree(v, probes):
    h = v_to_h(v)
    for probe in probes:
        x = tuple(F(a, 2) for a in probe[:v.dim])
        assert h_contains(h, x) == v_contains(v, x)


@settings(max_examples=40, deadline=None)
@given(hreps())
def test_remove_redundancy_preserves_set(h):
    r = remove_redundancy(h)
    assert poly_equal(h, r)
    for i in range(len(r.inequalities)):
        assert not is_redundant(r, i)


@settings(max_examples=40, deadline=None)
@given(hreps())
def test_dimension_is_representation_independent(h):
    assert dimension(h) == dimension(h_to_v(h))
