import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from exactef import (AffineMap, CoordinateSplit, HRep, Polyhedron, VRep, feasible_point,
                     graph_polyhedron, h_contains, h_to_v, image, poly_equal, project_coords)
from exactef.arith import DimensionError
from randgen import random_hrep


# -- splits and maps ---------------------------------------------------------------

def test_split_validation():
    s = CoordinateSplit(4, (1, 2, 3))
    assert s.drop == (0,)
    with pytest.raises(ValueError):
        CoordinateSplit(3, (1, 1))
    with pytest.raises(IndexError):
        CoordinateSplit(3, (3,))


def test_map_application_and_composition(map_A):
    assert map_A((2, 0, 0, 0)) == (8, 10, 6)
    assert map_A.is_linear
    shift = AffineMap.linear([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).then(AffineMap.identity(3))
    assert shift((1, 2, 3)) == (1, 2, 3)
    f = AffineMap(map_A.matrix, (1, 0, 0))
    assert not f.is_linear and f((3, 9, 9, 9)) == (13, 15, 9)
    with pytest.raises(DimensionError):
        AffineMap(map_A.matrix, (1, 2))


# -- projection ----------------------------------------------------------------------

def test_project_U_onto_x(U):
    h = project_coords(U.hrep(), CoordinateSplit(4, (1, 2, 3)))
    assert h.dim == 3 and not h.inequalities and not h.equalities


def test_project_eq10_onto_x1(X_h):
    h = project_coords(X_h.hrep(), CoordinateSplit(3, (0,)))
    assert sorted(h.inequalities) == [((-1,), -8), ((1,), 12)]
    assert not h.equalities
    # oracle: drop coordinates of the V-rep points
    pts = {p[0] for p in h_to_v(X_h.hrep()).points}
    assert pts == {8, 12}


def test_project_keep_all_is_identity(X_h):
    h = project_coords(X_h.hrep(), CoordinateSplit(3, (0, 1, 2)))
    assert poly_equal(h, X_h)


def test_project_reorders_kept_block(X_h):
    h = project_coords(X_h.hrep(), CoordinateSplit(3, (2, 0)))
    assert set(h_to_v(h).points) == {(6, 8), (9, 12)}


def test_project_infeasible():
    h = HRep.from_rows(2, [(1, 0), (-1, 0)], [0, -1])
    out = project_coords(h, CoordinateSplit(2, (1,)))
    assert h_to_v(out).is_empty


# -- image -------------------------------------------------------------------------------

def test_image_U_under_A(U, map_A, X_v):
    img = image(U, map_A)
    assert poly_equal(img, X_v)
    assert set(img.vrep().points) == {(8, 10, 6), (12, 15, 9)}


def test_image_identity_and_zero(X_v):
    assert poly_equal(image(X_v, AffineMap.identity(3)), X_v)
    zero = AffineMap.linear([[0, 0, 0]] * 3)
    assert image(X_v, zero).vrep().points == ((0, 0, 0),)
    off = AffineMap(zero.matrix, (1, 2, 3))
    assert image(X_v, off).vrep().points == ((1, 2, 3),)


def test_image_dimension_checked(X_v, map_A):
    with pytest.raises(DimensionError):
        image(X_v, map_A)


def test_image_keeps_nonzero_lines():
    p = VRep(2, [(0, 0)], lines=[(1, 1)])
    img = image(p, AffineMap.linear([[1, 0]]))
    assert img.vrep().lines == ((1,),)


# -- graph polyhedron ---------------------------------------------------------------------

def test_graph_identity_on_interval():
    dom = HRep.from_rows(1, [(1,), (-1,)], [1, 0])
    g = graph_polyhedron(AffineMap.identity(1), dom)
    assert g.dim == 2
    assert h_contains(g, (F(1, 2), F(1, 2)))
    assert not h_contains(g, (F(1, 2), F(1, 3)))
    assert not h_contains(g, (2, 2))


def test_graph_then_project_matches_image(U, map_A, X_v):
    g = graph_polyhedron(map_A, U.hrep())
    assert g.dim == 7
    proj = project_coords(g, CoordinateSplit(7, (4, 5, 6)))
    assert poly_equal(proj, X_v)


def test_graph_zero_map_fixes_output(X_h):
    zero = AffineMap(AffineMap.linear([[0, 0, 0]] * 2).matrix, (5, -1))
    g = graph_polyhedron(zero, X_h.hrep())
    proj = project_coords(g, CoordinateSplit(5, (3, 4)))
    assert h_to_v(proj).points == ((5, -1),)


# -- properties --------------------------------------------------------------------------

@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_fm_equals_generator_route(seed):
    rng = random.Random(seed)
    dim = rng.randint(2, 4)
    h = random_hrep(rng, dim, rng.randint(1, 6))
    split = CoordinateSplit(dim, tuple(sorted(rng.sample(range(dim), rng.randint(1, dim - 1)))))
    assert poly_equal(project_coords(h, split), image(Polyhedron(h=h), split.as_map()))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_projection_neither_cuts_nor_adds(seed):
    rng = random.Random(seed)
    dim = rng.randint(2, 4)
    h = random_hrep(rng, dim, rng.randint(2, 6))
    split = CoordinateSplit(dim, tuple(range(1, dim)))
    proj = project_coords(h, split)
    v = h_to_v(h)
    for p in v.points:
        assert h_contains(proj, tuple(p[k] for k in split.keep))
    for x in h_to_v(proj).points:
        fiber = HRep(1, tuple(((c[0],), r - sum(a * b for a, b in zip(c[1:], x)))
                              for c, r in h.inequalities))
        assert feasible_point(fiber) is not None


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_image_composition(seed):
    rng = random.Random(seed)
    dim = rng.randint(1, 3)
    pts = [tuple(rng.randint(-3, 3) for _ in range(dim)) for _ in range(rng.randint(1, 4))]
    p = VRep(dim, pts, rays=[(1,) + (0,) * (dim - 1)] if rng.random() < 0.5 else [])
    mid = rng.randint(1, 3)
    f = AffineMap(AffineMap.linear([[rng.randint(-2, 2) for _ in range(dim)] for _ in range(mid)]).matrix,
                  tuple(rng.randint(-2, 2) for _ in range(mid)))
    g = AffineMap.linear([[rng.randint(-2, 2) for _ in range(mid)] for _ in range(rng.randint(1, 3))])
    assert poly_equal(image(image(p, f), g), image(p, f.then(g)))
