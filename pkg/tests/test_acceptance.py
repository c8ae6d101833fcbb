"""The eight acceptance criteria, each with its runtime limit.

Every test records one PASS/FAIL line; the lines are printed in the
terminal summary and also written to stdout (visible with ``-s``).
"""
import random
import time
from contextlib import contextmanager
from fractions import Fraction as F

import pytest

import conftest
from exactef import (CoordinateSplit, GramSingular, HRep, Polyhedron, RMatrix, ReductionInstance,
                     check_ef_iff, check_ef_map, check_ef_standard, h_contains, h_to_v, image,
                     lemma9_size_report, mat_mul, normalize_graph, poly_equal, project_coords,
                     remove_redundancy, solve, v_contains, verify_equivalence)
from exactef.lp import LinearProgram
from oracles import brute_min, gauss_solve
from randgen import random_bounded_hrep, random_ef_instance, random_hrep

X_SPLIT = CoordinateSplit(4, (1, 2, 3))


@contextmanager
def criterion(number, title, limit):
    """Time the block, then record and assert a PASS/FAIL line."""
    start = time.perf_counter()
    failure = None
    try:
        yield
    except AssertionError as exc:
        failure = exc
    elapsed = time.perf_counter() - start
    within = elapsed < limit
    ok = failure is None and within
    why = "" if ok else (f" ({failure})" if failure else f" (over {limit}s limit)")
    line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {elapsed:.2f}s{why}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    if failure is not None:
        raise failure
    assert within, f"{title} took {elapsed:.2f}s, limit {limit}s"


def test_1_example1_separation(U, X_v, map_A):
    with criterion(1, "Example 1 separation", 1.0):
        assert check_ef_map(U, X_v, map_A).holds is True
        assert check_ef_standard(U.hrep(), X_v, X_SPLIT).holds is False
        point = (F(45, 2), F(-50), F(100))
        assert h_contains(project_coords(U.hrep(), X_SPLIT), point)
        assert not v_contains(X_v.vrep(), point)


def test_2_representation_equivalence(X_h, X_v):
    with criterion(2, "representation equivalence", 1.0):
        v = h_to_v(X_h.hrep())
        assert set(v.points) == {(8, 10, 6), (12, 15, 9)} and len(v.points) == 2
        assert v.rays == () and v.lines == ()
        assert poly_equal(v, X_v)
        r = remove_redundancy(X_h.hrep())
        assert (len(r.inequalities), len(r.equalities)) == (2, 2)


def test_3_remark1_equivalence(reduction_instance):
    inst = reduction_instance
    rng = random.Random(3)
    with criterion(3, "LP0/LP1/LP2 equivalence on 100 objectives", 10.0):
        first = verify_equivalence(inst)
        assert first.lp0.value == 24 and first.retrieved_x == (8, 10, 6)
        for _ in range(100):
            alpha = tuple(rng.randint(-9, 9) for _ in range(3))
            r = verify_equivalence(ReductionInstance(inst.Y, inst.graph, alpha, inst.X))
            assert r.lp0.value == r.lp1.value == r.lp2.value, alpha
            assert r.retrieved_optimal, alpha


def test_4_definitional_agreement():
    rng = random.Random(4)
    with criterion(4, "standard and iff agree on 200 instances", 60.0):
        for k in range(200):
            ext, target, split = random_ef_instance(rng, max_dim=4)
            a = check_ef_standard(ext, target, split).holds
            b = check_ef_iff(ext, target, split).holds
            assert a == b, f"instance {k}"


def test_5_lp_oracle():
    rng = random.Random(5)
    with criterion(5, "simplex matches vertex enumeration on 100 programs", 60.0):
        for k in range(100):
            h = random_bounded_hrep(rng, max_dim=3, max_rows=8)
            c = tuple(rng.randint(-5, 5) for _ in range(h.dim))
            out = solve(LinearProgram(c, h))
            assert out.optimal
            assert out.value == brute_min(h.dim, h.inequalities, c), f"program {k}"


def test_6_fm_dd_cross_check():
    rng = random.Random(6)
    with criterion(6, "projection equals generator image on 100 systems", 120.0):
        for k in range(100):
            dim = rng.randint(2, 5)
            h = random_hrep(rng, dim, rng.randint(1, 7))
            keep = tuple(sorted(rng.sample(range(dim), rng.randint(1, dim - 1))))
            split = CoordinateSplit(dim, keep)
            assert poly_equal(project_coords(h, split), image(Polyhedron(h=h), split.as_map())), k


def test_7_normalize_graph():
    with criterion(7, "graph normalization", 1.0):
        # Example 1 coupling: B = I, so cbar = -C and bbar = b
        B, C = RMatrix.identity(3), RMatrix.from_rows([[-4], [-5], [-3]])
        g = normalize_graph(B, C, (0, 0, 0))
        assert g.cbar.data == ((4,), (5,), (3,)) and g.bbar == (0, 0, 0)
        assert mat_mul(B, g.cbar) == -C
        # identity/constant: B = 2I, C = 0, b = (2, -6) gives cbar = 0, bbar = (1, -3)
        g = normalize_graph(RMatrix.from_rows([[2, 0], [0, 2]]), RMatrix.zeros(2, 1), (2, -6))
        assert g.cbar == RMatrix.zeros(2, 1)
        assert g.bbar == gauss_solve([[4, 0], [0, 4]], [4, -12]) == (1, -3)
        with pytest.raises(GramSingular):
            normalize_graph(RMatrix.from_rows([[1, 1], [1, 1]]), RMatrix.zeros(2, 1), (0, 0))


def test_8_size_report(U, X_h):
    with criterion(8, "size report", 1.0):
        s = lemma9_size_report(U.hrep(), X_h.hrep())
        assert (s.ext_inequalities, s.ext_equalities) == (2, 0)
        assert (s.target_inequalities, s.target_equalities) == (2, 2)
        assert s.ext_ge_target is False
