"""Polyhedra: conversion between representations, membership, dimension,
redundancy removal and set equality.
"""
from __future__ import annotations

import threading
from fractions import Fraction

from . import config
from .arith import (ZERO, DimensionError, dot, is_zero, primitive, rank, rref,
                    span_basis, sub, vec)
from .dd import cone_generators
from .lp import Status, feasible_point, maximize, minimize
from .reps import Constraint, HRep, VRep, h_contains

__all__ = [
    "Polyhedron", "h_contains", "v_contains", "dimension", "h_to_v", "v_to_h",
    "is_redundant", "remove_redundancy", "poly_equal", "canonical_hrep",
]


def _zeros(n):
    return tuple(ZERO for _ in range(n))


# -- canonical forms ---------------------------------------------------------

def _canonical_equalities(eqs: list[Constraint], dim: int) -> list[Constraint] | None:
    """RREF of the equality system; ``None`` when it is inconsistent."""
    red, pivots = rref([tuple(c) + (r,) for c, r in eqs], dim) if eqs else ([], [])
    out = []
    for row in red:
        if is_zero(row[:dim]):
            if row[dim] != 0:
                return None
            continue
        p = primitive(row)
        out.append(Constraint(p[:dim], p[dim]))
    return out


def _reduce(c: Constraint, eqs: list[Constraint]) -> Constraint:
    """Eliminate each equality's leading variable from ``c``."""
    coef, rhs = list(c.coef), c.rhs
    for e in eqs:
        lead = next(j for j, a in enumerate(e.coef) if a != 0)
        if coef[lead] != 0:
            f = coef[lead] / e.coef[lead]
            coef = [a - f * b for a, b in zip(coef, e.coef)]
            rhs -= f * e.rhs
    return Constraint(tuple(coef), rhs)


def canonical_hrep(h: HRep) -> HRep:
    """Normalize without any LP: RREF equalities, inequalities reduced modulo
    the equalities and scaled to coprime integers, trivial and duplicate rows
    dropped, everything sorted.
    """
    eqs = _canonical_equalities(list(h.equalities), h.dim)
    if eqs is None:
        return HRep.empty(h.dim)
    ineqs = set()
    for c in h.inequalities:
        c = _reduce(c, eqs)
        if is_zero(c.coef):
            if c.rhs < 0:
                return HRep.empty(h.dim)
            continue
        p = primitive(c.coef + (c.rhs,))
        ineqs.add(Constraint(p[:-1], p[-1]))
    return HRep(h.dim, tuple(sorted(ineqs)), tuple(sorted(eqs)))


def _canonical_vrep(dim, points, rays, lines) -> VRep:
    lines = span_basis(lines)
    return VRep(dim, tuple(sorted(set(points))), tuple(sorted(set(primitive(r) for r in rays))),
                tuple(sorted(lines)))


# -- conversions -------------------------------------------------------------

def h_to_v(h: HRep) -> VRep:
    """Minimal generators: vertices, extreme rays, lineality basis."""
    config.check_size(h.dim, len(h.inequalities) + len(h.equalities), "h_to_v")
    n = h.dim + 1
    # homogenize: z = (t, x), t >= 0, b t - a.x >= 0, f t - e.x = 0
    G = [(Fraction(1),) + _zeros(h.dim)]
    G += [(b,) + tuple(-a for a in coef) for coef, b in h.inequalities]
    E = [(f,) + tuple(-a for a in coef) for coef, f in h.equalities]
    rays, lin = cone_generators(G, E, n)
    points = [tuple(a / r[0] for a in r[1:]) for r in rays if r[0] > 0]
    if not points:
        return VRep(h.dim)
    recession = [r[1:] for r in rays if r[0] == 0]
    lines = [l[1:] for l in lin]
    return _canonical_vrep(h.dim, points, recession, lines)


def v_to_h(v: VRep) -> HRep:
    """Irredundant H-representation: affine-hull equalities plus facets."""
    config.check_size(v.dim, len(v.points) + len(v.rays) + len(v.lines), "v_to_h")
    if v.is_empty:
        return HRep.empty(v.dim)
    n = v.dim + 1
    # y = (y0, yx) encodes the valid inequality -yx.x <= y0
    G = [(Fraction(1),) + p for p in v.points] + [(ZERO,) + r for r in v.rays]
    E = [(ZERO,) + l for l in v.lines]
    rays, lin = cone_generators(G, E, n)
    eqs = [Constraint(tuple(-a for a in y[1:]), y[0]) for y in lin]
    ineqs = [Constraint(tuple(-a for a in y[1:]), y[0]) for y in rays]
    return canonical_hrep(HRep(v.dim, tuple(ineqs), tuple(eqs)))


# -- membership ----------------------------------------------------------------

def v_contains(v: VRep, x) -> bool:
    x = vec(x)
    if len(x) != v.dim:
        raise DimensionError(f"point of length {len(x)} in dimension {v.dim}")
    if v.is_empty:
        return False
    gens = list(v.points) + list(v.rays) + list(v.lines)
    np_, nr = len(v.points), len(v.rays)
    nvar = len(gens)
    ineqs = []
    for j in range(np_ + nr):
        row = [ZERO] * nvar
        row[j] = Fraction(-1)
        ineqs.append((tuple(row), ZERO))
    eqs = [(tuple(Fraction(1) if j < np_ else ZERO for j in range(nvar)), Fraction(1))]
    for i in range(v.dim):
        eqs.append((tuple(g[i] for g in gens), x[i]))
    return feasible_point(HRep(nvar, tuple(ineqs), tuple(eqs))) is not None


# -- implicit equalities and redundancy ----------------------------------------

def _implicit_equalities(h: HRep) -> list[int]:
    """Indices of inequalities that hold with equality on the whole set."""
    out = []
    for i, (coef, rhs) in enumerate(h.inequalities):
        res = minimize(h, coef)
        if res.status is Status.OPTIMAL and res.value == rhs:
            out.append(i)
    return out


def is_redundant(h: HRep, index: int) -> bool:
    if not 0 <= index < len(h.inequalities):
        raise IndexError(f"inequality index {index} out of range")
    coef, rhs = h.inequalities[index]
    rest = HRep(h.dim, h.inequalities[:index] + h.inequalities[index + 1:], h.equalities)
    res = maximize(rest, coef)
    if res.status is Status.INFEASIBLE:
        return True
    return res.status is Status.OPTIMAL and res.value <= rhs


def remove_redundancy(h: HRep) -> HRep:
    """Equivalent irredundant system with implicit equalities promoted."""
    if feasible_point(h) is None:
        return HRep.empty(h.dim)
    implicit = set(_implicit_equalities(h))
    promoted = HRep(
        h.dim,
        tuple(c for i, c in enumerate(h.inequalities) if i not in implicit),
        h.equalities + tuple(c for i, c in enumerate(h.inequalities) if i in implicit),
    )
    current = canonical_hrep(promoted)
    kept = list(current.inequalities)
    i = 0
    while i < len(kept):
        trial = HRep(h.dim, tuple(kept), current.equalities)
        if is_redundant(trial, i):
            del kept[i]
        else:
            i += 1
    return HRep(h.dim, tuple(kept), current.equalities)


# -- dimension -------------------------------------------------------------------

def _dimension_v(v: VRep) -> int:
    if v.is_empty:
        return -1
    base = v.points[0]
    dirs = [sub(p, base) for p in v.points[1:]] + list(v.rays) + list(v.lines)
    return rank(dirs)


def _dimension_h(h: HRep) -> int:
    if feasible_point(h) is None:
        return -1
    implicit = _implicit_equalities(h)
    rows = [c.coef for c in h.equalities] + [h.inequalities[i].coef for i in implicit]
    return h.dim - rank(rows)


def dimension(p: "Polyhedron | HRep | VRep") -> int:
    """Dimension of the affine hull; -1 when empty."""
    if isinstance(p, HRep):
        return _dimension_h(p)
    if isinstance(p, VRep):
        return _dimension_v(p)
    if p.has_v:
        return _dimension_v(p.vrep())
    return _dimension_h(p.hrep())


# -- polyhedron with cached representations ------------------------------------

class Polyhedron:
    """A polyhedron known by its H-rep, its V-rep, or both.

    The missing representation is computed on first use and cached.
    """

    def __init__(self, h: HRep | None = None, v: VRep | None = None):
        if h is None and v is None:
            raise ValueError("a polyhedron needs an H- or a V-representation")
        if h is not None and v is not None and h.dim != v.dim:
            raise DimensionError("H and V representations disagree on dimension")
        self._h = h
        self._v = v
        self._lock = threading.Lock()
        if h is not None and v is not None and config.settings().verify:
            if not _equal_reps(h, v, h, v):
                raise ValueError("H- and V-representations describe different sets")

    @classmethod
    def coerce(cls, obj) -> "Polyhedron":
        if isinstance(obj, Polyhedron):
            return obj
        if isinstance(obj, HRep):
            return cls(h=obj)
        if isinstance(obj, VRep):
            return cls(v=obj)
        raise TypeError(f"cannot make a polyhedron from {type(obj).__name__}")

    @property
    def dim(self) -> int:
        return (self._h or self._v).dim

    @property
    def has_h(self) -> bool:
        return self._h is not None

    @property
    def has_v(self) -> bool:
        return self._v is not None

    def hrep(self) -> HRep:
        with self._lock:
            if self._h is None:
                self._h = v_to_h(self._v)
            return self._h

    def vrep(self) -> VRep:
        with self._lock:
            if self._v is None:
                self._v = h_to_v(self._h)
            return self._v

    def contains(self, x) -> bool:
        if self.has_h:
            return h_contains(self._h, x)
        return v_contains(self._v, x)

    def is_empty(self) -> bool:
        if self.has_v:
            return self._v.is_empty
        return feasible_point(self._h) is None

    def is_bounded(self) -> bool:
        return self.vrep().is_bounded

    def dimension(self) -> int:
        return dimension(self)

    def __repr__(self):
        parts = []
        if self._h is not None:
            parts.append(f"{len(self._h.inequalities)} ineq/{len(self._h.equalities)} eq")
        if self._v is not None:
            parts.append(f"{len(self._v.points)} pts/{len(self._v.rays)} rays/{len(self._v.lines)} lines")
        return f"Polyhedron(dim={self.dim}, {', '.join(parts)})"


def recession_contains(h: HRep, d) -> bool:
    return (all(dot(c, d) <= 0 for c, _ in h.inequalities)
            and all(dot(c, d) == 0 for c, _ in h.equalities))


def lineality_contains(h: HRep, d) -> bool:
    return all(dot(c, d) == 0 for c, _ in h.inequalities + h.equalities)


def v_subset_h(v: VRep, h: HRep) -> bool:
    """Is every point of ``v`` inside ``h``? (Empty ``v`` is a subset of anything.)"""
    if v.is_empty:
        return True
    return (all(h_contains(h, p) for p in v.points)
            and all(recession_contains(h, r) for r in v.rays)
            and all(lineality_contains(h, l) for l in v.lines))


def _equal_reps(ha, va, hb, vb) -> bool:
    return v_subset_h(va, hb) and v_subset_h(vb, ha)


def poly_equal(a, b) -> bool:
    a, b = Polyhedron.coerce(a), Polyhedron.coerce(b)
    if a.dim != b.dim:
        raise DimensionError(f"comparing dimension {a.dim} with {b.dim}")
    va, vb = a.vrep(), b.vrep()
    if va.is_empty or vb.is_empty:
        return va.is_empty and vb.is_empty
    return _equal_reps(a.hrep(), va, b.hrep(), vb)
