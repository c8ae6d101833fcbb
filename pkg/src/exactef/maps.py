"""Coordinate projection (Fourier-Motzkin), affine images, graphs of maps."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import ZERO, DimensionError, RMatrix, is_zero, vec
from .polyhedra import Polyhedron, canonical_hrep, h_to_v, remove_redundancy, v_to_h
from .reps import Constraint, HRep, VRep


@dataclass(frozen=True)
class AffineMap:
    """``x -> matrix @ x + offset``."""

    matrix: RMatrix
    offset: tuple = None

    def __post_init__(self):
        if self.offset is None:
            object.__setattr__(self, "offset", tuple(ZERO for _ in range(self.matrix.nrows)))
        object.__setattr__(self, "offset", vec(self.offset))
        if len(self.offset) != self.matrix.nrows:
            raise DimensionError("offset length must equal the number of matrix rows")

    @classmethod
    def linear(cls, rows, ncols: int | None = None) -> "AffineMap":
        return cls(RMatrix.from_rows(rows, ncols))

    @classmethod
    def identity(cls, n: int) -> "AffineMap":
        return cls(RMatrix.identity(n))

    @property
    def in_dim(self) -> int:
        return self.matrix.ncols

    @property
    def out_dim(self) -> int:
        return self.matrix.nrows

    @property
    def is_linear(self) -> bool:
        return is_zero(self.offset)

    def __call__(self, x) -> tuple:
        return tuple(a + b for a, b in zip(self.matrix.apply(vec(x)), self.offset))

    def then(self, other: "AffineMap") -> "AffineMap":
        """``other`` after ``self``."""
        return AffineMap(other.matrix @ self.matrix, other(self.offset))


@dataclass(frozen=True)
class CoordinateSplit:
    """Kept coordinates (the x block, in output order) and dropped ones."""

    dim: int
    keep: tuple

    def __post_init__(self):
        keep = tuple(int(k) for k in self.keep)
        if not keep:
            raise ValueError("at least one coordinate must be kept")
        if len(set(keep)) != len(keep):
            raise ValueError(f"repeated coordinate in {keep}")
        if any(not 0 <= k < self.dim for k in keep):
            raise IndexError(f"coordinate out of range for dimension {self.dim}: {keep}")
        object.__setattr__(self, "keep", keep)

    @property
    def drop(self) -> tuple:
        return tuple(i for i in range(self.dim) if i not in self.keep)

    def as_map(self) -> AffineMap:
        """The coordinate-erasing linear map onto the kept block."""
        rows = [[1 if j == k else 0 for j in range(self.dim)] for k in self.keep]
        return AffineMap.linear(rows, self.dim)


def _substitute(c: Constraint, eq: Constraint, j: int) -> Constraint:
    if c.coef[j] == 0:
        return c
    f = c.coef[j] / eq.coef[j]
    return Constraint(tuple(a - f * b for a, b in zip(c.coef, eq.coef)), c.rhs - f * eq.rhs)


def _fm_step(h: HRep, j: int) -> HRep:
    """Eliminate variable ``j``; the column stays (all zeros)."""
    pivot = next((e for e in h.equalities if e.coef[j] != 0), None)
    if pivot is not None:
        eqs = tuple(_substitute(e, pivot, j) for e in h.equalities if e is not pivot)
        ineqs = tuple(_substitute(c, pivot, j) for c in h.inequalities)
        return HRep(h.dim, ineqs, eqs)
    pos = [c for c in h.inequalities if c.coef[j] > 0]
    neg = [c for c in h.inequalities if c.coef[j] < 0]
    out = [c for c in h.inequalities if c.coef[j] == 0]
    for p in pos:
        for n in neg:
            lp, ln = -n.coef[j], p.coef[j]
            out.append(Constraint(tuple(lp * a + ln * b for a, b in zip(p.coef, n.coef)),
                                  lp * p.rhs + ln * n.rhs))
    return HRep(h.dim, tuple(out), h.equalities)


def _select(h: HRep, cols: Sequence[int]) -> HRep:
    pick = lambda c: Constraint(tuple(c.coef[i] for i in cols), c.rhs)
    return HRep(len(cols), tuple(map(pick, h.inequalities)), tuple(map(pick, h.equalities)))


def project_coords(h: HRep, split: CoordinateSplit) -> HRep:
    """``{x : exists w, (w, x) in h}`` over the kept coordinates, in keep order.

    Dropped variables are eliminated in increasing index order, with LP-based
    redundancy pruning after every step.
    """
    if split.dim != h.dim:
        raise DimensionError(f"split for dimension {split.dim} applied to dimension {h.dim}")
    current = remove_redundancy(h)
    if _infeasible(current):
        return HRep.empty(len(split.keep))
    for j in split.drop:
        current = remove_redundancy(_fm_step(current, j))
        if _infeasible(current):
            return HRep.empty(len(split.keep))
    return canonical_hrep(_select(current, split.keep))


def _infeasible(h: HRep) -> bool:
    return any(is_zero(c.coef) and c.rhs < 0 for c in h.inequalities)


def image(p, amap: AffineMap) -> Polyhedron:
    """Exact image of a polyhedron, via its generators."""
    p = Polyhedron.coerce(p)
    if amap.in_dim != p.dim:
        raise DimensionError(f"map from dimension {amap.in_dim} applied to dimension {p.dim}")
    v = p.vrep()
    if v.is_empty:
        return Polyhedron(h=HRep.empty(amap.out_dim), v=VRep(amap.out_dim))
    M = amap.matrix
    points = [amap(x) for x in v.points]
    rays = [r for r in (M.apply(r) for r in v.rays) if not is_zero(r)]
    lines = [l for l in (M.apply(l) for l in v.lines) if not is_zero(l)]
    h = v_to_h(VRep(amap.out_dim, points, rays, lines))
    return Polyhedron(h=h, v=h_to_v(h))


def graph_polyhedron(amap: AffineMap, domain: HRep) -> HRep:
    """``{(x, x') : x in domain, x' = M x + c}`` in dimension ``in + out``."""
    if domain.dim != amap.in_dim:
        raise DimensionError(f"domain dimension {domain.dim} != map input {amap.in_dim}")
    n, m = amap.in_dim, amap.out_dim
    pad = tuple(Fraction(0) for _ in range(m))
    ineqs = [Constraint(c.coef + pad, c.rhs) for c in domain.inequalities]
    eqs = [Constraint(c.coef + pad, c.rhs) for c in domain.equalities]
    for i in range(m):
        unit = tuple(Fraction(1) if k == i else Fraction(0) for k in range(m))
        eqs.append(Constraint(tuple(-a for a in amap.matrix.row(i)) + unit, amap.offset[i]))
    return HRep(n + m, tuple(ineqs), tuple(eqs))
