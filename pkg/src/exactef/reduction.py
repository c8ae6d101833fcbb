"""Optimizing over X through an affine coupling with Y.

The coupling ``L = {(x, y) : B x + C y = b}`` is normalized to
``x = cbar y + bbar`` with ``cbar = -(B^T B)^{-1} B^T C`` and
``bbar = (B^T B)^{-1} B^T b``. Three problems are compared:

* LP0: minimize ``alpha . x`` over X;
* LP1: the same objective over ``{(x, y) in L : x in X, y in Y}``;
* LP2: minimize ``(alpha^T cbar) y`` over Y, then read ``x`` off the graph.

"Redundant coupling" is taken to mean that the map ``y -> cbar y + bbar``
sends Y into X and reaches every generator of X. That is the weakest
reading under which LP0 and LP2 agree for every objective.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import ZERO, DimensionError, RMatrix, dot, format_vector as fv, gram_solve, rank, sub, vec
from .lp import LpOutcome, Status, feasible_point, minimize
from .maps import AffineMap, image
from .polyhedra import Polyhedron, poly_equal, recession_contains, lineality_contains
from .reps import Constraint, HRep, h_contains

REDUNDANCY_READING = (
    "coupling is redundant when y -> cbar*y + bbar maps Y into X and every "
    "generator of X has a preimage in Y"
)


class ConsistencyWarning(UserWarning):
    pass


@dataclass(frozen=True)
class AffineGraph:
    B: RMatrix
    C: RMatrix
    b: tuple
    cbar: RMatrix
    bbar: tuple
    warnings: tuple = ()

    @property
    def p(self) -> int:
        return self.B.ncols

    @property
    def q(self) -> int:
        return self.C.ncols

    def as_map(self) -> AffineMap:
        return AffineMap(self.cbar, self.bbar)

    def retrieve(self, y) -> tuple:
        return self.as_map()(y)

    def contains(self, x, y) -> bool:
        lhs = [bx + cy for bx, cy in zip(self.B.apply(vec(x)), self.C.apply(vec(y)))]
        return lhs == list(self.b)


def normalize_graph(B: RMatrix, C: RMatrix, b) -> AffineGraph:
    b = vec(b)
    if B.nrows != C.nrows or len(b) != B.nrows:
        raise DimensionError(f"B {B.shape}, C {C.shape}, b of length {len(b)}")
    bcol = RMatrix(tuple((x,) for x in b), 1)
    cbar = -gram_solve(B, C)
    bbar = gram_solve(B, bcol).column(0)
    warnings = []
    full = [tuple(B.row(i)) + tuple(C.row(i)) for i in range(B.nrows)]
    if rank(full) < rank([r + (bi,) for r, bi in zip(full, b)]):
        warnings.append(ConsistencyWarning("B x + C y = b has no solution: L is empty"))
    elif rank(B) < rank([tuple(B.row(i)) + tuple(C.row(i)) + (b[i],) for i in range(B.nrows)]):
        warnings.append(ConsistencyWarning(
            "some y have no x with B x + C y = b: L is a strict subset of the normalized graph"))
    return AffineGraph(B, C, b, cbar, bbar, tuple(warnings))


@dataclass(frozen=True)
class TwoStepResult:
    x: tuple
    y: tuple
    value: Fraction
    reduced_objective: tuple
    constant: Fraction


def two_step_solve(Y, graph: AffineGraph, alpha) -> TwoStepResult | LpOutcome:
    """Solve LP2 over Y and retrieve x; non-optimal outcomes pass through."""
    Y = Polyhedron.coerce(Y)
    alpha = vec(alpha)
    if len(alpha) != graph.p or Y.dim != graph.q:
        raise DimensionError("alpha, Y and the graph have inconsistent dimensions")
    reduced = tuple(dot(alpha, graph.cbar.column(j)) for j in range(graph.q))
    constant = dot(alpha, graph.bbar)
    res = minimize(Y.hrep(), reduced)
    if not res.optimal:
        return res
    x = graph.retrieve(res.point)
    return TwoStepResult(x, res.point, dot(alpha, x), reduced, constant)


@dataclass(frozen=True)
class ReductionInstance:
    Y: Polyhedron
    graph: AffineGraph
    alpha: tuple
    X: Polyhedron | None = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", vec(self.alpha))
        if self.graph.p != len(self.alpha):
            raise DimensionError("alpha length must equal the number of columns of B")
        if self.Y.dim != self.graph.q:
            raise DimensionError("Y dimension must equal the number of columns of C")
        if self.X is not None and self.X.dim != self.graph.p:
            raise DimensionError("X dimension must equal the number of columns of B")


@dataclass(frozen=True)
class Leg:
    status: Status
    value: Fraction | None = None
    point: tuple | None = None


@dataclass(frozen=True)
class EquivalenceReport:
    lp0: Leg
    lp1: Leg
    lp2: Leg
    retrieved_x: tuple | None
    retrieved_y: tuple | None
    retrieved_optimal: bool
    reading: str = REDUNDANCY_READING
    notes: tuple = field(default=())

    @property
    def values_equal(self) -> bool:
        legs = (self.lp0, self.lp1, self.lp2)
        if all(l.status is Status.OPTIMAL for l in legs):
            return len({l.value for l in legs}) == 1
        return len({l.status for l in legs}) == 1

    @property
    def equivalent(self) -> bool:
        if self.lp0.status is Status.OPTIMAL:
            return self.values_equal and self.retrieved_optimal
        return self.values_equal


def _product_lp1(X: HRep, Y: HRep, graph: AffineGraph) -> HRep:
    p, q = graph.p, graph.q
    zq = tuple(ZERO for _ in range(q))
    zp = tuple(ZERO for _ in range(p))
    ineqs = [Constraint(c.coef + zq, c.rhs) for c in X.inequalities]
    ineqs += [Constraint(zp + c.coef, c.rhs) for c in Y.inequalities]
    eqs = [Constraint(c.coef + zq, c.rhs) for c in X.equalities]
    eqs += [Constraint(zp + c.coef, c.rhs) for c in Y.equalities]
    eqs += [Constraint(graph.B.row(i) + graph.C.row(i), graph.b[i]) for i in range(graph.B.nrows)]
    return HRep(p + q, tuple(ineqs), tuple(eqs))


def verify_equivalence(inst: ReductionInstance) -> EquivalenceReport:
    if inst.X is None:
        raise ValueError("LP0 needs X")
    X, Y, graph, alpha = inst.X.hrep(), inst.Y, inst.graph, inst.alpha
    r0 = minimize(X, alpha)
    lp0 = Leg(r0.status, r0.value, r0.point)
    r1 = minimize(_product_lp1(X, Y.hrep(), graph), alpha + tuple(ZERO for _ in range(graph.q)))
    lp1 = Leg(r1.status, r1.value, r1.point[:graph.p] if r1.optimal else None)
    r2 = two_step_solve(Y, graph, alpha)
    notes = tuple(str(w) for w in graph.warnings)
    if isinstance(r2, LpOutcome):
        return EquivalenceReport(lp0, lp1, Leg(r2.status), None, None, False, notes=notes)
    lp2 = Leg(Status.OPTIMAL, r2.value, r2.x)
    retrieved_optimal = (r0.optimal and h_contains(X, r2.x) and r2.value == r0.value)
    return EquivalenceReport(lp0, lp1, lp2, r2.x, r2.y, retrieved_optimal, notes=notes)


def _check_dims(X: Polyhedron, Y: Polyhedron, graph: AffineGraph) -> None:
    if X.dim != graph.p or Y.dim != graph.q:
        raise DimensionError("X, Y and the graph have inconsistent dimensions")


def graph_redundancy(X, Y, graph: AffineGraph) -> tuple[bool, str]:
    X, Y = Polyhedron.coerce(X), Polyhedron.coerce(Y)
    _check_dims(X, Y, graph)
    xh, xv, yh, yv = X.hrep(), X.vrep(), Y.hrep(), Y.vrep()
    M = graph.cbar
    # (a) each generator point of X is cbar y + bbar for some y in Y
    for x in xv.points:
        fiber = tuple(Constraint(M.row(i), x[i] - graph.bbar[i]) for i in range(graph.p))
        if feasible_point(HRep(yh.dim, yh.inequalities, yh.equalities + fiber)) is None:
            return False, f"X point {fv(x)} has no preimage in Y"
    if xv.rays or xv.lines:
        img = image(Y, graph.as_map()).hrep()
        for r in xv.rays:
            if not recession_contains(img, r):
                return False, f"X ray {fv(r)} is not reached from Y"
        for l in xv.lines:
            if not lineality_contains(img, l):
                return False, f"X line {fv(l)} is not reached from Y"
    # (b) Y maps into X
    if yv.is_empty and not xv.is_empty:
        return False, "Y is empty"
    for y in yv.points:
        x = graph.retrieve(y)
        if not h_contains(xh, x):
            return False, f"Y point {fv(y)} maps to {fv(x)}, outside X"
    for r in yv.rays:
        if not recession_contains(xh, M.apply(r)):
            return False, f"Y ray {fv(r)} maps outside the recession cone of X"
    for l in yv.lines:
        if not lineality_contains(xh, M.apply(l)):
            return False, f"Y line {fv(l)} maps outside the lineality space of X"
    return True, "coupling is redundant for X and Y"


def check_graph_redundancy(X, Y, graph: AffineGraph) -> bool:
    return graph_redundancy(X, Y, graph)[0]


def bijectivity(X, Y, graph: AffineGraph) -> tuple[bool, str]:
    X, Y = Polyhedron.coerce(X), Polyhedron.coerce(Y)
    ok, why = graph_redundancy(X, Y, graph)
    if not ok:
        return False, why
    yv = Y.vrep()
    if yv.is_empty:
        return X.is_empty(), "Y is empty"
    directions = [sub(p, yv.points[0]) for p in yv.points[1:]] + list(yv.rays) + list(yv.lines)
    d = rank(directions)
    if rank([graph.cbar.apply(v) for v in directions]) < d:
        return False, "cbar has a nonzero kernel on the direction space of Y (many-to-one)"
    if not poly_equal(image(Y, graph.as_map()), X):
        return False, "image of Y differs from X"
    return True, "one-to-one correspondence between Y and X"


def is_bijective_on(X, Y, graph: AffineGraph) -> bool:
    return bijectivity(X, Y, graph)[0]
