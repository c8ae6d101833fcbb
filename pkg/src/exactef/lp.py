"""Exact two-phase simplex over H-representations.

Variables are free: each one is split as ``x = x+ - x-`` and every
inequality gets a slack, giving the standard form ``S z = r, z >= 0``.
Pivoting follows Bland's rule over the column order
``x+, x-, slacks, artificials``, so runs are deterministic and finite.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import config
from .arith import ZERO, DimensionError, RMatrix, dot, primitive, solve_square, vec
from .reps import HRep, h_contains


class Sense(enum.Enum):
    MINIMIZE = "min"
    MAXIMIZE = "max"


class Status(enum.Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


class VerificationError(AssertionError):
    pass


@dataclass(frozen=True)
class LinearProgram:
    objective: tuple
    feasible: HRep
    sense: Sense = Sense.MINIMIZE

    def __post_init__(self):
        object.__setattr__(self, "objective", vec(self.objective))
        if len(self.objective) != self.feasible.dim:
            raise DimensionError(
                f"objective length {len(self.objective)} != dim {self.feasible.dim}")


@dataclass(frozen=True)
class LpOutcome:
    status: Status
    point: tuple | None = None
    value: Fraction | None = None
    ray: tuple | None = None

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL


class _Tableau:
    def __init__(self, rows, rhs, basis, ncols):
        self.rows = rows      # list[list[Fraction]]
        self.rhs = rhs        # list[Fraction]
        self.basis = basis    # list[int]
        self.ncols = ncols

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        inv = 1 / row[c]
        row[:] = [a * inv for a in row]
        self.rhs[r] *= inv
        for i, other in enumerate(self.rows):
            if i != r and other[c] != 0:
                f = other[c]
                other[:] = [a - f * b for a, b in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def reduced_costs(self, cost, allowed: int) -> list[Fraction]:
        cb = [cost[b] for b in self.basis]
        out = []
        for j in range(allowed):
            out.append(cost[j] - sum((cb[i] * self.rows[i][j] for i in range(len(self.rows))
                                      if cb[i] != 0), ZERO))
        return out

    def run(self, cost, allowed: int):
        """Minimize ``cost . z``; returns ``None`` or the unbounded column."""
        while True:
            red = self.reduced_costs(cost, allowed)
            entering = next((j for j, d in enumerate(red) if d < 0 and j not in self.basis), None)
            if entering is None:
                return None
            best = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = self.rhs[i] / row[entering]
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return entering
            self.pivot(best[1], entering)


def _standard_form(h: HRep):
    n = h.dim
    ineq = list(h.inequalities)
    eqs = list(h.equalities)
    m1 = len(ineq)
    rows, rhs, signs = [], [], []
    for k, (coef, b) in enumerate(ineq):
        slack = [Fraction(0)] * m1
        slack[k] = Fraction(1)
        row = list(coef) + [-a for a in coef] + slack
        sign = 1 if b >= 0 else -1
        rows.append([sign * a for a in row])
        rhs.append(sign * b)
        signs.append(sign)
    for coef, b in eqs:
        row = list(coef) + [-a for a in coef] + [Fraction(0)] * m1
        sign = 1 if b >= 0 else -1
        rows.append([sign * a for a in row])
        rhs.append(sign * b)
        signs.append(sign)
    return rows, rhs, signs, 2 * n + m1


def _phase_one(h: HRep):
    rows, rhs, signs, nreal = _standard_form(h)
    m1 = len(h.inequalities)
    basis = []
    art_rows = []
    for i in range(len(rows)):
        if i < m1 and signs[i] == 1:
            basis.append(2 * h.dim + i)
        else:
            basis.append(None)
            art_rows.append(i)
    nart = len(art_rows)
    for i, row in enumerate(rows):
        row.extend(Fraction(0) for _ in range(nart))
    for k, i in enumerate(art_rows):
        rows[i][nreal + k] = Fraction(1)
        basis[i] = nreal + k
    tab = _Tableau(rows, rhs, basis, nreal + nart)
    origin = list(range(len(rows)))  # standard-form row index of each tableau row
    if nart:
        cost = [Fraction(0)] * nreal + [Fraction(1)] * nart
        tab.run(cost, nreal + nart)
        if sum((tab.rhs[i] for i, b in enumerate(tab.basis) if b >= nreal), ZERO) > 0:
            return None
        # drive zero-level artificials out of the basis, dropping dependent rows
        i = 0
        while i < len(tab.rows):
            if tab.basis[i] >= nreal:
                col = next((j for j in range(nreal) if tab.rows[i][j] != 0), None)
                if col is None:
                    del tab.rows[i], tab.rhs[i], tab.basis[i], origin[i]
                    continue
                tab.pivot(i, col)
            i += 1
    return tab, nreal, signs, origin


def _split_point(z, n):
    return tuple(z[j] - z[n + j] for j in range(n))


def solve(lp: LinearProgram) -> LpOutcome:
    h = lp.feasible
    n = h.dim
    c = lp.objective if lp.sense is Sense.MINIMIZE else tuple(-a for a in lp.objective)
    first = _phase_one(h)
    if first is None:
        return LpOutcome(Status.INFEASIBLE)
    tab, nreal, signs, origin = first
    cost = list(c) + [-a for a in c] + [Fraction(0)] * (nreal - 2 * n)
    cost += [Fraction(0)] * (tab.ncols - nreal)
    unbounded_col = tab.run(cost, nreal)
    if unbounded_col is not None:
        d = [Fraction(0)] * nreal
        d[unbounded_col] = Fraction(1)
        for i, b in enumerate(tab.basis):
            d[b] = -tab.rows[i][unbounded_col]
        ray = primitive(_split_point(d, n))
        if config.settings().verify:
            _verify_ray(lp, ray)
        return LpOutcome(Status.UNBOUNDED, ray=ray)
    z = [Fraction(0)] * tab.ncols
    for i, b in enumerate(tab.basis):
        z[b] = tab.rhs[i]
    x = _split_point(z, n)
    out = LpOutcome(Status.OPTIMAL, point=x, value=dot(lp.objective, x))
    if config.settings().verify:
        _verify_optimal(lp, out, tab, cost, signs, origin)
    return out


def feasible_point(h: HRep) -> tuple | None:
    res = solve(LinearProgram(tuple(Fraction(0) for _ in range(h.dim)), h))
    return res.point


def minimize(h: HRep, objective) -> LpOutcome:
    return solve(LinearProgram(objective, h, Sense.MINIMIZE))


def maximize(h: HRep, objective) -> LpOutcome:
    return solve(LinearProgram(objective, h, Sense.MAXIMIZE))


def _verify_ray(lp: LinearProgram, ray) -> None:
    h = lp.feasible
    ok = all(dot(a, ray) <= 0 for a, _ in h.inequalities) and all(dot(e, ray) == 0 for e, _ in h.equalities)
    gain = dot(lp.objective, ray)
    improving = gain < 0 if lp.sense is Sense.MINIMIZE else gain > 0
    if not (ok and improving):
        raise VerificationError(f"bad unbounded certificate {ray}")


def _verify_optimal(lp, out, tab, cost, signs, origin) -> None:
    h = lp.feasible
    if not h_contains(h, out.point):
        raise VerificationError("optimal point infeasible")
    if not tab.basis:
        if any(a != 0 for a in lp.objective):
            raise VerificationError("nonzero objective with empty basis")
        return
    # duals from B^T y = c_B on the surviving standard-form rows
    B = RMatrix(tuple(tuple(tab_row_col) for tab_row_col in _basis_matrix(h, tab, signs, origin)),
                len(tab.basis))
    y = solve_square(B.transpose(), [cost[b] for b in tab.basis])
    if y is None:
        raise VerificationError("singular final basis")
    m1 = len(h.inequalities)
    rows = [a for a, _ in h.inequalities] + [e for e, _ in h.equalities]
    rhs = [b for _, b in h.inequalities] + [f for _, f in h.equalities]
    pi = [Fraction(0)] * len(rows)
    for yi, k in zip(y, origin):
        pi[k] = yi * signs[k]
    if any(p > 0 for p in pi[:m1]):
        raise VerificationError("dual sign violated")
    c = [sum((pi[k] * rows[k][j] for k in range(len(rows))), ZERO) for j in range(h.dim)]
    sign = 1 if lp.sense is Sense.MINIMIZE else -1
    if [sign * a for a in lp.objective] != c:
        raise VerificationError("dual multipliers do not reproduce objective")
    if sign * out.value != dot(pi, rhs):
        raise VerificationError("duality gap")


def _basis_matrix(h, tab, signs, origin):
    rows, _, _, _ = _standard_form(h)
    for k in origin:
        yield [rows[k][b] for b in tab.basis]
