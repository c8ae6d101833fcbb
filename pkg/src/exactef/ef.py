"""Extended-formulation checks under three competing notions.

* ``check_ef_standard``: the coordinate projection of ``ext`` equals the
  target (projection computed by Fourier-Motzkin).
* ``check_ef_iff``: ``x in target <=> exists w with (w, x) in ext``, decided
  directly by LPs over ``ext`` without building the projection.
* ``check_ef_map``: some given linear (or, on request, affine) map sends
  ``ext`` onto the target.

The first two describe the same condition and must agree; they are kept as
separate routes so one can check the other. Every failing verdict carries a
witness point that is re-verified with membership tests before it is
returned.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import config
from .arith import ZERO, DimensionError, RMatrix
from .lp import Status, VerificationError, feasible_point, maximize
from .maps import AffineMap, CoordinateSplit, image, project_coords
from .polyhedra import Polyhedron, h_to_v, recession_contains, remove_redundancy
from .reps import Constraint, HRep, h_contains


class Detail(enum.Enum):
    PROJ_EQUAL = "ProjEqual"
    PROJ_POINT_NOT_IN_TARGET = "ProjPointNotInTarget"
    TARGET_POINT_NO_LIFT = "TargetPointNoLift"
    IMAGE_EQUAL = "ImageEqual"
    IMAGE_NOT_EQUAL = "ImageNotEqual"


class EnumerationBoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EfVerdict:
    holds: bool
    detail: Detail
    witness: tuple | None = None


@dataclass(frozen=True)
class SizeReport:
    """Sizes of irredundant forms of two given representations.

    These are representation sizes only, not extension complexities.
    """

    ext_inequalities: int
    ext_equalities: int
    target_inequalities: int
    target_equalities: int

    @property
    def ext_size(self) -> int:
        return self.ext_inequalities + 2 * self.ext_equalities

    @property
    def target_size(self) -> int:
        return self.target_inequalities + 2 * self.target_equalities

    @property
    def ext_ge_target(self) -> bool:
        return self.ext_size >= self.target_size


MAX_DOUBLINGS = 256


def _escape(start, direction, inside) -> tuple:
    """First point ``start + t * direction`` (t = 1, 2, 4, ...) outside ``inside``."""
    t = Fraction(1)
    for _ in range(MAX_DOUBLINGS):
        x = tuple(s + t * d for s, d in zip(start, direction))
        if not inside(x):
            return x
        t *= 2
    raise RuntimeError("ray displacement did not leave the set")


def _outside_direction(h: HRep, r, line: bool):
    """A direction among ``r`` / ``-r`` that is not a recession direction of ``h``."""
    if not recession_contains(h, r):
        return r
    if line and not recession_contains(h, tuple(-a for a in r)):
        return tuple(-a for a in r)
    return None


def _lift_point(ext: HRep, split: CoordinateSplit, x) -> tuple | None:
    """A point of ``ext`` whose kept coordinates equal ``x``."""
    eqs = []
    for pos, k in enumerate(split.keep):
        unit = tuple(Fraction(1) if i == k else ZERO for i in range(ext.dim))
        eqs.append(Constraint(unit, Fraction(x[pos])))
    return feasible_point(HRep(ext.dim, ext.inequalities, ext.equalities + tuple(eqs)))


def _has_lift(ext, split, x) -> bool:
    return _lift_point(ext, split, x) is not None


def _check_dims(ext_dim: int, target: Polyhedron, split: CoordinateSplit) -> None:
    if split.dim != ext_dim:
        raise DimensionError(f"split for dimension {split.dim}, extension has {ext_dim}")
    if len(split.keep) != target.dim:
        raise DimensionError(f"{len(split.keep)} kept coordinates, target dimension {target.dim}")


def _certify(ext, target, split, verdict: EfVerdict) -> EfVerdict:
    if verdict.holds:
        return verdict
    w = verdict.witness
    lifted, in_target = _has_lift(ext, split, w), target.contains(w)
    ok = {
        Detail.PROJ_POINT_NOT_IN_TARGET: lifted and not in_target,
        Detail.TARGET_POINT_NO_LIFT: in_target and not lifted,
    }.get(verdict.detail, False)
    if not ok:
        raise VerificationError(f"witness {w} does not certify {verdict.detail.value}")
    return verdict


def check_ef_standard(ext: HRep, target, split: CoordinateSplit) -> EfVerdict:
    """Is the projection of ``ext`` onto ``split.keep`` equal to ``target``?

    Witness search order: projection generators outside the target, then
    target vertices with no lift, then vertices displaced along a recession
    direction that one set has and the other lacks.
    """
    target = Polyhedron.coerce(target)
    _check_dims(ext.dim, target, split)
    proj = project_coords(ext, split)
    pv = h_to_v(proj)
    th, tv = target.hrep(), target.vrep()

    def fail(detail, w):
        return _certify(ext, target, split, EfVerdict(False, detail, w))

    for p in pv.points:
        if not h_contains(th, p):
            return fail(Detail.PROJ_POINT_NOT_IN_TARGET, p)
    for t in tv.points:
        if not h_contains(proj, t):
            return fail(Detail.TARGET_POINT_NO_LIFT, t)
    if pv.is_empty:
        # both empty: the point scans above catch a one-sided emptiness
        return EfVerdict(True, Detail.PROJ_EQUAL)
    for gens, line in ((pv.rays, False), (pv.lines, True)):
        for r in gens:
            d = _outside_direction(th, r, line)
            if d is not None:
                w = _escape(tv.points[0], d, target.contains)
                return fail(Detail.PROJ_POINT_NOT_IN_TARGET, w)
    for gens, line in ((tv.rays, False), (tv.lines, True)):
        for r in gens:
            d = _outside_direction(proj, r, line)
            if d is not None:
                w = _escape(tv.points[0], d, lambda x: h_contains(proj, x))
                return fail(Detail.TARGET_POINT_NO_LIFT, w)
    return EfVerdict(True, Detail.PROJ_EQUAL)


def _embed(split: CoordinateSplit, coef) -> tuple:
    out = [ZERO] * split.dim
    for pos, k in enumerate(split.keep):
        out[k] = Fraction(coef[pos])
    return tuple(out)


def _keep(split: CoordinateSplit, z) -> tuple:
    return tuple(z[k] for k in split.keep)


def _recession_lift(ext: HRep, split: CoordinateSplit, r) -> bool:
    """Is ``r`` the kept part of some recession direction of ``ext``?"""
    cone = HRep(ext.dim,
                tuple(Constraint(c.coef, ZERO) for c in ext.inequalities),
                tuple(Constraint(c.coef, ZERO) for c in ext.equalities))
    return _lift_point(cone, split, r) is not None


def check_ef_iff(ext: HRep, target, split: CoordinateSplit) -> EfVerdict:
    """Decide ``x in target <=> exists w: (w, x) in ext`` with LPs over ``ext``."""
    target = Polyhedron.coerce(target)
    _check_dims(ext.dim, target, split)
    th, tv = target.hrep(), target.vrep()

    def fail(detail, w):
        return _certify(ext, target, split, EfVerdict(False, detail, w))

    # (<=) every liftable x satisfies each target constraint
    start = feasible_point(ext)
    if start is not None:
        checks = [(c.coef, c.rhs) for c in th.inequalities + th.equalities]
        checks += [(tuple(-a for a in c.coef), -c.rhs) for c in th.equalities]
        for coef, rhs in checks:
            res = maximize(ext, _embed(split, coef))
            if res.status is Status.UNBOUNDED:
                w = _escape(_keep(split, start), _keep(split, res.ray), target.contains)
                return fail(Detail.PROJ_POINT_NOT_IN_TARGET, w)
            if res.value > rhs:
                return fail(Detail.PROJ_POINT_NOT_IN_TARGET, _keep(split, res.point))
    # (=>) every target point has a lift
    for t in tv.points:
        if not _has_lift(ext, split, t):
            return fail(Detail.TARGET_POINT_NO_LIFT, t)
    for gens, line in ((tv.rays, False), (tv.lines, True)):
        for r in gens:
            for d in ((r, tuple(-a for a in r)) if line else (r,)):
                if not _recession_lift(ext, split, d):
                    w = _escape(tv.points[0], d, lambda x: _has_lift(ext, split, x))
                    return fail(Detail.TARGET_POINT_NO_LIFT, w)
    return EfVerdict(True, Detail.PROJ_EQUAL)


def _in_image(ext: Polyhedron, amap: AffineMap, y) -> bool:
    h = ext.hrep()
    eqs = tuple(Constraint(amap.matrix.row(i), Fraction(y[i]) - amap.offset[i])
                for i in range(amap.out_dim))
    return feasible_point(HRep(h.dim, h.inequalities, h.equalities + eqs)) is not None


def check_ef_map(ext, target, amap: AffineMap, affine: bool = False) -> EfVerdict:
    """Is ``target`` the image of ``ext`` under ``amap``?"""
    ext, target = Polyhedron.coerce(ext), Polyhedron.coerce(target)
    if amap.in_dim != ext.dim or amap.out_dim != target.dim:
        raise DimensionError(
            f"map {amap.in_dim}->{amap.out_dim} between dimensions {ext.dim} and {target.dim}")
    if not affine and not amap.is_linear:
        raise ValueError("map has a nonzero offset; pass affine=True to allow it")
    img = image(ext, amap)
    ih, iv = img.hrep(), img.vrep()
    th, tv = target.hrep(), target.vrep()
    witness = None
    for p in iv.points:
        if not h_contains(th, p):
            witness = p
            break
    else:
        for t in tv.points:
            if not h_contains(ih, t):
                witness = t
                break
    if witness is None and not (iv.is_empty or tv.is_empty):
        # image rays leaving the target, then target rays leaving the image
        for src, dst_h in ((iv, th), (tv, ih)):
            for gens, line in ((src.rays, False), (src.lines, True)):
                for r in gens:
                    d = _outside_direction(dst_h, r, line)
                    if d is not None and witness is None:
                        base = tv.points[0]
                        witness = _escape(base, d, lambda x, h=dst_h: h_contains(h, x))
    if witness is None:
        return EfVerdict(True, Detail.IMAGE_EQUAL)
    if _in_image(ext, amap, witness) == target.contains(witness):
        raise VerificationError(f"witness {witness} is not in the symmetric difference")
    return EfVerdict(False, Detail.IMAGE_NOT_EQUAL, witness)


def synthesize_linear_map(ext, target) -> AffineMap | None:
    """Search for a linear map sending ``ext`` onto ``target``.

    Target vertices are assigned injectively to ext generator points in
    lexicographic order; each assignment yields an exact feasibility
    problem in the map entries plus convex/conic multipliers. The first
    candidate confirmed by :func:`check_ef_map` is returned.
    """
    ext, target = Polyhedron.coerce(ext), Polyhedron.coerce(target)
    ev, tv = ext.vrep(), target.vrep()
    n_in, n_out = ext.dim, target.dim
    zero_map = AffineMap(RMatrix.zeros(n_out, n_in))
    if tv.is_empty:
        return zero_map if ev.is_empty else None
    if ev.is_empty:
        return None
    n, k = len(ev.points), len(tv.points)
    if k > n:
        return None
    count = math.perm(n, k)
    bound = config.settings().limits.max_assignments
    if count > bound:
        raise EnumerationBoundExceeded(f"{count} assignments exceed the bound {bound}")
    for assignment in itertools.permutations(range(n), k):
        m = _solve_assignment(ev, tv, assignment, n_in, n_out)
        if m is None:
            continue
        candidate = AffineMap(m)
        if check_ef_map(ext, target, candidate).holds:
            return candidate
    return None


def _solve_assignment(ev, tv, assignment, n_in, n_out) -> RMatrix | None:
    nm = n_in * n_out
    columns = []  # one nonnegativity flag per multiplier variable
    ineqs = []
    rows_eq = []  # (dict var->coef, rhs)

    def new_var(nonneg: bool) -> int:
        idx = nm + len(columns)
        columns.append(nonneg)
        return idx

    def map_row(i: int, x) -> dict:
        # (M x)_i as a linear form in the entries of M (row-major)
        return {i * n_in + j: Fraction(x[j]) for j in range(n_in) if x[j] != 0}

    for j, src in enumerate(assignment):
        for i in range(n_out):
            rows_eq.append((map_row(i, ev.points[src]), tv.points[j][i]))

    def in_cone(x, convex: bool):
        lam = [new_var(True) for _ in tv.points] if convex else []
        mu = [new_var(True) for _ in tv.rays]
        nu = [new_var(False) for _ in tv.lines]
        for i in range(n_out):
            form = map_row(i, x)
            for v, g in zip(lam, tv.points):
                form[v] = form.get(v, ZERO) - g[i]
            for v, g in zip(mu, tv.rays):
                form[v] = form.get(v, ZERO) - g[i]
            for v, g in zip(nu, tv.lines):
                form[v] = form.get(v, ZERO) - g[i]
            rows_eq.append((form, ZERO))
        if convex:
            rows_eq.append(({v: Fraction(1) for v in lam}, Fraction(1)))

    used = set(assignment)
    for idx, p in enumerate(ev.points):
        if idx not in used:
            in_cone(p, convex=True)
    for r in ev.rays:
        in_cone(r, convex=False)
    for l in ev.lines:
        in_cone(l, convex=False)
        in_cone(tuple(-a for a in l), convex=False)

    nvar = nm + len(columns)
    dense = lambda form: tuple(form.get(v, ZERO) for v in range(nvar))
    for v, nonneg in enumerate(columns):
        if nonneg:
            row = [ZERO] * nvar
            row[nm + v] = Fraction(-1)
            ineqs.append((tuple(row), ZERO))
    eqs = [(dense(f), Fraction(rhs)) for f, rhs in rows_eq]
    sol = feasible_point(HRep(nvar, tuple(ineqs), tuple(eqs)))
    if sol is None:
        return None
    return RMatrix(tuple(tuple(sol[i * n_in + j] for j in range(n_in)) for i in range(n_out)), n_in)


def lemma9_size_report(ext: HRep, target: HRep) -> SizeReport:
    e, t = remove_redundancy(ext), remove_redundancy(target)
    return SizeReport(len(e.inequalities), len(e.equalities),
                      len(t.inequalities), len(t.equalities))
