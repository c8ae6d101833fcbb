"""H- and V-representation value types."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .arith import DimensionError, is_zero, vec


class Constraint(NamedTuple):
    coef: tuple
    rhs: Fraction

    @classmethod
    def of(cls, coef: Iterable, rhs) -> "Constraint":
        return cls(vec(coef), vec([rhs])[0])


def _constraints(items, dim: int, kind: str) -> tuple:
    out = []
    for item in items:
        c = item if isinstance(item, Constraint) else Constraint.of(*item)
        if len(c.coef) != dim:
            raise DimensionError(f"{kind} coefficient length {len(c.coef)} != dim {dim}")
        out.append(c)
    return tuple(out)


@dataclass(frozen=True)
class HRep:
    """``{x : coef.x <= rhs for inequalities, coef.x == rhs for equalities}``.

    No constraints at all means the whole space.
    """

    dim: int
    inequalities: tuple = ()
    equalities: tuple = ()

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("ambient dimension must be positive")
        object.__setattr__(self, "inequalities", _constraints(self.inequalities, self.dim, "inequality"))
        object.__setattr__(self, "equalities", _constraints(self.equalities, self.dim, "equality"))

    @classmethod
    def from_rows(cls, dim, A=(), a=(), E=(), e=()) -> "HRep":
        return cls(dim, tuple(zip(A, a)), tuple(zip(E, e)))

    @classmethod
    def empty(cls, dim: int) -> "HRep":
        """Canonical infeasible system ``0.x <= -1``."""
        return cls(dim, ((tuple(Fraction(0) for _ in range(dim)), Fraction(-1)),))

    def contains(self, x) -> bool:
        return h_contains(self, x)

    def size(self) -> int:
        """Inequality count with each equality counted as two."""
        return len(self.inequalities) + 2 * len(self.equalities)


@dataclass(frozen=True)
class VRep:
    """``conv(points) + cone(rays) + span(lines)``; empty iff no points."""

    dim: int
    points: tuple = ()
    rays: tuple = ()
    lines: tuple = field(default=())

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("ambient dimension must be positive")
        for name in ("points", "rays", "lines"):
            gens = tuple(vec(g) for g in getattr(self, name))
            for g in gens:
                if len(g) != self.dim:
                    raise DimensionError(f"{name[:-1]} of length {len(g)} in dimension {self.dim}")
                if name != "points" and is_zero(g):
                    raise ValueError(f"zero vector among {name}")
            object.__setattr__(self, name, gens)

    @property
    def is_empty(self) -> bool:
        return not self.points

    @property
    def is_bounded(self) -> bool:
        return not self.rays and not self.lines


def h_contains(h: HRep, x) -> bool:
    x = vec(x)
    if len(x) != h.dim:
        raise DimensionError(f"point of length {len(x)} in dimension {h.dim}")
    for coef, rhs in h.inequalities:
        if sum((a * b for a, b in zip(coef, x)), Fraction(0)) > rhs:
            return False
    for coef, rhs in h.equalities:
        if sum((a * b for a, b in zip(coef, x)), Fraction(0)) != rhs:
            return False
    return True
