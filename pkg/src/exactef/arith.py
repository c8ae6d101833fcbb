"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator). Vectors are plain tuples of fractions; matrices are
:class:`RMatrix`. Rank and square solves use fraction-free (Bareiss)
elimination on integer-scaled rows.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
RVector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionError(ValueError):
    """Operand shapes do not match."""


class GramSingular(ValueError):
    """B^T B is singular, so the normal-equation solve is undefined."""


_INT_OR_RATIO = re.compile(r"[+-]?\d+(/\d+)?")
_DECIMAL = re.compile(r"[+-]?(\d+\.\d*|\.\d+)")


def parse_rational(value) -> Fraction:
    """Parse ``"-5"``, ``"22/3"``, ``"22.5"`` or an int into a Fraction.

    Floats are refused: they are not exact.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if not isinstance(value, str):
        raise ValueError(f"not a rational: {value!r}")
    text = value.strip()
    if _INT_OR_RATIO.fullmatch(text):
        if "/" in text and int(text.split("/")[1]) == 0:
            raise ValueError(f"zero denominator: {value!r}")
        return Fraction(text)
    if _DECIMAL.fullmatch(text):
        return Fraction(text)
    raise ValueError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(values: Iterable) -> tuple:
    return tuple(parse_rational(v) if not isinstance(v, Fraction) else v for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"dot of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def add(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u) -> tuple:
    return tuple(c * a for a in u)


def is_zero(u) -> bool:
    return all(a == 0 for a in u)


def primitive(u: Sequence[Fraction]) -> tuple:
    """Positive multiple of ``u`` with coprime integer entries (zero stays zero)."""
    if is_zero(u):
        return tuple(ZERO for _ in u)
    den = lcm(*(Fraction(a).denominator for a in u))
    ints = [int(a * den) for a in u]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return tuple(Fraction(a // g) for a in ints)


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = lcm(1, *(Fraction(a).denominator for a in r)) if r else 1
        out.append([int(Fraction(a) * den) for a in r])
    return out


@dataclass(frozen=True)
class RMatrix:
    """Dense exact matrix, row-major."""

    data: tuple  # tuple of row tuples
    ncols: int

    def __post_init__(self):
        for row in self.data:
            if len(row) != self.ncols:
                raise DimensionError("ragged matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> "RMatrix":
        data = tuple(vec(r) for r in rows)
        if ncols is None:
            if not data:
                raise DimensionError("column count required for an empty matrix")
            ncols = len(data[0])
        return cls(data, ncols)

    @classmethod
    def identity(cls, n: int) -> "RMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RMatrix":
        return cls(tuple(tuple(ZERO for _ in range(ncols)) for _ in range(nrows)), ncols)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "RMatrix":
        return cls(tuple(tuple(Fraction(c[i]) for c in cols) for i in range(nrows)), len(cols))

    @property
    def nrows(self) -> int:
        return len(self.data)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "RMatrix":
        return RMatrix(tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def apply(self, x: Sequence[Fraction]) -> tuple:
        if len(x) != self.ncols:
            raise DimensionError(f"matrix with {self.ncols} columns applied to length {len(x)}")
        return tuple(dot(r, x) for r in self.data)

    def __neg__(self) -> "RMatrix":
        return RMatrix(tuple(tuple(-a for a in r) for r in self.data), self.ncols)

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        return mat_mul(self, other)


def mat_mul(lhs: RMatrix, rhs: RMatrix) -> RMatrix:
    if lhs.ncols != rhs.nrows:
        raise DimensionError(f"cannot multiply {lhs.shape} by {rhs.shape}")
    cols = [rhs.column(j) for j in range(rhs.ncols)]
    return RMatrix(tuple(tuple(dot(r, c) for c in cols) for r in lhs.data), rhs.ncols)


def _bareiss(m: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination in place.

    Only the first ``ncols`` columns are searched for pivots; any trailing
    columns are carried along. Returns the eliminated rows and the pivot
    columns.
    """
    rows = len(m)
    width = len(m[0]) if m else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, rows):
            mic = m[i][c]
            for j in range(c + 1, width):
                # exact by Sylvester's identity
                m[i][j] = (piv * m[i][j] - mic * m[r][j]) // prev
            m[i][c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def rank(M: RMatrix | Sequence[Sequence[Fraction]]) -> int:
    rows = M.data if isinstance(M, RMatrix) else M
    rows = [r for r in rows if not is_zero(r)]
    if not rows:
        return 0
    ints = _integer_rows(rows)
    _, pivots = _bareiss(ints, len(ints[0]))
    return len(pivots)


def solve_square(M: RMatrix, rhs: Sequence[Fraction]) -> tuple | None:
    """Solve ``M x = rhs`` exactly; ``None`` when ``M`` is singular."""
    n = M.nrows
    if M.ncols != n:
        raise DimensionError(f"solve_square needs a square matrix, got {M.shape}")
    if len(rhs) != n:
        raise DimensionError(f"rhs length {len(rhs)} for {n}x{n} system")
    if n == 0:
        return ()
    aug = _integer_rows([tuple(r) + (Fraction(b),) for r, b in zip(M.data, rhs)])
    tri, pivots = _bareiss(aug, n)
    if len(pivots) < n:
        return None
    x = [ZERO] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(tri[i][n]) - sum((tri[i][j] * x[j] for j in range(i + 1, n)), ZERO)
        x[i] = s / tri[i][i]
    return tuple(x)


def gram_solve(B: RMatrix, M: RMatrix) -> RMatrix:
    """Return ``(B^T B)^{-1} B^T M`` exactly."""
    if B.nrows != M.nrows:
        raise DimensionError(f"B has {B.nrows} rows, M has {M.nrows}")
    Bt = B.transpose()
    gram = mat_mul(Bt, B)
    rhs = mat_mul(Bt, M)
    cols = []
    for j in range(rhs.ncols):
        x = solve_square(gram, rhs.column(j))
        if x is None:
            raise GramSingular("B^T B is singular")
        cols.append(x)
    if not cols and rank(gram) < gram.nrows:
        raise GramSingular("B^T B is singular")
    return RMatrix.from_columns(cols, B.ncols) if cols else RMatrix.zeros(B.ncols, 0)


def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals (zero rows dropped).

    Pivots are searched only in the first ``ncols`` columns when given;
    rows left without a pivot there but nonzero elsewhere are kept after the
    pivot rows (for an augmented system they signal inconsistency).
    """
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return [], []
    width = len(m[0])
    ncols = width if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r] + [row for row in m[r:] if any(row)], pivots


def nullspace(rows: Sequence[Sequence[Fraction]], n: int) -> list[tuple]:
    """Basis of ``{x in Q^n : row . x = 0 for every row}``."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * n
        x[f] = ONE
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def span_basis(vectors: Sequence[Sequence[Fraction]]) -> list[tuple]:
    """Canonical basis of the span: RREF rows scaled to primitive integers."""
    red, _ = rref([v for v in vectors if not is_zero(v)]) if vectors else ([], [])
    return [primitive(r) for r in red]


def format_vector(v) -> str:
    return "(" + ", ".join(format_rational(a) for a in v) + ")"
