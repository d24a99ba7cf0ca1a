"""Exact dense linear algebra over the rationals.

Determinants and ranks use fraction-free (Bareiss) elimination on integer
rows; rational input is brought to integer rows by scaling each row with the
lcm of its denominators.  No floating point anywhere.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import NotSquareError, RankDeficientWarning, ShapeError, ZeroVectorError


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted; use Fraction or str")
    return Fraction(x)


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable row-major matrix of Fractions (zero rows or columns allowed)."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError(f"negative shape {self.rows}x{self.cols}")
        entries = tuple(as_fraction(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ShapeError(f"{len(entries)} entries for a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> RationalMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ShapeError("ragged rows")
        return cls(len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols)
        return RationalMatrix(self.rows, other.cols, tuple(out))

    def column(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def scale(self, c) -> RationalMatrix:
        c = as_fraction(c)
        return RationalMatrix(self.rows, self.cols, tuple(c * e for e in self.entries))

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        if len(vector) != self.cols:
            raise ShapeError(f"vector of length {len(vector)} for {self.cols} columns")
        vec = [as_fraction(v) for v in vector]
        return tuple(sum((a * b for a, b in zip(self.row(i), vec)), Fraction(0))
                     for i in range(self.rows))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def delete_column(self, j: int) -> RationalMatrix:
        rows = [r[:j] + r[j + 1:] for r in self.tolist()]
        return RationalMatrix.from_rows(rows, self.cols - 1)


def _integer_rows(rows: Iterable[Sequence]) -> tuple[list[list[int]], int]:
    """Scale rows to integers; return them with the product of the scale factors."""
    out, scale = [], 1
    for r in rows:
        r = [as_fraction(e) for e in r]
        m = lcm(*(e.denominator for e in r)) if r else 1
        out.append([int(e * m) for e in r])
        scale *= m
    return out, scale


def _bareiss_det(a: list[list[int]]) -> int:
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det(m: RationalMatrix) -> Fraction:
    """Exact determinant; the 0x0 determinant is 1."""
    if m.rows != m.cols:
        raise NotSquareError(f"determinant of a {m.rows}x{m.cols} matrix")
    rows, scale = _integer_rows(m.tolist())
    return Fraction(_bareiss_det(rows), scale)


def det_of_rows(rows: Sequence[Sequence]) -> Fraction:
    """Determinant of a square list-of-rows matrix (ints or Fractions)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotSquareError("determinant of a non-square matrix")
    ints, scale = _integer_rows(rows)
    return Fraction(_bareiss_det(ints), scale)


def rank(m: RationalMatrix) -> int:
    """Exact rank over the rationals (fraction-free echelon form)."""
    a, _ = _integer_rows(m.tolist())
    rows, cols = m.rows, m.cols
    r, prev = 0, 1
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        arc = a[r][c]
        for i in range(r + 1, rows):
            aic = a[i][c]
            a[i] = [(arc * a[i][j] - aic * a[r][j]) // prev for j in range(cols)]
        prev = arc
        r += 1
        if r == rows:
            break
    return r


def minor_kernel(m: RationalMatrix) -> tuple[int, ...]:
    """Integer kernel vector of an (n-1) x n integer matrix from its maximal minors.

    ``u[i] = (-1)**i * det(m without column i)`` with 1-based ``i``.  Then
    ``m @ u == 0``, and ``u`` is nonzero exactly when ``m`` has full rank;
    when it is zero a :class:`RankDeficientWarning` is issued.
    """
    if m.cols != m.rows + 1:
        raise ShapeError(f"minor_kernel needs an (n-1) x n matrix, got {m.rows}x{m.cols}")
    if any(e.denominator != 1 for e in m.entries):
        raise ValueError("minor_kernel needs integer entries")
    rows = [[int(e) for e in r] for r in m.tolist()]
    u = []
    for i in range(m.cols):
        minor = [r[:i] + r[i + 1:] for r in rows]
        sign = -1 if i % 2 == 0 else 1  # (-1)**(i+1) for 0-based i
        u.append(sign * _bareiss_det(minor))
    if not any(u):
        warnings.warn("rows are linearly dependent; kernel vector is zero",
                      RankDeficientWarning, stacklevel=2)
    return tuple(u)


def primitive(u: Sequence[int]) -> tuple[int, ...]:
    """Divide by the gcd and make the first nonzero entry negative."""
    u = tuple(int(x) for x in u)
    g = gcd(*u)
    if g == 0:
        raise ZeroVectorError("the zero vector has no primitive multiple")
    first = next(x for x in u if x)
    if first > 0:
        g = -g
    return tuple(x // g for x in u)
