"""Exact integer matrices, Smith normal form, and counting primitives.

Everything in this module is arbitrary-precision integer arithmetic on
plain Python ints; no floating point appears anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

__all__ = ["IntegerMatrix", "SnfDecomposition", "snf", "abs_det", "binomial"]


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntegerMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("rows have unequal lengths")
        return cls(nrows, ncols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int]) -> "IntegerMatrix":
        n = len(diag)
        return cls(n, n, tuple(diag[i] if i == j else 0 for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def diagonal_entries(self) -> tuple[int, ...]:
        return tuple(self.at(i, i) for i in range(min(self.rows, self.cols)))

    def mat_mul(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("incompatible shapes for matrix product")
        rows = self.to_rows()
        cols = [other.column(j) for j in range(other.cols)]
        return IntegerMatrix.from_rows(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in rows]
        )

    def mat_vec(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(
            sum(self.at(i, j) * vec[j] for j in range(self.cols)) for i in range(self.rows)
        )


@dataclass(frozen=True)
class SnfDecomposition:
    """Unimodular diagonalization u @ m @ v == d with a divisibility chain on d."""

    u: IntegerMatrix
    d: IntegerMatrix
    v: IntegerMatrix

    def diagonal(self) -> tuple[int, ...]:
        return self.d.diagonal_entries()

    def rank(self) -> int:
        return sum(1 for x in self.diagonal() if x)


def snf(m: IntegerMatrix) -> SnfDecomposition:
    """Smith normal form by gcd row/column reduction.

    Returns (u, d, v) with u @ m @ v == d, u and v unimodular, and d diagonal
    with nonnegative entries d1 | d2 | ... | dr followed by zeros.  The pivot
    is always the smallest nonzero entry in absolute value, ties broken by
    lowest (row, col), so the output is deterministic.
    """
    if m.rows == 0 or m.cols == 0:
        raise ValueError("matrix must be nonempty")
    nr, nc = m.rows, m.cols
    a = m.to_rows()
    u = IntegerMatrix.identity(nr).to_rows()
    v = IntegerMatrix.identity(nc).to_rows()

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, c: int) -> None:
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, c: int) -> None:
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    for t in range(min(nr, nc)):
        # deterministic pivot: smallest |entry|, then lowest (row, col)
        pivot = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = a[i][j]
                if x:
                    ax = abs(x)
                    if best is None or ax < best:
                        best = ax
                        pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            swap_rows(t, pivot[0])
        if pivot[1] != t:
            swap_cols(t, pivot[1])

        while True:
            # Euclid down the column; a swap makes the remainder the new pivot
            changed = True
            while changed:
                changed = False
                for i in range(t + 1, nr):
                    if a[i][t]:
                        add_row(i, t, -(a[i][t] // a[t][t]))
                        if a[i][t]:
                            swap_rows(t, i)
                            changed = True
                            break
            # same along the row; column swaps may dirty the cleared column
            changed = True
            while changed:
                changed = False
                for j in range(t + 1, nc):
                    if a[t][j]:
                        add_col(j, t, -(a[t][j] // a[t][t]))
                        if a[t][j]:
                            swap_cols(t, j)
                            changed = True
                            break
            if any(a[i][t] for i in range(t + 1, nr)):
                continue
            # divisibility chain: the pivot must divide the whole remaining block
            p = a[t][t]
            offender = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)

    for i in range(min(nr, nc)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]

    return SnfDecomposition(
        IntegerMatrix.from_rows(u), IntegerMatrix.from_rows(a), IntegerMatrix.from_rows(v)
    )


def abs_det(dec: SnfDecomposition) -> int:
    """Product of the nonzero invariant factors, i.e. |det| for full-rank input.

    Raises ValueError when the decomposed matrix is square but rank-deficient,
    since callers use this value as a finite lattice index.
    """
    diag = dec.diagonal()
    if dec.d.rows == dec.d.cols and any(x == 0 for x in diag):
        raise ValueError("matrix is rank-deficient; no finite index exists")
    prod = 1
    for x in diag:
        if x:
            prod *= x
    return prod


def binomial(m: int, k: int) -> int:
    """Exact binomial coefficient; zero when k exceeds m."""
    return math.comb(m, k)
