"""Exact integer matrices and the Smith normal form with transform tracking.

Everything runs on Python's arbitrary-precision integers, so minors and
transforms can never overflow; correctness is preferred over speed and the
matrices handled here are small (on the order of a hundred rows).
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import InputError, InternalInvariantError


class IntMatrix:
    """An immutable rows x cols matrix of integers, stored row-major.

    >>> A = IntMatrix.from_rows([[1, 2], [3, 4]])
    >>> A[1, 0]
    3
    >>> (A @ IntMatrix.identity(2)) == A
    True
    >>> A.determinant()
    -2
    """

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        rows = operator.index(rows)
        cols = operator.index(cols)
        if rows < 0 or cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        try:
            data = tuple(operator.index(e) for e in entries)
        except TypeError:
            raise InputError("matrix entries must be integers") from None
        if len(data) != rows * cols:
            raise InputError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(data)}"
            )
        self.rows = rows
        self.cols = cols
        self._entries = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise InputError("all rows must have the same length")
            if cols is not None and cols != width:
                raise InputError(f"rows have length {width}, not {cols}")
        else:
            width = 0 if cols is None else cols
        return cls(len(rows), width, (e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, (int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, key: tuple) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise InputError(f"index {(i, j)} out of range for a {self.rows}x{self.cols} matrix")
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self._entries[j :: self.cols] if self.cols else ()

    def to_lists(self) -> list:
        """Mutable row-of-lists copy (the working form used by algorithms)."""
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols, self.rows, (self._entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows))
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            left = self.row(i)
            for j in range(other.cols):
                out.append(sum(left[k] * other._entries[k * other.cols + j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, out)

    def mul_vector(self, v: Sequence[int]) -> tuple:
        if len(v) != self.cols:
            raise InputError(f"vector of length {len(v)} does not match {self.cols} columns")
        return tuple(sum(self.row(i)[k] * v[k] for k in range(self.cols)) for i in range(self.rows))

    def append_column(self, col: Sequence[int]) -> "IntMatrix":
        if len(col) != self.rows:
            raise InputError(f"column of length {len(col)} does not match {self.rows} rows")
        entries = []
        for i in range(self.rows):
            entries.extend(self.row(i))
            entries.append(col[i])
        return IntMatrix(self.rows, self.cols + 1, entries)

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise InputError("determinant requires a square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.to_lists()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if pivot is None:
                    return 0
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == (other.rows, other.cols, other._entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        if self.rows and self.cols:
            return f"IntMatrix.from_rows({[list(self.row(i)) for i in range(self.rows)]!r})"
        return f"IntMatrix({self.rows}, {self.cols}, ())"

    def pretty(self) -> str:
        """Aligned multi-line rendering, for demos and error messages."""
        if self.rows == 0 or self.cols == 0:
            return f"({self.rows}x{self.cols} empty)"
        cells = [[str(e) for e in self.row(i)] for i in range(self.rows)]
        widths = [max(len(cells[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        return "\n".join(
            "[ " + "  ".join(cells[i][j].rjust(widths[j]) for j in range(self.cols)) + " ]"
            for i in range(self.rows)
        )


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V == D with U, V unimodular and D = diag(d_1, ..., d_s, 0, ...).

    The positive diagonal entries are the invariant factors and satisfy
    d_1 | d_2 | ... | d_s; ``rank`` equals s.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    invariant_factors: tuple
    rank: int


def _smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    m, n = A.rows, A.cols
    d = A.to_lists()
    u = IntMatrix.identity(m).to_lists()
    v = IntMatrix.identity(n).to_lists()

    def add_row(dst, src, q):
        # row_dst += q * row_src, kept in lockstep on the left transform
        drow, srow = d[dst], d[src]
        for j in range(n):
            drow[j] += q * srow[j]
        urow, usrc = u[dst], u[src]
        for j in range(m):
            urow[j] += q * usrc[j]

    def add_col(dst, src, q):
        for row in d:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def swap_rows(a, b):
        d[a], d[b] = d[b], d[a]
        u[a], u[b] = u[b], u[a]

    def swap_cols(a, b):
        for row in d:
            row[a], row[b] = row[b], row[a]
        for row in v:
            row[a], row[b] = row[b], row[a]

    def find_pivot(t):
        # Nonzero entry of least absolute value in the working submatrix;
        # row-major scan with strict improvement fixes ties at the lowest
        # (row, col) and makes the whole computation deterministic.
        best = None
        best_abs = None
        for i in range(t, m):
            row = d[i]
            for j in range(t, n):
                e = row[j]
                if e != 0 and (best is None or abs(e) < best_abs):
                    best, best_abs = (i, j), abs(e)
        return best

    t = 0
    while t < min(m, n):
        pivot = find_pivot(t)
        if pivot is None:
            break
        while True:
            i, j = pivot
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = d[t][t]
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // p
                    if q:
                        add_row(i, t, -q)
                    if d[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // p
                    if q:
                        add_col(j, t, -q)
                    if d[t][j]:
                        dirty = True
            if dirty:
                # A nonzero remainder smaller than |p| now exists somewhere
                # in row t or column t, so the next pivot strictly shrinks.
                pivot = find_pivot(t)
                continue
            offender = None
            for i in range(t + 1, m):
                row = d[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # Fold the offending row into row t; re-clearing then replaces
            # the pivot by a proper divisor, which yields d_t | d_{t+1}.
            add_row(t, offender, 1)
            pivot = (t, t)
        t += 1

    for k in range(min(m, n)):
        if d[k][k] < 0:
            for j in range(n):
                d[k][j] = -d[k][j]
            for j in range(m):
                u[k][j] = -u[k][j]

    diag = [d[k][k] for k in range(min(m, n))]
    rank = sum(1 for e in diag if e)
    factors = tuple(diag[:rank])
    if any(e == 0 for e in factors) or any(e != 0 for e in diag[rank:]):
        raise InternalInvariantError("zero invariant factor interleaved with nonzero ones")
    for a, b in zip(factors, factors[1:]):
        if b % a:
            raise InternalInvariantError(f"invariant factors {factors} violate divisibility")

    U = IntMatrix.from_rows(u, cols=m)
    V = IntMatrix.from_rows(v, cols=n)
    D = IntMatrix.from_rows(d, cols=n)
    if U @ A @ V != D:
        raise InternalInvariantError("transforms do not carry the input to its Smith form")
    return SmithDecomposition(U=U, D=D, V=V, invariant_factors=factors, rank=rank)


@lru_cache(maxsize=1024)
def _smith_cached(A: IntMatrix) -> SmithDecomposition:
    return _smith_normal_form(A)


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """Smith normal form of ``A`` with both unimodular transforms.

    Total and deterministic; zero-dimensional matrices yield empty
    decompositions.

    >>> smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]])).invariant_factors
    (1, 6)
    """
    return _smith_cached(A)


# The uncached algorithm, exposed for determinism tests.
smith_normal_form.__wrapped__ = _smith_normal_form


def rank(A: IntMatrix) -> int:
    """Rational rank of ``A`` (the number of nonzero invariant factors)."""
    return smith_normal_form(A).rank


def minor_gcd(A: IntMatrix, k: int) -> int:
    """Nonnegative generator of the ideal of k x k minors of ``A``.

    Equals d_1 * ... * d_k for k at most the rank, and 0 beyond it;
    I_0 is the whole ring, so k = 0 returns 1.
    """
    if not 0 <= k <= min(A.rows, A.cols):
        raise InputError(f"minor size {k} out of range for a {A.rows}x{A.cols} matrix")
    if k == 0:
        return 1
    snf = smith_normal_form(A)
    if k > snf.rank:
        return 0
    return math.prod(snf.invariant_factors[:k])


def solve_integer(A: IntMatrix, b: Sequence[int]) -> Optional[tuple]:
    """Some integer solution x of A @ x = b, or None if there is none.

    Solved through the Smith transforms: with U A V = D the system becomes
    D y = U b and x = V y, where D is diagonal so each coordinate is a
    single exact-divisibility test.
    """
    if len(b) != A.rows:
        raise InputError(f"right-hand side of length {len(b)} does not match {A.rows} rows")
    snf = smith_normal_form(A)
    c = snf.U.mul_vector(b)
    y = [0] * A.cols
    for i in range(A.rows):
        if i < snf.rank:
            d = snf.invariant_factors[i]
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    return snf.V.mul_vector(y)
