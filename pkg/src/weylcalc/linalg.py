"""Exact rational linear algebra over sparse coordinate rows.

Everything here works over Q with ``gmpy2.mpq`` coefficients.  Rows are
``dict`` objects mapping column index to a nonzero rational; a
:class:`SparseMatrix` is the immutable coordinate-list form used at module
boundaries.

Pivoting is purely positional (smallest column, then smallest row), so the
reduced echelon form, and hence every standard-monomial basis built on top
of it, is reproducible run to run.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from gmpy2 import mpq

Rational = type(mpq(0))
Row = Dict[int, Rational]

__all__ = [
    "Rational",
    "Row",
    "SparseMatrix",
    "Echelonizer",
    "rref",
    "rank",
    "kernel_basis",
    "to_rational",
]


def to_rational(x) -> Rational:
    """Coerce ints, Fractions, strings like ``'3/4'`` or mpq to mpq."""
    if isinstance(x, Rational):
        return x
    return mpq(x)


@dataclass(frozen=True)
class SparseMatrix:
    """Coordinate-list matrix with canonically sorted, nonzero entries."""

    rows: int
    cols: int
    entries: Tuple[Tuple[int, int, Rational], ...] = ()

    def __post_init__(self):
        merged: Dict[Tuple[int, int], Rational] = {}
        for r, c, v in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            merged[(r, c)] = merged.get((r, c), 0) + to_rational(v)
        canon = tuple((r, c, v) for (r, c), v in sorted(merged.items()) if v != 0)
        object.__setattr__(self, "entries", canon)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> "SparseMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        ents = [(i, j, v) for i, row in enumerate(data) for j, v in enumerate(row) if v != 0]
        return cls(nrows, ncols, tuple(ents))

    @classmethod
    def from_rows(cls, rows: Sequence[Row], cols: int) -> "SparseMatrix":
        ents = [(i, j, v) for i, row in enumerate(rows) for j, v in row.items()]
        return cls(len(rows), cols, tuple(ents))

    def row_dicts(self) -> List[Row]:
        out: List[Row] = [{} for _ in range(self.rows)]
        for r, c, v in self.entries:
            out[r][c] = v
        return out

    def to_dense(self) -> List[List[Rational]]:
        out = [[mpq(0)] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries:
            out[r][c] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, tuple((c, r, v) for r, c, v in self.entries))

    def apply(self, vec: Row) -> Row:
        """Matrix-vector product with a sparse column vector."""
        out: Row = {}
        for r, c, v in self.entries:
            x = vec.get(c)
            if x:
                s = out.get(r, 0) + v * x
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return out


def _axpy(target: Row, coeff: Rational, source: Row) -> None:
    """target -= coeff * source, dropping cancelled entries."""
    for c, v in source.items():
        nv = target.get(c, 0) - coeff * v
        if nv:
            target[c] = nv
        else:
            target.pop(c, None)


@dataclass
class Echelonizer:
    """Incremental reduced row echelon form.

    Rows are fed one at a time with :meth:`add`; each is reduced against
    the current pivots and, if nonzero, normalized so its leading (smallest)
    column carries a 1.  :meth:`finalize` back-substitutes so every pivot
    column is zero outside its own row.  The resulting RREF is unique for the
    row space, independent of insertion order.
    """

    pivots: Dict[int, Row] = field(default_factory=dict)
    reduced: bool = True

    def reduce(self, row: Row) -> Row:
        """Return ``row`` reduced against every current pivot (copy)."""
        row = {c: to_rational(v) for c, v in row.items() if v}
        if not self.pivots:
            return row
        heap = list(row)
        heapq.heapify(heap)
        seen = set(heap)
        pivots = self.pivots
        while heap:
            c = heapq.heappop(heap)
            f = row.get(c)
            if not f or c not in pivots:
                continue
            prow = pivots[c]
            for cc, v in prow.items():
                nv = row.get(cc, 0) - f * v
                if nv:
                    row[cc] = nv
                    if cc not in seen:
                        seen.add(cc)
                        heapq.heappush(heap, cc)
                else:
                    row.pop(cc, None)
        return row

    def add(self, row: Row) -> bool:
        """Insert a row; return True when it enlarged the row space."""
        row = self.reduce(row)
        if not row:
            return False
        lead = min(row)
        inv = 1 / row[lead]
        if inv != 1:
            row = {c: v * inv for c, v in row.items()}
        self.pivots[lead] = row
        self.reduced = False
        return True

    def extend(self, rows: Iterable[Row]) -> None:
        for r in rows:
            self.add(r)

    def finalize(self) -> None:
        if self.reduced:
            return
        cols = sorted(self.pivots, reverse=True)
        done: Dict[int, Row] = {}
        for p in cols:
            row = self.pivots[p]
            for c in sorted(c for c in row if c != p and c in done):
                f = row.get(c)
                if f:
                    _axpy(row, f, done[c])
            done[p] = row
        self.reduced = True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def pivot_columns(self) -> List[int]:
        return sorted(self.pivots)

    def rows(self) -> List[Row]:
        self.finalize()
        return [self.pivots[p] for p in sorted(self.pivots)]


def rref(m: SparseMatrix) -> Tuple[SparseMatrix, List[int]]:
    """Reduced row echelon form of ``m`` and its pivot columns.

    The echelon matrix has the same shape as ``m``; zero rows are at the
    bottom.
    """
    ech = Echelonizer()
    ech.extend(m.row_dicts())
    rows = ech.rows()
    ents = [(i, c, v) for i, row in enumerate(rows) for c, v in row.items()]
    return SparseMatrix(m.rows, m.cols, tuple(ents)), ech.pivot_columns()


def rank(m: SparseMatrix) -> int:
    ech = Echelonizer()
    ech.extend(m.row_dicts())
    return ech.rank


def kernel_basis(m: SparseMatrix) -> List[Row]:
    """Basis of the right kernel {x : m x = 0}, one vector per free column.

    Vector ``k`` has a 1 in its free column and is zero in every other free
    column.
    """
    ech = Echelonizer()
    ech.extend(m.row_dicts())
    ech.finalize()
    pivots = ech.pivots
    basis: List[Row] = []
    for free in range(m.cols):
        if free in pivots:
            continue
        vec: Row = {free: mpq(1)}
        for p, row in pivots.items():
            v = row.get(free)
            if v:
                vec[p] = -v
        basis.append(vec)
    return basis
