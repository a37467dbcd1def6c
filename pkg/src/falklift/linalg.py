"""Exact rank computation for sparse matrices over the rationals.

This is the numeric kernel under every linear-algebra oracle in the
package.  Entries are `fractions.Fraction`; internally every row is
scaled to integers and renormalised by its gcd during elimination, so
all arithmetic is arbitrary-precision and exact.  There is no tolerance
parameter anywhere.

Rows may be indexed by any totally ordered hashable keys (plain column
integers, or sorted index triples for exterior-algebra vectors); the
pivot of a row is always its smallest nonzero key, which makes the
elimination deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class SparseMatrix:
    """A rows x cols matrix given by its nonzero rational entries."""

    rows: int
    cols: int
    entries: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self):
        seen = set()
        for r, c, v in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry position ({r},{c}) out of range")
            if (r, c) in seen:
                raise ValueError(f"duplicate entry position ({r},{c})")
            if v == 0:
                raise ValueError(f"stored zero entry at ({r},{c})")
            seen.add((r, c))

    @classmethod
    def from_rows(cls, dense: Sequence[Sequence[Fraction | int]]) -> "SparseMatrix":
        nrows = len(dense)
        ncols = len(dense[0]) if dense else 0
        entries = []
        for i, row in enumerate(dense):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v != 0:
                    entries.append((i, j, Fraction(v)))
        return cls(nrows, ncols, tuple(entries))

    def row_dicts(self) -> list[dict[int, Fraction]]:
        rows: list[dict[int, Fraction]] = [{} for _ in range(self.rows)]
        for r, c, v in self.entries:
            rows[r][c] = v
        return rows

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(
            self.cols, self.rows, tuple((c, r, v) for r, c, v in self.entries)
        )


def _integerize(row: Mapping) -> dict:
    """Scale a rational row to coprime integers (sign preserved)."""
    out = {}
    scale = 1
    for k, v in row.items():
        if v == 0:
            continue
        f = Fraction(v)
        out[k] = f
        d = f.denominator
        scale = scale * d // gcd(scale, d)
    if not out:
        return {}
    ints = {k: int(v * scale) for k, v in out.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {k: v // g for k, v in ints.items()}
    return ints


def _normalize(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def _eliminate(rows: Iterable[Mapping]) -> int:
    """Rank of the given rows via sparse fraction-free elimination.

    Each incoming row is reduced against the stored pivot rows; the pivot
    position of a row is its first (smallest) nonzero key.  The reduction
    `a*row - b*pivot` keeps everything in integers, and rows are divided
    by their gcd after every step so intermediates stay small.
    """
    pivots: dict = {}
    rank = 0
    for raw in rows:
        row = _integerize(raw)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = _normalize(row)
                rank += 1
                break
            a, b = piv[c], row[c]
            new = {k: a * v for k, v in row.items()}
            for k, v in piv.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                elif k in new:
                    del new[k]
            row = _normalize(new)
    return rank


def rank(m: SparseMatrix) -> int:
    """Exact rank of a sparse rational matrix (empty matrix has rank 0)."""
    return _eliminate(m.row_dicts())


def rank_of_stacked(vectors: Iterable[Mapping]) -> int:
    """Rank of the matrix whose rows are the given sparse vectors.

    The vectors must share one index universe; keys need only be
    mutually comparable (ints, or sorted index tuples).
    """
    return _eliminate(vectors)
