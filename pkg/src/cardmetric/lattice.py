"""Exact integer-lattice membership via Hermite-style elimination.

All arithmetic uses Python ints, so nothing overflows at any rank.  The
reduction keeps a basis in column-echelon form (one pivot row per stored
vector, pivots strictly increasing), which is enough to decide membership
and to read off the lattice index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b), g >= 0 for b != 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


@dataclass(frozen=True)
class IntegerMatrix:
    """Rectangular matrix of exact integers, stored row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for i, row in enumerate(self.entries):
            if len(row) != self.cols:
                raise ValueError(f"row {i} has length {len(row)}, expected {self.cols}")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"row {i} contains non-integer entry {x!r}")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int | None = None) -> "IntegerMatrix":
        """Build a matrix whose columns are the given vectors.

        ``rows`` is required when ``columns`` is empty (the ambient dimension
        cannot be inferred from nothing).
        """
        columns = [tuple(c) for c in columns]
        if rows is None:
            if not columns:
                raise ValueError("rows must be given for an empty column list")
            rows = len(columns[0])
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ValueError(f"column {j} has length {len(col)}, expected {rows}")
        entries = tuple(tuple(col[i] for col in columns) for i in range(rows))
        return cls(rows=rows, cols=len(columns), entries=entries)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]


class LatticeBasis:
    """Echelonized integer span of a set of vectors in Z^n.

    Vectors are absorbed one at a time; the stored basis always has distinct,
    increasing pivot positions, so membership is a single forward reduction.
    """

    def __init__(self, dimension: int):
        if dimension < 0:
            raise ValueError("dimension must be nonnegative")
        self.dimension = dimension
        self._rows: list[list[int]] = []
        self._pivots: list[int] = []

    def add(self, vector: Sequence[int]) -> None:
        vec = list(vector)
        if len(vec) != self.dimension:
            raise ValueError(f"vector has length {len(vec)}, expected {self.dimension}")
        for j in range(self.dimension):
            if vec[j] == 0:
                continue
            if j not in self._pivots:
                pos = 0
                while pos < len(self._pivots) and self._pivots[pos] < j:
                    pos += 1
                self._rows.insert(pos, vec)
                self._pivots.insert(pos, j)
                self._normalize(pos)
                return
            p = self._pivots.index(j)
            row = self._rows[p]
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                for k in range(j, self.dimension):
                    vec[k] -= q * row[k]
            else:
                g, x, y = xgcd(a, b)
                qa, qb = a // g, b // g
                for k in range(j, self.dimension):
                    rk, vk = row[k], vec[k]
                    row[k] = x * rk + y * vk
                    vec[k] = -qb * rk + qa * vk
        # vec fully reduced to zero: nothing new to span

    def _normalize(self, pos: int) -> None:
        row = self._rows[pos]
        if row[self._pivots[pos]] < 0:
            self._rows[pos] = [-x for x in row]

    def contains(self, vector: Sequence[int]) -> bool:
        vec = list(vector)
        if len(vec) != self.dimension:
            raise ValueError(f"vector has length {len(vec)}, expected {self.dimension}")
        for j in range(self.dimension):
            if vec[j] == 0:
                continue
            if j not in self._pivots:
                return False
            row = self._rows[self._pivots.index(j)]
            if vec[j] % row[j] != 0:
                return False
            q = vec[j] // row[j]
            for k in range(j, self.dimension):
                vec[k] -= q * row[k]
        return True

    def rank(self) -> int:
        return len(self._rows)

    def index_in_ambient(self) -> int | None:
        """Index of the lattice in Z^n: product of pivots, or None if infinite."""
        if len(self._rows) < self.dimension:
            return None
        result = 1
        for p, row in zip(self._pivots, self._rows):
            result *= abs(row[p])
        return result


def basis_from_matrix(basis: IntegerMatrix) -> LatticeBasis:
    lat = LatticeBasis(basis.rows)
    for col in basis.columns():
        lat.add(col)
    return lat


def lattice_membership(basis: IntegerMatrix, v: Sequence[int]) -> bool:
    """True iff v is an integer combination of the basis columns."""
    if len(v) != basis.rows:
        raise ValueError(f"vector has length {len(v)}, expected {basis.rows}")
    return basis_from_matrix(basis).contains(v)


def lattice_index(basis: IntegerMatrix) -> int | None:
    """Index [Z^n : span(columns)], or None when the span has deficient rank."""
    return basis_from_matrix(basis).index_in_ambient()
