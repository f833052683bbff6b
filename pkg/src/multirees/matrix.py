"""Dense exact integer matrices with fraction-free elimination."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class IntegerMatrix:
    entries: Tuple[Tuple[int, ...], ...]
    cols: int

    def __init__(self, entries: Sequence[Sequence[int]], cols: int = None):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix([self.column(j) for j in range(self.cols)], self.rows)

    def vstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if other.cols != self.cols:
            raise ValueError("column counts differ")
        return IntegerMatrix(self.entries + other.entries, self.cols)

    def hstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if other.rows != self.rows:
            raise ValueError("row counts differ")
        return IntegerMatrix([a + b for a, b in zip(self.entries, other.entries)], self.cols + other.cols)

    def rank(self) -> int:
        return bareiss_rank(self.entries, self.cols)

    def nullity(self) -> int:
        return self.cols - self.rank()

    def tolist(self) -> List[List[int]]:
        return [list(r) for r in self.entries]

    def __str__(self):
        if not self.entries:
            return f"[] (0x{self.cols})"
        width = max(len(str(x)) for r in self.entries for x in r)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]" for r in self.entries)

    @classmethod
    def identity(cls, n: int, sign: int = 1) -> "IntegerMatrix":
        return cls([[sign if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)


def bareiss_rank(rows: Sequence[Sequence[int]], cols: int) -> int:
    """Rank by fraction-free Gaussian elimination (all divisions are exact)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((r for r in range(rank, nrows) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for r in range(rank + 1, nrows):
            a = m[r][c]
            row = m[r]
            prow = m[rank]
            for k in range(c + 1, cols):
                row[k] = (p * row[k] - a * prow[k]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def nullspace(rows: Sequence[Sequence[int]], cols: int) -> List[Tuple[Fraction, ...]]:
    """Basis of the rational right kernel, one vector per free column."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][f]
        basis.append(tuple(v))
    return basis


def primitive(v: Sequence[Fraction]) -> Tuple[int, ...]:
    """Clear denominators and divide out the gcd."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)
