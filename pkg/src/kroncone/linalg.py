"""Exact linear algebra over the rationals, just enough for face systems.

Matrices are lists of row tuples of :class:`fractions.Fraction`.  Everything
is tiny (at most a few dozen rows over at most 15 variables), so plain
Gaussian elimination is the right tool.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Row = tuple[Fraction, ...]
Matrix = tuple[Row, ...]


def as_matrix(rows: Iterable[Sequence[int | Fraction]]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def rref(rows: Iterable[Sequence[int | Fraction]]) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form; returns (non-zero rows, pivot columns)."""
    mat = [list(row) for row in as_matrix(rows)]
    if not mat:
        return (), ()
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        head = mat[r][c]
        mat[r] = [x / head for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


def rank(rows: Iterable[Sequence[int | Fraction]]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Iterable[Sequence[int | Fraction]], ncols: int) -> Matrix:
    """Canonical basis of {c : row . c == 0 for every row}.

    The basis is itself returned in reduced row echelon form, so two
    subspaces are equal iff their nullspace outputs are equal.
    """
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][f]
        basis.append(tuple(vec))
    canonical, _ = rref(basis)
    return canonical


def same_subspace(rows_a: Iterable[Sequence[int | Fraction]],
                  rows_b: Iterable[Sequence[int | Fraction]]) -> bool:
    """Row spaces equal (after RREF)."""
    return rref(rows_a)[0] == rref(rows_b)[0]


def clear_denominators(row: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational row to coprime integers with positive leading entry."""
    from math import gcd, lcm

    denom = lcm(*[x.denominator for x in row]) if row else 1
    ints = [int(x * denom) for x in row]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x != 0), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)
