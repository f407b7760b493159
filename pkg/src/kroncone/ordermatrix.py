"""Order matrices of additive type and their integer witnesses.

An order matrix records, for every cell of an n1 x n2 grid, the rank of
x_i + y_j in decreasing order, for strictly decreasing non-negative integer
vectors x and y with all pairwise sums distinct.  Candidate rank grids are
exactly the row- and column-increasing bijective fillings; the additive ones
are those for which such (x, y) exist, decided here by exact rational
Fourier-Motzkin elimination and certified by an explicit witness.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm

from .partitions import (
    Partition,
    check_partition,
    hook_lengths_product,
    lex_index,
    strip_zeros,
    unlex_index,
)
from .permutations import Permutation, check_permutation

Grid = tuple[tuple[int, ...], ...]
Witness = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class OrderMatrix:
    n1: int
    n2: int
    ranks: Grid
    witness: Witness

    def __post_init__(self) -> None:
        validate_rank_grid(self.ranks, self.n1, self.n2)
        x, y = self.witness
        if min(x) < 0 or min(y) < 0:
            raise ValueError(f"witness entries must be non-negative: {self.witness}")
        if order_matrix_from_witness(x, y) != self.ranks:
            raise ValueError(f"witness {self.witness} does not realise {self.ranks}")

    def rank_at(self, row: int, col: int) -> int:
        return self.ranks[row - 1][col - 1]

    def cell_of_rank(self, rank: int) -> tuple[int, int]:
        for i, row in enumerate(self.ranks, start=1):
            for j, r in enumerate(row, start=1):
                if r == rank:
                    return i, j
        raise ValueError(f"rank {rank} not present")

    def hat_w(self) -> Permutation:
        return hat_w_from_ranks(self.ranks)

    def transpose_ranks(self) -> Grid:
        return tuple(
            tuple(self.ranks[i][j] for i in range(self.n1)) for j in range(self.n2)
        )

    def to_json(self) -> dict:
        return {
            "n1": self.n1,
            "n2": self.n2,
            "ranks": [list(row) for row in self.ranks],
            "witness": {"x": list(self.witness[0]), "y": list(self.witness[1])},
        }

    @classmethod
    def from_json(cls, data: dict) -> "OrderMatrix":
        return cls(
            data["n1"],
            data["n2"],
            tuple(tuple(row) for row in data["ranks"]),
            (tuple(data["witness"]["x"]), tuple(data["witness"]["y"])),
        )


def validate_rank_grid(ranks: Grid, n1: int, n2: int) -> None:
    cells = [r for row in ranks for r in row]
    if len(ranks) != n1 or any(len(row) != n2 for row in ranks):
        raise ValueError(f"expected a {n1}x{n2} grid")
    if sorted(cells) != list(range(1, n1 * n2 + 1)):
        raise ValueError("ranks must be a bijection onto 1..n1*n2")
    for i in range(n1):
        for j in range(n2):
            if j + 1 < n2 and ranks[i][j] >= ranks[i][j + 1]:
                raise ValueError("ranks must increase along rows")
            if i + 1 < n1 and ranks[i][j] >= ranks[i + 1][j]:
                raise ValueError("ranks must increase down columns")


def hat_w_from_ranks(ranks: Grid) -> Permutation:
    """Flag word of an order matrix: position k maps to the line index of
    the cell holding rank k.

    >>> hat_w_from_ranks(((1, 3), (2, 5), (4, 6)))
    (1, 3, 2, 5, 4, 6)
    """
    n1, n2 = len(ranks), len(ranks[0])
    cells = sorted(
        ((ranks[i][j], lex_index(i + 1, j + 1, n1, n2)) for i in range(n1) for j in range(n2))
    )
    return check_permutation(tuple(pos for _, pos in cells))


def order_matrix_from_witness(x, y) -> Grid:
    """Rank grid realised by strictly decreasing vectors x, y.

    >>> order_matrix_from_witness((4, 1, 0), (7, 5, 0))
    ((1, 2, 7), (3, 5, 8), (4, 6, 9))
    """
    x, y = tuple(x), tuple(y)
    if any(x[i] <= x[i + 1] for i in range(len(x) - 1)):
        raise ValueError(f"x must be strictly decreasing: {x}")
    if any(y[j] <= y[j + 1] for j in range(len(y) - 1)):
        raise ValueError(f"y must be strictly decreasing: {y}")
    sums = sorted(
        ((xi + yj, i, j) for i, xi in enumerate(x) for j, yj in enumerate(y)),
        reverse=True,
    )
    for (a, _, _), (b, _, _) in zip(sums, sums[1:]):
        if a == b:
            raise ValueError("pairwise sums x_i + y_j must be distinct")
    grid = [[0] * len(y) for _ in x]
    for rank, (_, i, j) in enumerate(sums, start=1):
        grid[i][j] = rank
    return tuple(tuple(row) for row in grid)


def rank_grid_candidates(n1: int, n2: int) -> list[Grid]:
    """All row/column strictly increasing bijective fillings, in
    lexicographic order of the flattened grid."""
    m = n1 * n2
    out: list[Grid] = []
    flat = [0] * m

    def place(value: int) -> None:
        if value > m:
            out.append(tuple(tuple(flat[i * n2 : (i + 1) * n2]) for i in range(n1)))
            return
        for pos in range(m):
            if flat[pos]:
                continue
            i, j = divmod(pos, n2)
            if j > 0 and not flat[pos - 1]:
                continue
            if i > 0 and not flat[pos - n2]:
                continue
            flat[pos] = value
            place(value + 1)
            flat[pos] = 0

    place(1)
    return sorted(out)


def candidate_count_by_hooks(n1: int, n2: int) -> int:
    """Number of candidates via the hook length formula for the n1 x n2
    rectangle."""
    return factorial(n1 * n2) // hook_lengths_product((n2,) * n1)


# --- exact feasibility ------------------------------------------------------
#
# Variables are (x_1..x_n1, y_1..y_n2); every constraint is written as
# coeffs . vars >= rhs with integer data.  Strict inequalities carry slack 1,
# so any rational solution scales to an integer witness.

Constraint = tuple[tuple[int, ...], int]


def _witness_constraints(ranks: Grid) -> list[Constraint]:
    n1, n2 = len(ranks), len(ranks[0])
    nvars = n1 + n2
    cell_by_rank = {}
    for i in range(n1):
        for j in range(n2):
            cell_by_rank[ranks[i][j]] = (i, j)
    cons: list[Constraint] = []
    for r in range(1, n1 * n2):
        (ia, ja), (ib, jb) = cell_by_rank[r], cell_by_rank[r + 1]
        coeffs = [0] * nvars
        coeffs[ia] += 1
        coeffs[n1 + ja] += 1
        coeffs[ib] -= 1
        coeffs[n1 + jb] -= 1
        cons.append((tuple(coeffs), 1))
    for i in range(n1 - 1):
        coeffs = [0] * nvars
        coeffs[i], coeffs[i + 1] = 1, -1
        cons.append((tuple(coeffs), 1))
    for j in range(n2 - 1):
        coeffs = [0] * nvars
        coeffs[n1 + j], coeffs[n1 + j + 1] = 1, -1
        cons.append((tuple(coeffs), 1))
    for last in (n1 - 1, n1 + n2 - 1):
        coeffs = [0] * nvars
        coeffs[last] = 1
        cons.append((tuple(coeffs), 0))
    return cons


def _fourier_motzkin(
    cons: list[Constraint], nvars: int
) -> tuple[tuple[int, ...], ...] | list[int]:
    """Either a rational solution (as a witness of feasibility, returned as
    an index list of an infeasible core is NOT produced) or, on infeasibility,
    the indices of an inconsistent subset of the original constraints.

    Returns a tuple of Fractions on success, a list of indices on failure.
    """
    # rows: (coeffs as Fractions, rhs, provenance set of original indices)
    rows = [
        (tuple(Fraction(c) for c in coeffs), Fraction(rhs), frozenset([idx]))
        for idx, (coeffs, rhs) in enumerate(cons)
    ]
    eliminated: list[tuple[int, list]] = []
    for var in range(nvars - 1, -1, -1):
        lowers, uppers, rest = [], [], []
        for coeffs, rhs, prov in rows:
            c = coeffs[var]
            if c > 0:
                lowers.append((coeffs, rhs, prov))  # var >= (rhs - rest)/c
            elif c < 0:
                uppers.append((coeffs, rhs, prov))
            else:
                rest.append((coeffs, rhs, prov))
        eliminated.append((var, lowers))
        new_rows = rest
        for lc, lr, lp in lowers:
            for uc, ur, up in uppers:
                scale_l, scale_u = -uc[var], lc[var]
                coeffs = tuple(
                    scale_l * a + scale_u * b for a, b in zip(lc, uc)
                )
                rhs = scale_l * lr + scale_u * ur
                prov = lp | up
                if all(c == 0 for c in coeffs):
                    if rhs > 0:
                        return sorted(prov)
                    continue
                new_rows.append((coeffs, rhs, prov))
        rows = new_rows
    for coeffs, rhs, prov in rows:
        if rhs > 0:
            return sorted(prov)
    # Back-substitute, taking each variable at its tightest lower bound.
    values: dict[int, Fraction] = {}
    for var, lowers in reversed(eliminated):
        bound = Fraction(0)
        for coeffs, rhs, _ in lowers:
            other = sum(
                (coeffs[w] * values[w] for w in values if coeffs[w] != 0),
                start=Fraction(0),
            )
            bound = max(bound, (rhs - other) / coeffs[var])
        values[var] = bound
    return tuple(values[v] for v in range(nvars))


def additive_feasibility(ranks: Grid) -> Witness | None:
    """Integer witness (x, y) realising the rank grid, or None with the
    infeasibility recorded by :func:`infeasibility_core`.

    The witness is minimised (smallest maximal entry, then lexicographically
    smallest) so report output is reproducible.
    """
    n1, n2 = len(ranks), len(ranks[0])
    sol = _fourier_motzkin(_witness_constraints(ranks), n1 + n2)
    if isinstance(sol, list):
        return None
    denom = lcm(*[f.denominator for f in sol])
    ints = [int(f * denom) for f in sol]
    x0, y0 = tuple(ints[:n1]), tuple(ints[n1:])
    assert order_matrix_from_witness(x0, y0) == ranks
    return _minimise_witness(ranks, max(max(x0), max(y0)))


def infeasibility_core(ranks: Grid) -> list[Constraint]:
    """A minimal inconsistent subset of the witness constraints."""
    cons = _witness_constraints(ranks)
    n1, n2 = len(ranks), len(ranks[0])
    core = _fourier_motzkin(cons, n1 + n2)
    if not isinstance(core, list):
        raise ValueError("rank grid is additive; there is no conflict")
    keep = list(core)
    for idx in list(keep):
        trial = [cons[i] for i in keep if i != idx]
        if isinstance(_fourier_motzkin(trial, n1 + n2), list):
            keep.remove(idx)
    return [cons[i] for i in keep]


def _decreasing_tuples(length: int, bound: int):
    for combo in itertools.combinations(range(bound, -1, -1), length):
        yield combo


def _minimise_witness(ranks: Grid, bound: int) -> Witness:
    # Smallest maximal entry first, then smallest total, then scan order;
    # this reproduces the witnesses quoted in the acceptance data.
    n1, n2 = len(ranks), len(ranks[0])
    for cap in range(1, bound + 1):
        best: Witness | None = None
        best_total = None
        for x in _decreasing_tuples(n1, cap):
            for y in _decreasing_tuples(n2, cap):
                if max(x[0], y[0]) != cap:
                    continue
                total = sum(x) + sum(y)
                if best_total is not None and total >= best_total:
                    continue
                try:
                    if order_matrix_from_witness(x, y) == ranks:
                        best, best_total = (x, y), total
                except ValueError:
                    continue
        if best is not None:
            return best
    raise AssertionError("feasible grid lost its witness during minimisation")


def enumerate_order_matrices(n1: int, n2: int) -> list[OrderMatrix]:
    """All order matrices of the given size, in lexicographic rank-grid
    order; complete and duplicate-free.

    >>> [len(enumerate_order_matrices(*s)) for s in [(2, 2), (3, 2)]]
    [2, 5]
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("grid dimensions must be positive")
    out = []
    for ranks in rank_grid_candidates(n1, n2):
        witness = additive_feasibility(ranks)
        if witness is not None:
            out.append(OrderMatrix(n1, n2, ranks, witness))
    return out


# --- additive matrices and their marginal triples ---------------------------

@dataclass(frozen=True)
class AdditiveMatrix:
    entries: Grid

    def __post_init__(self) -> None:
        if any(e < 0 for row in self.entries for e in row):
            raise ValueError("entries must be non-negative")


def marginals_and_pi(matrix: AdditiveMatrix) -> tuple[Partition, Partition, Partition]:
    """Row sums, column sums, and sorted entries of a matrix whose marginals
    are weakly decreasing.

    >>> marginals_and_pi(AdditiveMatrix(((3, 2), (3, 1))))
    ((5, 4), (6, 3), (3, 3, 2, 1))
    """
    rows = tuple(sum(row) for row in matrix.entries)
    cols = tuple(sum(col) for col in zip(*matrix.entries))
    lam = check_partition(rows)
    mu = check_partition(cols)
    nu = tuple(sorted((e for row in matrix.entries for e in row), reverse=True))
    return lam, mu, nu


def order_type_of_additive(matrix: AdditiveMatrix) -> Grid:
    """Rank grid of an additive matrix with pairwise distinct entries."""
    flat = [e for row in matrix.entries for e in row]
    if len(set(flat)) != len(flat):
        raise ValueError("entries must be pairwise distinct")
    n1, n2 = len(matrix.entries), len(matrix.entries[0])
    order = sorted(
        ((matrix.entries[i][j], i, j) for i in range(n1) for j in range(n2)),
        reverse=True,
    )
    grid = [[0] * n2 for _ in range(n1)]
    for rank, (_, i, j) in enumerate(order, start=1):
        grid[i][j] = rank
    return tuple(tuple(row) for row in grid)


def matrices_to_json(matrices: list[OrderMatrix]) -> str:
    return json.dumps([m.to_json() for m in matrices], indent=2)
