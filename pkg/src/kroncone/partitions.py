"""Integer partitions and the lexicographic grid<->line bijection.

Partitions are plain tuples of non-negative integers in weakly decreasing
order.  Trailing zeros are permitted everywhere (cone coordinates carry a
fixed arity), and two partitions are considered equal when they agree after
stripping trailing zeros.
"""

from __future__ import annotations

from typing import Iterator, Sequence

Partition = tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    """Weakly decreasing and non-negative.

    >>> is_partition((3, 1, 0)), is_partition((1, 2))
    (True, False)
    """
    return all(p >= 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if not is_partition(p):
        raise ValueError(f"not weakly decreasing and non-negative: {p}")
    return p


def weight(p: Sequence[int]) -> int:
    return sum(p)


def length(p: Sequence[int]) -> int:
    """Number of non-zero parts."""
    return sum(1 for x in p if x > 0)


def strip_zeros(p: Sequence[int]) -> Partition:
    return tuple(x for x in p if x > 0)


def pad(p: Sequence[int], arity: int) -> Partition:
    """Append trailing zeros up to ``arity``; reject longer partitions."""
    q = strip_zeros(p)
    if len(q) > arity:
        raise ValueError(f"partition {tuple(p)} has more than {arity} parts")
    return q + (0,) * (arity - len(q))


def add(p: Sequence[int], q: Sequence[int]) -> Partition:
    """Component-wise sum after zero-padding to a common length."""
    n = max(len(p), len(q))
    return tuple(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def scale(p: Sequence[int], d: int) -> Partition:
    if d < 0:
        raise ValueError("scale factor must be non-negative")
    return tuple(d * x for x in p)


def is_regular(p: Sequence[int], arity: int) -> bool:
    """Pairwise distinct parts when padded to ``arity``, last possibly 0.

    >>> is_regular((4, 3, 1), 3), is_regular((4, 4, 1), 3), is_regular((2, 1), 3)
    (True, False, False)
    """
    q = pad(p, arity)
    return all(q[i] > q[i + 1] for i in range(arity - 1))


def partitions_of(n: int, max_len: int | None = None) -> list[Partition]:
    """All partitions of ``n`` with at most ``max_len`` non-zero parts.

    Deterministic reverse-lexicographic order, each exactly once.

    >>> partitions_of(4, 2)
    [(4,), (3, 1), (2, 2)]
    >>> partitions_of(0, 5)
    [()]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_len is None:
        max_len = n
    return list(_gen(n, n, max_len))


def _gen(n: int, largest: int, slots: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    if slots == 0:
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _gen(n - first, first, slots - 1):
            yield (first,) + rest


def count_partitions(n: int, max_len: int | None = None) -> int:
    return len(partitions_of(n, max_len))


def conjugate(p: Sequence[int]) -> Partition:
    q = strip_zeros(p)
    if not q:
        return ()
    return tuple(sum(1 for x in q if x >= j) for j in range(1, q[0] + 1))


def hook_lengths_product(p: Sequence[int]) -> int:
    """Product of all hook lengths of the diagram of ``p``."""
    q = strip_zeros(p)
    conj = conjugate(q)
    prod = 1
    for i, row in enumerate(q):
        for j in range(row):
            prod *= (row - j) + (conj[j] - i) - 1
    return prod


# --- the grid <-> line bijection -------------------------------------------
#
# Cells of an n1 x n2 grid are addressed by 1-based (row, col); the line
# index enumerates cells row by row.

def lex_index(row: int, col: int, n1: int, n2: int) -> int:
    """1-based line position of cell (row, col).

    >>> lex_index(2, 1, 2, 2)
    3
    >>> lex_index(3, 2, 3, 3)
    8
    """
    if not (1 <= row <= n1 and 1 <= col <= n2):
        raise ValueError(f"cell ({row}, {col}) outside a {n1}x{n2} grid")
    return (row - 1) * n2 + col


def unlex_index(pos: int, n1: int, n2: int) -> tuple[int, int]:
    """Inverse of :func:`lex_index`."""
    if not 1 <= pos <= n1 * n2:
        raise ValueError(f"position {pos} outside 1..{n1 * n2}")
    return (pos - 1) // n2 + 1, (pos - 1) % n2 + 1
