"""Permutations in one-line notation.

A permutation of {1..m} is a tuple ``p`` with ``p[k-1] == p(k)``.  One-line
notation is the canonical internal form; cycle notation exists only as a
report-layer text format (see :func:`cycles_string` / :func:`parse_cycles`).

Products compose right-to-left: ``compose(p, q)(k) == p(q(k))``.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

Permutation = tuple[int, ...]


def check_permutation(one_line: Sequence[int]) -> Permutation:
    p = tuple(one_line)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a bijection of 1..{len(p)}: {p}")
    return p


def identity(m: int) -> Permutation:
    return tuple(range(1, m + 1))


def is_identity(p: Sequence[int]) -> bool:
    return all(p[i] == i + 1 for i in range(len(p)))


def longest_element(m: int) -> Permutation:
    """The order-reversing involution (m, m-1, ..., 1).

    >>> longest_element(4)
    (4, 3, 2, 1)
    """
    if m < 1:
        raise ValueError("m must be positive")
    return tuple(range(m, 0, -1))


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """(p o q)(k) = p(q(k))."""
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    return tuple(p[x - 1] for x in q)


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for k, x in enumerate(p, start=1):
        inv[x - 1] = k
    return tuple(inv)


def apply(p: Sequence[int], k: int) -> int:
    return p[k - 1]


def transposition(m: int, a: int, b: int) -> Permutation:
    one_line = list(range(1, m + 1))
    one_line[a - 1], one_line[b - 1] = b, a
    return tuple(one_line)


def cycle(m: int, entries: Sequence[int]) -> Permutation:
    """The cycle sending entries[0] -> entries[1] -> ... -> entries[0]."""
    one_line = list(range(1, m + 1))
    for pos, x in enumerate(entries):
        one_line[x - 1] = entries[(pos + 1) % len(entries)]
    return check_permutation(one_line)


def coxeter_length(p: Sequence[int]) -> int:
    """Number of inversions, i.e. the length in the Coxeter presentation."""
    return sum(
        1
        for a in range(len(p))
        for b in range(a + 1, len(p))
        if p[a] > p[b]
    )


def length_if_at_most(p: Sequence[int], cap: int) -> int | None:
    """Inversion count, or None as soon as it exceeds ``cap``."""
    count = 0
    for a in range(len(p)):
        pa = p[a]
        for b in range(a + 1, len(p)):
            if pa > p[b]:
                count += 1
                if count > cap:
                    return None
    return count


def elements_of_length(m: int, ell: int) -> Iterator[Permutation]:
    """All permutations of {1..m} with exactly ``ell`` inversions."""
    for p in itertools.permutations(range(1, m + 1)):
        if coxeter_length(p) == ell:
            yield p


def disjoint_cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycles sorted by smallest element, each starting at its smallest
    element; fixed points omitted."""
    seen = [False] * len(p)
    out = []
    for start in range(1, len(p) + 1):
        if seen[start - 1]:
            continue
        cyc = []
        k = start
        while not seen[k - 1]:
            seen[k - 1] = True
            cyc.append(k)
            k = p[k - 1]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    """Lengths of all cycles (fixed points included), weakly decreasing."""
    seen = [False] * len(p)
    lengths = []
    for start in range(1, len(p) + 1):
        if seen[start - 1]:
            continue
        n = 0
        k = start
        while not seen[k - 1]:
            seen[k - 1] = True
            n += 1
            k = p[k - 1]
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def cycles_string(p: Sequence[int]) -> str:
    """Report form: "(a b c)(d e)" with fixed points omitted, "id" for the
    identity.

    >>> cycles_string((2, 4, 3, 1))
    '(1 2 4)'
    >>> cycles_string((1, 2, 3))
    'id'
    """
    cycles = disjoint_cycles(p)
    if not cycles:
        return "id"
    return "".join("(" + " ".join(str(x) for x in cyc) + ")" for cyc in cycles)


def parse_cycles(text: str, m: int) -> Permutation:
    """Inverse of :func:`cycles_string` for permutations of {1..m}."""
    text = text.strip()
    if text == "id":
        return identity(m)
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"malformed cycle string: {text!r}")
    one_line = list(range(1, m + 1))
    for chunk in text[1:-1].split(")("):
        entries = [int(tok) for tok in chunk.split()]
        if len(entries) != len(set(entries)) or any(not 1 <= x <= m for x in entries):
            raise ValueError(f"malformed cycle string: {text!r}")
        for pos, x in enumerate(entries):
            one_line[x - 1] = entries[(pos + 1) % len(entries)]
    return check_permutation(one_line)


def grid_embedding(sigma1: Sequence[int], sigma2: Sequence[int]) -> Permutation:
    """Embed (s1, s2) in S_n1 x S_n2 into S_{n1*n2} by the cell action
    (i, j) -> (s1(i), s2(j)) on line positions."""
    n1, n2 = len(sigma1), len(sigma2)
    one_line = [0] * (n1 * n2)
    for i in range(1, n1 + 1):
        for j in range(1, n2 + 1):
            src = (i - 1) * n2 + j
            dst = (sigma1[i - 1] - 1) * n2 + sigma2[j - 1]
            one_line[src - 1] = dst
    return tuple(one_line)
