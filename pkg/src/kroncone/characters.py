"""Exact symmetric-group characters via the rim-hook (border-strip) recursion.

Character values are computed by repeatedly stripping a border strip whose
size is the next part of the conjugacy class, with the usual alternating
sign by strip height.  The recursion is memoised on
(remaining shape, remaining class suffix); the table is shared across all
queries in the process, which is what makes the d-scaled stability probes
affordable.  Reads and idempotent inserts on the table are safe under
concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .partitions import Partition, partitions_of, strip_zeros, weight


class InternalConsistencyError(RuntimeError):
    """Exact arithmetic produced an impossible intermediate result."""


@dataclass(frozen=True)
class ClassType:
    """A conjugacy class of S_N: cycle type plus centralizer order."""

    cycle_type: Partition
    centralizer_order: int

    @classmethod
    def from_cycle_type(cls, parts) -> "ClassType":
        p = strip_zeros(parts)
        return cls(p, centralizer_order(p))

    @property
    def size(self) -> int:
        return factorial(weight(self.cycle_type)) // self.centralizer_order


def centralizer_order(cycle_type: Partition) -> int:
    """z = prod_i i^{m_i} * m_i! over part multiplicities m_i."""
    z = 1
    mult: dict[int, int] = {}
    for part in cycle_type:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        z *= part**m * factorial(m)
    return z


def class_types(n: int) -> list[ClassType]:
    return [ClassType.from_cycle_type(p) for p in partitions_of(n)]


_memo: dict[tuple[Partition, Partition], int] = {}


def character(shape, class_parts) -> int:
    """Character of the irreducible labelled by ``shape`` on the class with
    cycle type ``class_parts``; both of the same weight.

    >>> character((2, 1), (3,))
    -1
    >>> character((4,), (2, 1, 1))
    1
    """
    lam = strip_zeros(shape)
    mu = strip_zeros(class_parts)
    if weight(lam) != weight(mu):
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    return _strip(lam, mu)


def _strip(shape: Partition, parts: Partition) -> int:
    if not parts:
        return 1
    key = (shape, parts)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    # Beta-set form: border strips of size h correspond to beta numbers b
    # with b - h fresh; the sign counts beta numbers jumped over.
    h = parts[0]
    rest = parts[1:]
    nrows = len(shape)
    beta = [shape[i] + (nrows - 1 - i) for i in range(nrows)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        if b < h or (b - h) in beta_set:
            continue
        jumped = sum(1 for c in beta if b - h < c < b)
        new_beta = sorted((c for c in beta if c != b), reverse=True)
        new_beta.append(b - h)
        new_beta.sort(reverse=True)
        new_shape = strip_zeros(
            tuple(nb - (nrows - 1 - idx) for idx, nb in enumerate(new_beta))
        )
        sub = _strip(new_shape, rest)
        total += -sub if jumped % 2 else sub
    _memo[key] = total
    return total


def dimension(shape) -> int:
    """chi_shape at the identity class."""
    lam = strip_zeros(shape)
    n = weight(lam)
    if n == 0:
        return 1
    return character(lam, (1,) * n)


def sign_of_class(class_parts) -> int:
    mu = strip_zeros(class_parts)
    return -1 if (weight(mu) - len(mu)) % 2 else 1


def memo_size() -> int:
    return len(_memo)
