"""Exact Kronecker coefficients and empirical stability probes.

g(alpha, beta, gamma) is the multiplicity of the irreducible labelled by
gamma inside the tensor product of the ones labelled by alpha and beta, for
the symmetric group of their common weight; triples of unequal weight get 0.
All arithmetic is exact: the class-weighted character sum must divide
evenly, anything else is an internal-consistency error rather than a result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .characters import InternalConsistencyError, _strip, class_types
from .partitions import Partition, strip_zeros, weight, add, scale

STABLE = "stable-evidence"
ALMOST_STABLE = "almost-stable-evidence"
REFUTED = "refuted"
UNDETERMINED = "undetermined"


def kronecker(alpha, beta, gamma) -> int:
    """Exact Kronecker coefficient; 0 when the weights disagree.

    >>> kronecker((1,), (1,), (1,))
    1
    >>> kronecker((2,), (1, 1), (2,))
    0
    """
    a, b, c = strip_zeros(alpha), strip_zeros(beta), strip_zeros(gamma)
    n = weight(a)
    if weight(b) != n or weight(c) != n:
        return 0
    if n == 0:
        return 1
    acc = 0
    for cls in class_types(n):
        xa = _strip(a, cls.cycle_type)
        if xa == 0:
            continue
        xb = _strip(b, cls.cycle_type)
        if xb == 0:
            continue
        xc = _strip(c, cls.cycle_type)
        acc += cls.size * xa * xb * xc
    g, rem = divmod(acc, factorial(n))
    if rem != 0:
        raise InternalConsistencyError(
            f"character sum for {a},{b},{c} is not an integer multiple of {n}!"
        )
    if g < 0:
        raise InternalConsistencyError(f"negative multiplicity {g} for {a},{b},{c}")
    return g


def kronecker_rational(alpha, beta, gamma) -> int:
    """Same coefficient summed as exact rationals 1/z_mu; independent route
    used to cross-check :func:`kronecker`."""
    a, b, c = strip_zeros(alpha), strip_zeros(beta), strip_zeros(gamma)
    n = weight(a)
    if weight(b) != n or weight(c) != n:
        return 0
    if n == 0:
        return 1
    acc = Fraction(0)
    for cls in class_types(n):
        prod = (
            _strip(a, cls.cycle_type)
            * _strip(b, cls.cycle_type)
            * _strip(c, cls.cycle_type)
        )
        if prod:
            acc += Fraction(prod, cls.centralizer_order)
    if acc.denominator != 1:
        raise InternalConsistencyError(f"non-integer total {acc} for {a},{b},{c}")
    return int(acc)


@dataclass(frozen=True)
class ProbeResult:
    verdict: str
    values: tuple[int, ...]


def stability_probe(alpha, beta, gamma, depth: int) -> ProbeResult:
    """Values g(d*alpha, d*beta, d*gamma) for d = 1..depth plus a verdict.

    stable-evidence: all 1.  almost-stable-evidence: all <= 1 with some 1.
    refuted: some value >= 2.  undetermined: all 0 (the triple may still lie
    in the cone at larger d; absence is never claimed).
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    values = tuple(
        kronecker(scale(alpha, d), scale(beta, d), scale(gamma, d))
        for d in range(1, depth + 1)
    )
    if any(v >= 2 for v in values):
        verdict = REFUTED
    elif all(v == 1 for v in values):
        verdict = STABLE
    elif any(v == 1 for v in values):
        verdict = ALMOST_STABLE
    else:
        verdict = UNDETERMINED
    return ProbeResult(verdict, values)


def first_nonzero_scale(alpha, beta, gamma, depth: int) -> tuple[int, int] | None:
    """Smallest d <= depth with g(d*alpha, d*beta, d*gamma) != 0, with the
    value; None when every probed multiple vanishes."""
    for d in range(1, depth + 1):
        g = kronecker(scale(alpha, d), scale(beta, d), scale(gamma, d))
        if g != 0:
            return d, g
    return None


def murnaghan_probe(base, direction, d_max: int) -> tuple[int, ...]:
    """Values g(base + d*direction) for d = 0..d_max, component-wise on the
    three partitions; used to watch translated sequences settle."""
    if d_max < 2:
        raise ValueError("d_max must be at least 2")
    lam, mu, nu = base
    a, b, c = direction
    out = []
    for d in range(d_max + 1):
        out.append(
            kronecker(add(lam, scale(a, d)), add(mu, scale(b, d)), add(nu, scale(c, d)))
        )
    return tuple(out)
