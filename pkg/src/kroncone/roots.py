"""Type-A root systems for GL(n1) x GL(n2) inside GL(n1*n2).

Weights of the small torus are integer vectors (eps | eta); weights of the
big torus are integer vectors in the eps-hat coordinates, indexed by line
positions of grid cells.  Restriction sends the k-th coordinate to
eps_row(k) + eta_col(k).

For a permutation u, the inversion set Phi(u) is the set of negative roots
that u^{-1} maps to positive ones; its size is the Coxeter length of u.
Sign convention: positive roots are e_p - e_q with p < q (upper-triangular
Borel).  This is pinned so that the zero-length pair (v = 1, vhat^{-1} =
what*w0) passes the dominance test for every order matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import unlex_index
from .permutations import (
    Permutation,
    compose,
    coxeter_length,
    inverse,
    longest_element,
)

PermPair = tuple[Permutation, Permutation]


@dataclass(frozen=True)
class GWeight:
    """A weight of the small torus: sum of eps and eta coordinates."""

    eps: tuple[int, ...]
    eta: tuple[int, ...]

    def __add__(self, other: "GWeight") -> "GWeight":
        return GWeight(
            tuple(a + b for a, b in zip(self.eps, other.eps)),
            tuple(a + b for a, b in zip(self.eta, other.eta)),
        )

    def is_zero(self) -> bool:
        return not any(self.eps) and not any(self.eta)


@dataclass(frozen=True)
class HatWeight:
    """A weight of the big torus in eps-hat coordinates."""

    coeffs: tuple[int, ...]

    def __add__(self, other: "HatWeight") -> "HatWeight":
        return HatWeight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))


def g_zero(n1: int, n2: int) -> GWeight:
    return GWeight((0,) * n1, (0,) * n2)


def eps_root(hi: int, lo: int, n1: int, n2: int) -> GWeight:
    """eps_hi - eps_lo."""
    eps = [0] * n1
    eps[hi - 1] += 1
    eps[lo - 1] -= 1
    return GWeight(tuple(eps), (0,) * n2)


def eta_root(hi: int, lo: int, n1: int, n2: int) -> GWeight:
    eta = [0] * n2
    eta[hi - 1] += 1
    eta[lo - 1] -= 1
    return GWeight((0,) * n1, tuple(eta))


def hat_root(hi: int, lo: int, m: int) -> HatWeight:
    """eps-hat_hi - eps-hat_lo."""
    coeffs = [0] * m
    coeffs[hi - 1] += 1
    coeffs[lo - 1] -= 1
    return HatWeight(tuple(coeffs))


def act_g(w: PermPair, x: GWeight) -> GWeight:
    """w moves the coordinate at l to w(l): (w.x)_{w(l)} = x_l."""
    s1, s2 = w
    eps = [0] * len(x.eps)
    eta = [0] * len(x.eta)
    for l, c in enumerate(x.eps, start=1):
        eps[s1[l - 1] - 1] = c
    for l, c in enumerate(x.eta, start=1):
        eta[s2[l - 1] - 1] = c
    return GWeight(tuple(eps), tuple(eta))


def act_hat(w: Permutation, x: HatWeight) -> HatWeight:
    out = [0] * len(x.coeffs)
    for l, c in enumerate(x.coeffs, start=1):
        out[w[l - 1] - 1] = c
    return HatWeight(tuple(out))


def restrict(x: HatWeight, n1: int, n2: int) -> GWeight:
    """Restriction eps-hat_(i,j) -> eps_i + eta_j, extended linearly."""
    eps = [0] * n1
    eta = [0] * n2
    for pos, c in enumerate(x.coeffs, start=1):
        if c:
            i, j = unlex_index(pos, n1, n2)
            eps[i - 1] += c
            eta[j - 1] += c
    return GWeight(tuple(eps), tuple(eta))


def hat_inversion_set(u: Permutation) -> frozenset[HatWeight]:
    """Phi(u) on the big side: negative roots u pulls from positive ones.

    >>> len(hat_inversion_set((4, 3, 2, 1)))
    6
    """
    m = len(u)
    return frozenset(
        hat_root(u[a], u[b], m)
        for a in range(m)
        for b in range(a + 1, m)
        if u[a] > u[b]
    )


def g_inversion_set(v: PermPair, n1: int, n2: int) -> frozenset[GWeight]:
    """Phi(v) on the small side, as a set of G-roots."""
    s1, s2 = v
    roots: set[GWeight] = set()
    for a in range(n1):
        for b in range(a + 1, n1):
            if s1[a] > s1[b]:
                roots.add(eps_root(s1[a], s1[b], n1, n2))
    for a in range(n2):
        for b in range(a + 1, n2):
            if s2[a] > s2[b]:
                roots.add(eta_root(s2[a], s2[b], n1, n2))
    return frozenset(roots)


def pair_length(v: PermPair) -> int:
    return coxeter_length(v[0]) + coxeter_length(v[1])


def dominance_check(v: PermPair, v_hat: Permutation, w_hat: Permutation) -> bool:
    """Dominance test for the fixed point determined by (v, v_hat) on an
    order matrix with flag word w_hat.

    With sigma = w_hat^{-1} v_hat^{-1} w0, the pair is accepted when the
    restriction map sends w_hat . Phi(sigma) bijectively onto Phi(v^{-1}).
    """
    n1, n2 = len(v[0]), len(v[1])
    m = len(w_hat)
    if len(v_hat) != m or n1 * n2 != m:
        raise ValueError("sizes of v, v_hat, w_hat are inconsistent")
    sigma = compose(compose(inverse(w_hat), inverse(v_hat)), longest_element(m))
    images = [
        restrict(act_hat(w_hat, root), n1, n2) for root in hat_inversion_set(sigma)
    ]
    if len(set(images)) != len(images):
        return False
    return set(images) == g_inversion_set(inv_pair(v), n1, n2)


def inv_pair(v: PermPair) -> PermPair:
    return (inverse(v[0]), inverse(v[1]))


def sum_negative_roots(n1: int, n2: int) -> GWeight:
    """Sum over all negative roots of both factors."""
    eps = tuple(2 * k - 1 - n1 for k in range(1, n1 + 1))
    eta = tuple(2 * k - 1 - n2 for k in range(1, n2 + 1))
    return GWeight(eps, eta)


def _sum_neg_stay_neg(s: Permutation) -> list[tuple[int, int]]:
    """Index pairs (hi, lo) of negative roots e_hi - e_lo lying in s.Phi^-."""
    m = len(s)
    return [
        (s[a - 1], s[b - 1])
        for b in range(1, m + 1)
        for a in range(b + 1, m + 1)
        if s[a - 1] > s[b - 1]
    ]


def wellcovering_root_identity(
    v: PermPair, v_hat: Permutation, w_hat: Permutation
) -> bool:
    """Root-sum identity satisfied by well-covering candidates:

    v^{-1}.(sum of Phi^- cap v Phi^-) + restrict(vhat^{-1}.(sum of
    Phi-hat^- cap vhat what Phi-hat^-)) equals the sum of all negative
    roots of the small group.
    """
    n1, n2 = len(v[0]), len(v[1])
    m = len(w_hat)
    s1, s2 = v
    acc = g_zero(n1, n2)
    for hi, lo in _sum_neg_stay_neg(s1):
        acc = acc + eps_root(hi, lo, n1, n2)
    for hi, lo in _sum_neg_stay_neg(s2):
        acc = acc + eta_root(hi, lo, n1, n2)
    acc = act_g(inv_pair(v), acc)

    vw = compose(v_hat, w_hat)
    hat_acc = HatWeight((0,) * m)
    for hi, lo in _sum_neg_stay_neg(vw):
        hat_acc = hat_acc + hat_root(hi, lo, m)
    hat_acc = act_hat(inverse(v_hat), hat_acc)

    total = acc + restrict(hat_acc, n1, n2)
    return total == sum_negative_roots(n1, n2)
