"""Detect rank configurations in an order matrix and build torus-fixed
pairs from them.

Each configuration contributes a pair (v, vhat) written through its inverse:
vhat^{-1} = what . sigma . w0, where sigma is a product of one or two simple
transpositions determined by the ranks involved, and v is a product of one
or two simple transpositions of rows/columns (three-cycles for the
triple-rank configurations).  Normalising moves the fixed point so its first
component is the base flag; the normalised word is u = phi(v) . vhat^{-1}
with phi the cell-action embedding.  The composition order is frozen by a
calibration test on a worked 2x2 example.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .ordermatrix import OrderMatrix
from .permutations import (
    Permutation,
    compose,
    coxeter_length,
    cycle,
    cycles_string,
    grid_embedding,
    identity,
    inverse,
    longest_element,
    transposition,
)
from .roots import PermPair, dominance_check, wellcovering_root_identity

ADD = "ADD"
HORIZONTAL = "H"
VERTICAL = "V"

STATUS_THEOREM = "well-covering-by-theorem"
STATUS_DOMINANT = "dominant"
STATUS_CERTIFIED = "well-covering-certified"
STATUS_NOT_WELLCOVERING = "not-well-covering"

_TAG_ORDER = {
    "ADD": 0, "H": 1, "V": 1, "A": 2, "B": 3, "Bt": 4,
    "C": 5, "D": 6, "E1": 7, "E2": 7, "Et1": 8, "Et2": 8,
}


@dataclass(frozen=True)
class ConfigKind:
    """A matched configuration: tag plus the ranks/cells anchoring it.

    ``k``/``i``/``j`` anchor the (first) rank pattern; ``k2``/``i2``/``j2``
    the second one for the two-pattern tags A, B, Bt.
    """

    tag: str
    k: int = 0
    i: int = 0
    j: int = 0
    k2: int | None = None
    i2: int | None = None
    j2: int | None = None

    def sort_key(self) -> tuple:
        variant = 1 if self.tag.endswith("2") else 0
        return (_TAG_ORDER[self.tag], self.k, self.k2 or 0, variant, self.tag)

    def anchor_json(self) -> dict:
        out = {"k": self.k, "i": self.i, "j": self.j}
        if self.k2 is not None:
            out.update({"k2": self.k2, "i2": self.i2, "j2": self.j2})
        return out


@dataclass
class PairDescriptor:
    source: OrderMatrix
    kind: ConfigKind
    v: PermPair
    v_hat: Permutation
    u_hat: Permutation
    status: str
    matrix_id: int | None = None
    certificate: tuple | None = field(default=None)

    @property
    def v_hat_inv(self) -> Permutation:
        return inverse(self.v_hat)

    def length(self) -> int:
        return coxeter_length(self.v[0]) + coxeter_length(self.v[1])

    def to_json(self) -> dict:
        return {
            "matrix_id": self.matrix_id,
            "kind": self.kind.tag,
            "anchor": self.kind.anchor_json(),
            "v": [list(self.v[0]), list(self.v[1])],
            "v_hat": list(self.v_hat),
            "u_hat": list(self.u_hat),
            "u_hat_cycles": cycles_string(self.u_hat),
            "status": self.status,
        }


def detect_configs(matrix: OrderMatrix) -> list[ConfigKind]:
    """All configurations present in the rank grid, in a fixed order:
    the additive one, then adjacent pairs by rank, then the two-rank and
    three-rank patterns grouped by tag."""
    r = matrix.ranks
    n1, n2 = matrix.n1, matrix.n2
    found: list[ConfigKind] = [ConfigKind(ADD)]

    horizontals, verticals = [], []
    for i in range(1, n1 + 1):
        for j in range(1, n2):
            if r[i - 1][j] == r[i - 1][j - 1] + 1:
                horizontals.append(ConfigKind(HORIZONTAL, k=r[i - 1][j - 1], i=i, j=j))
    for j in range(1, n2 + 1):
        for i in range(1, n1):
            if r[i][j - 1] == r[i - 1][j - 1] + 1:
                verticals.append(ConfigKind(VERTICAL, k=r[i - 1][j - 1], i=i, j=j))
    found.extend(horizontals)
    found.extend(verticals)

    for vert, horiz in itertools.product(verticals, horizontals):
        if abs(vert.k - horiz.k) >= 2:
            found.append(
                ConfigKind("A", k=vert.k, i=vert.i, j=vert.j,
                           k2=horiz.k, i2=horiz.i, j2=horiz.j)
            )
    for first, second in itertools.combinations(verticals, 2):
        if abs(first.k - second.k) >= 2 and abs(first.i - second.i) >= 2:
            found.append(
                ConfigKind("B", k=first.k, i=first.i, j=first.j,
                           k2=second.k, i2=second.i, j2=second.j)
            )
    for first, second in itertools.combinations(horizontals, 2):
        if abs(first.k - second.k) >= 2 and abs(first.j - second.j) >= 2:
            found.append(
                ConfigKind("Bt", k=first.k, i=first.i, j=first.j,
                           k2=second.k, i2=second.i, j2=second.j)
            )

    for i in range(1, n1):
        for j in range(1, n2):
            k = r[i - 1][j - 1]
            if {r[i][j - 1], r[i - 1][j]} == {k + 1, k + 2}:
                found.append(ConfigKind("C", k=k, i=i, j=j))
            corner = r[i][j]
            if {r[i - 1][j], r[i][j - 1]} == {corner - 2, corner - 1}:
                found.append(ConfigKind("D", k=corner - 2, i=i, j=j))

    for j in range(1, n2 + 1):
        for i in range(1, n1 - 1):
            k = r[i - 1][j - 1]
            if r[i][j - 1] == k + 1 and r[i + 1][j - 1] == k + 2:
                found.append(ConfigKind("E1", k=k, i=i, j=j))
                found.append(ConfigKind("E2", k=k, i=i, j=j))
    for i in range(1, n1 + 1):
        for j in range(1, n2 - 1):
            k = r[i - 1][j - 1]
            if r[i - 1][j] == k + 1 and r[i - 1][j + 1] == k + 2:
                found.append(ConfigKind("Et1", k=k, i=i, j=j))
                found.append(ConfigKind("Et2", k=k, i=i, j=j))

    return sorted(found, key=ConfigKind.sort_key)


def _v_inv_and_sigma(cfg: ConfigKind, n1: int, n2: int, m: int):
    """The inverse of v (as a pair) and the middle word sigma."""
    one1, one2 = identity(n1), identity(n2)
    t1 = lambda a: transposition(n1, a, a + 1)
    t2 = lambda a: transposition(n2, a, a + 1)
    k, i, j = cfg.k, cfg.i, cfg.j
    if cfg.tag == ADD:
        return (one1, one2), identity(m)
    if cfg.tag == HORIZONTAL:
        return (one1, t2(j)), transposition(m, k, k + 1)
    if cfg.tag == VERTICAL:
        return (t1(i), one2), transposition(m, k, k + 1)
    if cfg.tag == "A":
        sigma = compose(transposition(m, k, k + 1), transposition(m, cfg.k2, cfg.k2 + 1))
        return (t1(i), t2(cfg.j2)), sigma
    if cfg.tag == "B":
        sigma = compose(transposition(m, k, k + 1), transposition(m, cfg.k2, cfg.k2 + 1))
        return (compose(t1(i), t1(cfg.i2)), one2), sigma
    if cfg.tag == "Bt":
        sigma = compose(transposition(m, k, k + 1), transposition(m, cfg.k2, cfg.k2 + 1))
        return (one1, compose(t2(j), t2(cfg.j2))), sigma
    if cfg.tag == "C":
        return (t1(i), t2(j)), cycle(m, (k, k + 1, k + 2))
    if cfg.tag == "D":
        return (t1(i), t2(j)), cycle(m, (k, k + 2, k + 1))
    if cfg.tag == "E1":
        return (cycle(n1, (i, i + 1, i + 2)), one2), cycle(m, (k, k + 1, k + 2))
    if cfg.tag == "E2":
        return (cycle(n1, (i, i + 2, i + 1)), one2), cycle(m, (k, k + 2, k + 1))
    if cfg.tag == "Et1":
        return (one1, cycle(n2, (j, j + 1, j + 2))), cycle(m, (k, k + 1, k + 2))
    if cfg.tag == "Et2":
        return (one1, cycle(n2, (j, j + 2, j + 1))), cycle(m, (k, k + 2, k + 1))
    raise ValueError(f"unknown configuration tag {cfg.tag!r}")


def normalize(v: PermPair, v_hat_inv: Permutation) -> Permutation:
    """Word of the normalised fixed point: u = phi(v) . vhat^{-1}."""
    return compose(grid_embedding(*v), v_hat_inv)


def build_pair(matrix: OrderMatrix, cfg: ConfigKind,
               matrix_id: int | None = None) -> PairDescriptor:
    """Pair for a configuration emitted by :func:`detect_configs`; the
    dominance test must pass, anything else means the configuration did not
    come from this matrix."""
    m = matrix.n1 * matrix.n2
    w_hat = matrix.hat_w()
    v_inv, sigma = _v_inv_and_sigma(cfg, matrix.n1, matrix.n2, m)
    v = (inverse(v_inv[0]), inverse(v_inv[1]))
    v_hat_inv = compose(compose(w_hat, sigma), longest_element(m))
    if not dominance_check(v, inverse(v_hat_inv), w_hat):
        raise ValueError(f"configuration {cfg} does not match matrix {matrix.ranks}")
    status = STATUS_DOMINANT if _TAG_ORDER[cfg.tag] >= 2 else STATUS_THEOREM
    return PairDescriptor(
        source=matrix,
        kind=cfg,
        v=v,
        v_hat=inverse(v_hat_inv),
        u_hat=normalize(v, v_hat_inv),
        status=status,
        matrix_id=matrix_id,
    )


def pairs_for_matrix(matrix: OrderMatrix, matrix_id: int | None = None) -> list[PairDescriptor]:
    """All pairs of the matrix, duplicates by (v, vhat) collapsed."""
    seen: dict[tuple, PairDescriptor] = {}
    for cfg in detect_configs(matrix):
        pair = build_pair(matrix, cfg, matrix_id)
        key = (pair.v, pair.v_hat)
        if key not in seen:
            seen[key] = pair
    return list(seen.values())


def _length_le_2_pairs(n1: int, n2: int) -> dict[int, list[PermPair]]:
    by_len: dict[int, list[PermPair]] = {0: [], 1: [], 2: []}
    for p1 in itertools.permutations(range(1, n1 + 1)):
        l1 = coxeter_length(p1)
        if l1 > 2:
            continue
        for p2 in itertools.permutations(range(1, n2 + 1)):
            total = l1 + coxeter_length(p2)
            if total <= 2:
                by_len[total].append((p1, p2))
    return by_len


def _sigmas_up_to_length2(m: int) -> dict[int, list[Permutation]]:
    from .permutations import length_if_at_most

    out: dict[int, list[Permutation]] = {0: [], 1: [], 2: []}
    for sigma in itertools.permutations(range(1, m + 1)):
        ell = length_if_at_most(sigma, 2)
        if ell is not None:
            out[ell].append(sigma)
    return out


def generic_length2_sweep(matrix: OrderMatrix) -> list[tuple[PermPair, Permutation]]:
    """Brute-force pass over every v of length at most 2 against every
    middle word of the matching length, keeping the (v, vhat^{-1}) that
    pass the dominance test.  Validates that configuration detection is
    exhaustive."""
    m = matrix.n1 * matrix.n2
    w_hat = matrix.hat_w()
    w0 = longest_element(m)
    by_len = _length_le_2_pairs(matrix.n1, matrix.n2)
    sigmas_by_len = _sigmas_up_to_length2(m)
    accepted = []
    for ell in (0, 1, 2):
        for v in by_len[ell]:
            for sigma in sigmas_by_len[ell]:
                v_hat_inv = compose(compose(w_hat, sigma), w0)
                if dominance_check(v, inverse(v_hat_inv), w_hat):
                    accepted.append((v, v_hat_inv))
    return accepted


def check_pair_invariants(pair: PairDescriptor) -> None:
    """Dominance and the root-sum identity; raises on violation."""
    w_hat = pair.source.hat_w()
    if not dominance_check(pair.v, pair.v_hat, w_hat):
        raise AssertionError(f"pair {pair.kind} fails the dominance test")
    if not wellcovering_root_identity(pair.v, pair.v_hat, w_hat):
        raise AssertionError(f"pair {pair.kind} fails the root-sum identity")
