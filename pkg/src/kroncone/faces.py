"""Linear equations of a face, lattice triples on it, and its verdicts.

The torus-weight system of a normalised pair assigns the k-th coordinate of
gamma to the grid cell u(m+1-k); each alpha_i equals the sum of the gamma
parts assigned to row i, each beta_j the sum over column j.  This index
convention is the unique one among the small set of candidates (word vs
inverse, direct vs reversed rows/columns) that reproduces all of the frozen
reference systems; the calibration test pins it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .kronecker import first_nonzero_scale, stability_probe, ProbeResult
from .linalg import Matrix, clear_denominators, nullspace, rank, rref
from .characters import InternalConsistencyError
from .partitions import (
    Partition,
    is_regular,
    pad,
    partitions_of,
    unlex_index,
    weight,
)
from .pairs import (
    PairDescriptor,
    STATUS_CERTIFIED,
    STATUS_DOMINANT,
    STATUS_THEOREM,
)
from .permutations import Permutation, apply, cycles_string

Triple = tuple[Partition, Partition, Partition]


def gamma_cells(u_hat: Permutation, n1: int, n2: int) -> tuple[tuple[int, int], ...]:
    """Cell (row, col) carrying gamma_k, for k = 1..m."""
    m = n1 * n2
    return tuple(unlex_index(apply(u_hat, m + 1 - k), n1, n2) for k in range(1, m + 1))


def _groups(u_hat: Permutation, n1: int, n2: int):
    cells = gamma_cells(u_hat, n1, n2)
    alpha = tuple(
        tuple(sorted(k + 1 for k, (i, _) in enumerate(cells) if i == row))
        for row in range(1, n1 + 1)
    )
    beta = tuple(
        tuple(sorted(k + 1 for k, (_, j) in enumerate(cells) if j == col))
        for col in range(1, n2 + 1)
    )
    return alpha, beta


@dataclass
class FaceDescriptor:
    """A face presented by its defining pair(s).

    ``alpha_groups[i-1]`` lists the gamma indices summing to alpha_i, and
    likewise for beta; merged faces keep every contributing pair in
    ``provenance`` (their systems differ, the faces agree).
    """

    n1: int
    n2: int
    u_hat: Permutation
    status: str
    provenance: list[PairDescriptor]
    alpha_groups: tuple[tuple[int, ...], ...]
    beta_groups: tuple[tuple[int, ...], ...]
    certificate: Triple | None = None
    span_rank: int | None = None
    span_equations: Matrix | None = None
    verified_points: list[tuple[Triple, int, int]] = field(default_factory=list)
    undetermined_points: list[Triple] = field(default_factory=list)

    @property
    def m(self) -> int:
        return self.n1 * self.n2

    def nvars(self) -> int:
        return self.n1 + self.n2 + self.m

    def equation_rows(self) -> Matrix:
        """mu = 0 system: one row per alpha_i and beta_j over the variables
        (alpha, beta, gamma)."""
        rows = []
        for i, group in enumerate(self.alpha_groups):
            row = [0] * self.nvars()
            row[i] = 1
            for k in group:
                row[self.n1 + self.n2 + k - 1] -= 1
            rows.append(tuple(row))
        for j, group in enumerate(self.beta_groups):
            row = [0] * self.nvars()
            row[self.n1 + j] = 1
            for k in group:
                row[self.n1 + self.n2 + k - 1] -= 1
            rows.append(tuple(row))
        return tuple(tuple(Fraction(x) for x in row) for row in rows)

    def equations_display(self) -> list[str]:
        out = []
        for i, group in enumerate(self.alpha_groups, start=1):
            out.append(f"alpha_{i} = " + " + ".join(f"gamma_{k}" for k in group))
        for j, group in enumerate(self.beta_groups, start=1):
            out.append(f"beta_{j} = " + " + ".join(f"gamma_{k}" for k in group))
        return out

    def span_display(self) -> list[str]:
        if self.span_equations is None:
            return []
        return [render_equation(row, self.n1, self.n2) for row in self.span_equations]

    def to_json(self) -> dict:
        return {
            "u_hat": list(self.u_hat),
            "u_hat_cycles": cycles_string(self.u_hat),
            "status": self.status,
            "equations": [
                {"lhs": f"alpha_{i}", "rhs": [f"gamma_{k}" for k in group]}
                for i, group in enumerate(self.alpha_groups, start=1)
            ]
            + [
                {"lhs": f"beta_{j}", "rhs": [f"gamma_{k}" for k in group]}
                for j, group in enumerate(self.beta_groups, start=1)
            ],
            "equations_display": self.equations_display(),
            "span_equations": self.span_display() or None,
            "dimension_estimate": self.span_rank,
            "certificate": None
            if self.certificate is None
            else {
                "alpha": list(self.certificate[0]),
                "beta": list(self.certificate[1]),
                "gamma": list(self.certificate[2]),
            },
            "provenance": [
                {"matrix_id": p.matrix_id, "kind": p.kind.tag, "anchor": p.kind.anchor_json()}
                for p in self.provenance
            ],
        }


def face_equations(pair: PairDescriptor) -> FaceDescriptor:
    alpha_groups, beta_groups = _groups(pair.u_hat, pair.source.n1, pair.source.n2)
    return FaceDescriptor(
        n1=pair.source.n1,
        n2=pair.source.n2,
        u_hat=pair.u_hat,
        status=pair.status,
        provenance=[pair],
        alpha_groups=alpha_groups,
        beta_groups=beta_groups,
    )


def mu_value(triple: Triple, pair: PairDescriptor, sigma: tuple) -> int:
    """Pairing of the fixed-point weight of the triple's line bundle against
    the cocharacter sigma = (sigma_x, sigma_y); identically zero over a
    spanning set of sigma exactly on the mu = 0 subspace."""
    n1, n2 = pair.source.n1, pair.source.n2
    sx, sy = sigma
    if len(sx) != n1 or len(sy) != n2:
        raise ValueError("cocharacter arities do not match the pair")
    alpha, beta, gamma = triple
    a = pad(alpha, n1)
    b = pad(beta, n2)
    c = pad(gamma, n1 * n2)
    total = 0
    for k, (i, j) in enumerate(gamma_cells(pair.u_hat, n1, n2), start=1):
        total += c[k - 1] * (sx[i - 1] + sy[j - 1])
    total -= sum(a[i] * sx[i] for i in range(n1))
    total -= sum(b[j] * sy[j] for j in range(n2))
    return total


def triple_vector(triple: Triple, n1: int, n2: int) -> tuple[int, ...]:
    alpha, beta, gamma = triple
    return pad(alpha, n1) + pad(beta, n2) + pad(gamma, n1 * n2)


def _triples_for_groups(alpha_groups, beta_groups, n1, n2, n) -> list[Triple]:
    m = n1 * n2
    out = []
    for gamma in partitions_of(n, m):
        g = pad(gamma, m)
        alpha = tuple(sum(g[k - 1] for k in group) for group in alpha_groups)
        if any(alpha[i] < alpha[i + 1] for i in range(n1 - 1)):
            continue
        beta = tuple(sum(g[k - 1] for k in group) for group in beta_groups)
        if any(beta[j] < beta[j + 1] for j in range(n2 - 1)):
            continue
        out.append((alpha, pad(beta, n2), g))
    return out


def enumerate_face_triples(face: FaceDescriptor, n: int) -> list[Triple]:
    """All lattice triples of weight ``n`` on the mu = 0 system; for merged
    faces the union over the contributing systems (they cut out the same
    face of the cone)."""
    if n < 0:
        raise ValueError("weight must be non-negative")
    seen: set[Triple] = set()
    for pair in face.provenance:
        groups = _groups(pair.u_hat, face.n1, face.n2)
        for triple in _triples_for_groups(*groups, face.n1, face.n2, n):
            seen.add(triple)
    return sorted(seen, reverse=True)


def collect_points(face: FaceDescriptor, n_max: int, depth: int) -> None:
    """Probe every enumerated triple of weight 1..n_max; verified ones feed
    the span, the rest stay counted as undetermined."""
    verified, undetermined = [], []
    for n in range(1, n_max + 1):
        for triple in enumerate_face_triples(face, n):
            hit = first_nonzero_scale(*triple, depth)
            if hit is None:
                undetermined.append(triple)
            else:
                verified.append((triple, hit[0], hit[1]))
    face.verified_points = verified
    face.undetermined_points = undetermined
    face_span_from_points(face)


def face_span_from_points(face: FaceDescriptor) -> None:
    points = [triple_vector(t, face.n1, face.n2) for t, _, _ in face.verified_points]
    face.span_rank = rank(points)
    face.span_equations = nullspace(points, face.n1 + face.n2 + face.m)


def wellcovering_certificate(face: FaceDescriptor, n_max: int) -> Triple | None:
    """First enumerated triple with non-vanishing coefficient whose alpha
    and beta are regular, or whose gamma is regular; upgrades the face."""
    from .kronecker import kronecker

    for n in range(1, n_max + 1):
        for triple in enumerate_face_triples(face, n):
            alpha, beta, gamma = triple
            ab_regular = is_regular(alpha, face.n1) and is_regular(beta, face.n2)
            if not ab_regular and not is_regular(gamma, face.m):
                continue
            if kronecker(alpha, beta, gamma) != 0:
                face.certificate = triple
                if face.status == STATUS_DOMINANT:
                    face.status = STATUS_CERTIFIED
                    for pair in face.provenance:
                        pair.status = STATUS_CERTIFIED
                return triple
    return None


@dataclass
class StabilityReport:
    face_u_hat: Permutation
    probed: list[tuple[Triple, ProbeResult]]
    undetermined: list[Triple]
    verdict: str

    @property
    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for _, probe in self.probed:
            out[probe.verdict] = out.get(probe.verdict, 0) + 1
        return out


def verify_face_stability(face: FaceDescriptor, n_max: int, depth: int) -> StabilityReport:
    """Probe every cone-verified triple on the face to the stated depth.

    Well-covering faces must show only stable evidence, dominant-only ones
    at worst almost-stable evidence; any coefficient >= 2 on the face is an
    internal inconsistency, not a data point.
    """
    probed: list[tuple[Triple, ProbeResult]] = []
    undetermined: list[Triple] = []
    for n in range(1, n_max + 1):
        for triple in enumerate_face_triples(face, n):
            if first_nonzero_scale(*triple, depth) is None:
                undetermined.append(triple)
                continue
            result = stability_probe(*triple, depth)
            if result.verdict == "refuted":
                raise InternalConsistencyError(
                    f"coefficient >= 2 on face {cycles_string(face.u_hat)}: "
                    f"{triple} -> {result.values}"
                )
            probed.append((triple, result))
    if not probed:
        verdict = "possibly reduced to zero"
    elif all(p.verdict == "stable-evidence" for _, p in probed):
        verdict = "all-stable"
    else:
        verdict = "all-almost-stable"
    if face.status in (STATUS_THEOREM, STATUS_CERTIFIED) and probed and verdict != "all-stable":
        raise InternalConsistencyError(
            f"well-covering face {cycles_string(face.u_hat)} shows a non-stable triple"
        )
    return StabilityReport(face.u_hat, probed, undetermined, verdict)


@dataclass
class DedupResult:
    regular: list[FaceDescriptor]
    nonregular: list[FaceDescriptor]
    review_flags: list[str]


def dedup_faces(faces: list[FaceDescriptor]) -> DedupResult:
    """Well-covering faces are distinct exactly when their normalised words
    differ; dominant-only faces are grouped by the span of their verified
    points (their mu systems differ even when the faces coincide)."""
    regular: dict[Permutation, FaceDescriptor] = {}
    nonregular: dict[Matrix, FaceDescriptor] = {}
    flags: list[str] = []
    for face in faces:
        if face.status in (STATUS_THEOREM, STATUS_CERTIFIED):
            if face.u_hat in regular:
                regular[face.u_hat].provenance.extend(face.provenance)
            else:
                regular[face.u_hat] = face
        else:
            if face.span_equations is None:
                face_span_from_points(face)
            key = face.span_equations
            if key in nonregular:
                merged = nonregular[key]
                merged.provenance.extend(face.provenance)
                merged.verified_points.extend(
                    p for p in face.verified_points if p not in merged.verified_points
                )
                merged.undetermined_points.extend(
                    p for p in face.undetermined_points
                    if p not in merged.undetermined_points
                )
            else:
                nonregular[key] = face
    # Point spans are lower bounds, so only saturated ones (full rank for a
    # minimal regular face) can witness that two words cut the same face.
    spans_seen: dict[Matrix, Permutation] = {}
    for u_hat, face in regular.items():
        if face.span_equations is None or face.span_rank != face.m:
            continue
        other = spans_seen.get(face.span_equations)
        if other is not None:
            flags.append(
                "span collision between distinct well-covering words "
                f"{cycles_string(other)} and {cycles_string(u_hat)}"
            )
        else:
            spans_seen[face.span_equations] = u_hat
    return DedupResult(list(regular.values()), list(nonregular.values()), flags)


def render_equation(row, n1: int, n2: int) -> str:
    """One homogeneous relation as ``lhs = rhs`` with integer coefficients,
    e.g. ``alpha_1 = gamma_1 + gamma_4``."""
    names = (
        [f"alpha_{i}" for i in range(1, n1 + 1)]
        + [f"beta_{j}" for j in range(1, n2 + 1)]
        + [f"gamma_{k}" for k in range(1, n1 * n2 + 1)]
    )
    ints = clear_denominators(tuple(Fraction(x) for x in row))
    lead = next((idx for idx, c in enumerate(ints) if c != 0), None)
    if lead is None:
        return "0 = 0"
    lhs = _term(ints[lead], names[lead])
    rhs_terms = []
    for idx in range(lead + 1, len(ints)):
        if ints[idx] != 0:
            rhs_terms.append(_term(-ints[idx], names[idx]))
    if not rhs_terms:
        return f"{lhs} = 0"
    rhs = rhs_terms[0]
    for term in rhs_terms[1:]:
        rhs += (" - " + term[1:]) if term.startswith("-") else (" + " + term)
    return f"{lhs} = {rhs}"


def _term(coeff: int, name: str) -> str:
    if coeff == 1:
        return name
    if coeff == -1:
        return f"-{name}"
    return f"{coeff}*{name}"


def parse_equation(text: str, n1: int, n2: int) -> tuple[int, ...]:
    """Inverse of :func:`render_equation`: coefficient row of ``lhs = rhs``
    over the variables (alpha | beta | gamma)."""
    m = n1 * n2
    offsets = {"alpha": 0, "beta": n1, "gamma": n1 + n2}
    sizes = {"alpha": n1, "beta": n2, "gamma": m}
    row = [0] * (n1 + n2 + m)

    def add_side(side: str, sign: int) -> None:
        tokens = side.replace(" - ", " + -").split(" + ")
        for token in tokens:
            token = token.strip()
            coeff = 1
            if token.startswith("-"):
                coeff, token = -1, token[1:]
            if "*" in token:
                factor, token = token.split("*")
                coeff *= int(factor)
            name, idx = token.rsplit("_", 1)
            pos = int(idx)
            if name not in offsets or not 1 <= pos <= sizes[name]:
                raise ValueError(f"unknown variable {token!r}")
            row[offsets[name] + pos - 1] += sign * coeff

    lhs, rhs = text.split("=")
    add_side(lhs, 1)
    add_side(rhs, -1)
    return tuple(row)


def weight_equality_rows(n1: int, n2: int) -> list[tuple[int, ...]]:
    """|alpha| = |gamma| and |beta| = |gamma| as coefficient rows."""
    m = n1 * n2
    row_a = [1] * n1 + [0] * n2 + [-1] * m
    row_b = [0] * n1 + [1] * n2 + [-1] * m
    return [tuple(row_a), tuple(row_b)]
