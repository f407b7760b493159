"""End-to-end runs: enumerate, detect, build, certify, span, dedup, verify.

Certificate searches run deeper than the span collection: the smallest
regular-pattern points on two of the 3x2 faces have weights 11 and 13, so
the default certificate bound is 13 (an exhaustive scan shows exactly the
eight expected faces certify there and none of the others ever can, their
systems forcing repeated parts).

Dominant-only faces are grouped by the span of their verified points, and a
face whose span sits inside another group's span is folded into that group:
it is a subface, and the face census counts maximal faces.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .faces import (
    DedupResult,
    FaceDescriptor,
    StabilityReport,
    collect_points,
    dedup_faces,
    face_equations,
    verify_face_stability,
    wellcovering_certificate,
)
from .linalg import rank, rref
from .ordermatrix import OrderMatrix, enumerate_order_matrices
from .pairs import (
    PairDescriptor,
    STATUS_CERTIFIED,
    STATUS_DOMINANT,
    STATUS_THEOREM,
    check_pair_invariants,
    pairs_for_matrix,
)


@dataclass
class RunConfig:
    n1: int
    n2: int
    nmax: int = 10
    depth: int = 3
    cert_nmax: int = 13
    regular_span_nmax: int = 6
    regular_span_depth: int = 2
    compute_regular_spans: bool = True
    verify_stability: bool = False
    stability_nmax: int = 8
    stability_depth: int = 3
    threads: int = 1


@dataclass
class RunResult:
    config: RunConfig
    matrices: list[OrderMatrix]
    pairs: list[PairDescriptor]
    faces: list[FaceDescriptor]
    dedup: DedupResult
    stability: list[StabilityReport] = field(default_factory=list)

    def pair_counts(self) -> dict[str, int]:
        by_len = {0: 0, 1: 0, 2: 0}
        for pair in self.pairs:
            by_len[pair.length()] += 1
        return {"additive": by_len[0], "length1": by_len[1], "length2": by_len[2]}

    def face_counts(self) -> dict[str, int]:
        additive = sum(
            1 for f in self.dedup.regular
            if any(p.kind.tag == "ADD" for p in f.provenance)
        )
        certified = sum(1 for f in self.dedup.regular if f.status == STATUS_CERTIFIED)
        return {
            "regular": len(self.dedup.regular),
            "regular_additive": additive,
            "regular_new": len(self.dedup.regular) - additive,
            "regular_certified": certified,
            "nonregular": len(self.dedup.nonregular),
        }

    def to_json(self) -> dict:
        return {
            "parameters": {
                "n1": self.config.n1,
                "n2": self.config.n2,
                "nmax": self.config.nmax,
                "depth": self.config.depth,
                "cert_nmax": self.config.cert_nmax,
            },
            "matrices": [m.to_json() for m in self.matrices],
            "pairs": [p.to_json() for p in self.pairs],
            "faces": [f.to_json() for f in self.dedup.regular + self.dedup.nonregular],
            "summary": {
                "matrices": len(self.matrices),
                **self.pair_counts(),
                **self.face_counts(),
                "review_flags": self.dedup.review_flags,
            },
        }


def _absorb_subfaces(dedup: DedupResult) -> None:
    """Fold a dominant-only face whose span lies inside another dominant
    face's span into that face; the census counts maximal faces."""
    groups = sorted(
        dedup.nonregular, key=lambda f: (-(f.span_rank or 0), f.u_hat)
    )
    kept: list[FaceDescriptor] = []
    for face in groups:
        parent = None
        face_basis = [row for row in rref(
            [_point_vec(face, p) for p, _, _ in face.verified_points]
        )[0]]
        for candidate in kept:
            cand_points = [_point_vec(candidate, p) for p, _, _ in candidate.verified_points]
            if rank(cand_points + face_basis) == candidate.span_rank:
                parent = candidate
                break
        if parent is None:
            kept.append(face)
        else:
            parent.provenance.extend(face.provenance)
            parent.verified_points.extend(face.verified_points)
            parent.undetermined_points.extend(face.undetermined_points)
    dedup.nonregular = kept


def _point_vec(face: FaceDescriptor, triple):
    from .faces import triple_vector

    return triple_vector(triple, face.n1, face.n2)


def run_pipeline(config: RunConfig) -> RunResult:
    matrices = enumerate_order_matrices(config.n1, config.n2)
    all_pairs: list[PairDescriptor] = []
    for mid, matrix in enumerate(matrices, start=1):
        pairs = pairs_for_matrix(matrix, mid)
        for pair in pairs:
            check_pair_invariants(pair)
        all_pairs.extend(pairs)

    faces = [face_equations(pair) for pair in all_pairs]

    def prepare(face: FaceDescriptor) -> None:
        if face.status == STATUS_DOMINANT and config.cert_nmax > 0:
            wellcovering_certificate(face, config.cert_nmax)
        if face.status == STATUS_DOMINANT:
            if config.nmax > 0:
                collect_points(face, config.nmax, config.depth)
        elif config.compute_regular_spans:
            collect_points(face, config.regular_span_nmax, config.regular_span_depth)

    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            list(pool.map(prepare, faces))
    else:
        for face in faces:
            prepare(face)

    if config.nmax > 0:
        dedup = dedup_faces(faces)
        _absorb_subfaces(dedup)
    else:
        # Without point collection there is no span to group dominant faces
        # by; list them individually.
        regular = dedup_faces([f for f in faces if f.status != STATUS_DOMINANT])
        dedup = DedupResult(
            regular.regular,
            [f for f in faces if f.status == STATUS_DOMINANT],
            regular.review_flags,
        )
    dedup.regular.sort(key=lambda f: f.u_hat)
    dedup.nonregular.sort(key=lambda f: f.u_hat)

    result = RunResult(config, matrices, all_pairs, faces, dedup)
    if config.verify_stability:
        for face in dedup.regular + dedup.nonregular:
            result.stability.append(
                verify_face_stability(face, config.stability_nmax, config.stability_depth)
            )
    return result


def run_json(config: RunConfig) -> str:
    return json.dumps(run_pipeline(config).to_json(), indent=2)
