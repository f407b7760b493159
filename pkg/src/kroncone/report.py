"""Deterministic human-readable reports of a pipeline run.

Regenerating a report with the same parameters and version is byte
identical: everything is canonically sorted and timing never enters the
file (the CLI prints timing to stderr).
"""

from __future__ import annotations

from .faces import FaceDescriptor
from .ordermatrix import OrderMatrix
from .pairs import PairDescriptor, STATUS_CERTIFIED
from .permutations import cycles_string, is_identity
from .pipeline import RunResult


def _v_string(pair: PairDescriptor) -> str:
    s1, s2 = pair.v
    left = "id" if is_identity(s1) else cycles_string(s1)
    right = "id" if is_identity(s2) else cycles_string(s2)
    return f"({left}, {right})"


def _anchor_string(pair: PairDescriptor) -> str:
    kind = pair.kind
    if kind.tag == "ADD":
        return "-"
    out = f"k={kind.k}"
    if kind.k2 is not None:
        out += f", k'={kind.k2}"
    return out


def _matrix_block(matrix: OrderMatrix, mid: int, pairs: list[PairDescriptor]) -> list[str]:
    lines = [f"## Order matrix {mid}", ""]
    for row in matrix.ranks:
        lines.append("    " + " ".join(f"{r:2d}" for r in row))
    x, y = matrix.witness
    lines.append("")
    lines.append(
        f"witness: x=({', '.join(map(str, x))}), y=({', '.join(map(str, y))})"
    )
    lines.append(f"flag word: {cycles_string(matrix.hat_w())}")
    lines.append("")
    lines.append("| kind | anchor | v | u_hat | one-line | status |")
    lines.append("|------|--------|---|-------|----------|--------|")
    for pair in pairs:
        lines.append(
            f"| {pair.kind.tag} | {_anchor_string(pair)} | {_v_string(pair)} "
            f"| {cycles_string(pair.u_hat)} "
            f"| {','.join(map(str, pair.u_hat))} | {pair.status} |"
        )
    lines.append("")
    return lines


def _face_block(title: str, faces: list[FaceDescriptor]) -> list[str]:
    lines = [f"### {title}", ""]
    for face in faces:
        lines.append(f"- word {cycles_string(face.u_hat)} [{face.status}]")
        for eq in face.equations_display():
            lines.append(f"    {eq}")
        if face.certificate is not None:
            a, b, c = face.certificate
            lines.append(
                f"    certificate: alpha={list(a)} beta={list(b)} gamma={list(c)}"
            )
        if face.span_rank is not None:
            lines.append(f"    span rank (lower bound): {face.span_rank}")
    lines.append("")
    return lines


def render_report(result: RunResult) -> str:
    cfg = result.config
    lines = [
        f"# Kronecker cone faces: {cfg.n1}x{cfg.n2}",
        "",
        f"Parameters: n1={cfg.n1}, n2={cfg.n2}, nmax={cfg.nmax}, "
        f"depth={cfg.depth}, cert_nmax={cfg.cert_nmax}.",
        "",
    ]
    by_matrix: dict[int, list[PairDescriptor]] = {}
    for pair in result.pairs:
        by_matrix.setdefault(pair.matrix_id, []).append(pair)
    for mid, matrix in enumerate(result.matrices, start=1):
        lines.extend(_matrix_block(matrix, mid, by_matrix.get(mid, [])))

    counts = result.pair_counts()
    fcounts = result.face_counts()
    lines.extend(
        [
            "## Summary",
            "",
            f"- order matrices: {len(result.matrices)}",
            f"- additive pairs: {counts['additive']}",
            f"- adjacent-pair (length-1) well-covering pairs: {counts['length1']}",
            f"- two-reflection (length-2) dominant pairs: {counts['length2']}",
            f"- distinct regular faces: {fcounts['regular']} "
            f"({fcounts['regular_additive']} additive + {fcounts['regular_new']} new)",
            f"- certified among the dominant pairs: {fcounts['regular_certified']}",
            f"- distinct non-regular faces: {fcounts['nonregular']}",
            "",
        ]
    )
    if result.dedup.review_flags:
        lines.append("Review flags:")
        for flag in result.dedup.review_flags:
            lines.append(f"- {flag}")
        lines.append("")

    regular = sorted(result.dedup.regular, key=lambda f: f.u_hat)
    certified = [f for f in regular if f.status == STATUS_CERTIFIED]
    lines.extend(_face_block("Regular faces", regular))
    if certified:
        lines.extend(
            _face_block("Certified formerly-dominant faces (details)", certified)
        )
    lines.append("### Non-regular faces")
    lines.append("")
    for idx, face in enumerate(
        sorted(result.dedup.nonregular, key=lambda f: f.u_hat), start=1
    ):
        lines.append(
            f"- face {idx}: {len(face.provenance)} pairs "
            f"({', '.join(sorted(cycles_string(p.u_hat) for p in face.provenance))})"
        )
        for eq in face.span_display():
            lines.append(f"    {eq}")
        lines.append(f"    span rank (lower bound): {face.span_rank}")
        lines.append(
            f"    verified points: {len(face.verified_points)}, "
            f"undetermined: {len(face.undetermined_points)}"
        )
    lines.append("")
    if result.stability:
        lines.append("### Stability verification")
        lines.append("")
        for rep in result.stability:
            counts_str = ", ".join(
                f"{k}: {v}" for k, v in sorted(rep.counts.items())
            ) or "no verified points"
            lines.append(
                f"- {cycles_string(rep.face_u_hat)}: {rep.verdict} ({counts_str})"
            )
        lines.append("")
    return "\n".join(lines) + "\n"


def render_matrices_table(matrices: list[OrderMatrix]) -> str:
    lines = []
    for mid, matrix in enumerate(matrices, start=1):
        x, y = matrix.witness
        lines.append(
            f"matrix {mid}: ranks {matrix.ranks} "
            f"witness x=({', '.join(map(str, x))}) y=({', '.join(map(str, y))})"
        )
    return "\n".join(lines) + "\n"
