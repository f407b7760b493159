"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 acceptance mismatch, 3 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .acceptance import run_acceptance
from .characters import InternalConsistencyError
from .kronecker import kronecker
from .ordermatrix import enumerate_order_matrices, matrices_to_json
from .partitions import check_partition, scale
from .pipeline import RunConfig, run_pipeline
from .report import render_matrices_table, render_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_partition(text: str):
    try:
        return check_partition([int(tok) for tok in text.split(",") if tok != ""])
    except ValueError as exc:
        raise SystemExit(_usage_error(str(exc)))


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _threads(value: str) -> int:
    if value == "auto":
        return os.cpu_count() or 1
    return int(value)


def build_parser() -> _Parser:
    parser = _Parser(prog="kroncone", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enumerate", help="list the order matrices of a size")
    enum.add_argument("n1", type=int)
    enum.add_argument("n2", type=int)
    enum.add_argument("--json", metavar="PATH", help="write JSON ('-' for stdout)")
    enum.add_argument("--table", action="store_true", help="plain table (default)")
    enum.add_argument("--cap", type=int, default=16, help="largest allowed n1*n2")

    faces = sub.add_parser("faces", help="run the full face pipeline")
    faces.add_argument("n1", type=int)
    faces.add_argument("n2", type=int)
    faces.add_argument("--nmax", type=int, default=10,
                       help="weight bound for span points")
    faces.add_argument("--depth", type=int, default=3,
                       help="scaling depth for cone membership probes")
    faces.add_argument("--cert-nmax", type=int, default=13,
                       help="weight bound for the certificate search")
    faces.add_argument("--out", metavar="PATH", help="write the report here")
    faces.add_argument("--json", metavar="PATH", help="write machine output here")
    faces.add_argument("--threads", type=_threads, default=1, metavar="N|auto")
    faces.add_argument("--verify", action="store_true",
                       help="probe stability of every face")
    faces.add_argument("--cap", type=int, default=16)

    kron = sub.add_parser("kron", help="one exact Kronecker coefficient")
    kron.add_argument("alpha", help="comma-separated parts, e.g. 4,3,2")
    kron.add_argument("beta")
    kron.add_argument("gamma")
    kron.add_argument("--scale", type=int, default=1, metavar="D")

    check = sub.add_parser("check", help="run the acceptance suite for a size")
    check.add_argument("n1", type=int)
    check.add_argument("n2", type=int)
    check.add_argument("--seed", type=int, default=0,
                       help="seed for the randomized probes")
    return parser


def cmd_enumerate(args) -> int:
    if not 1 <= args.n1 * args.n2 <= args.cap:
        return _usage_error(f"n1*n2 must lie in 1..{args.cap}")
    matrices = enumerate_order_matrices(args.n1, args.n2)
    if args.json:
        payload = matrices_to_json(matrices)
        if args.json == "-":
            print(payload)
        else:
            with open(args.json, "w") as handle:
                handle.write(payload + "\n")
    else:
        sys.stdout.write(render_matrices_table(matrices))
    print(f"{len(matrices)} order matrices of size {args.n1}x{args.n2}",
          file=sys.stderr)
    return EXIT_OK


def cmd_faces(args) -> int:
    if not 1 <= args.n1 * args.n2 <= args.cap:
        return _usage_error(f"n1*n2 must lie in 1..{args.cap}")
    config = RunConfig(
        args.n1,
        args.n2,
        nmax=args.nmax,
        depth=args.depth,
        cert_nmax=args.cert_nmax,
        verify_stability=args.verify,
        threads=args.threads,
    )
    started = time.monotonic()
    result = run_pipeline(config)
    report = render_report(result)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(report)
    else:
        sys.stdout.write(report)
    if args.json:
        with open(args.json, "w") as handle:
            json.dump(result.to_json(), handle, indent=2)
            handle.write("\n")
    print(f"pipeline finished in {time.monotonic() - started:.1f}s",
          file=sys.stderr)
    return EXIT_OK


def cmd_kron(args) -> int:
    if args.scale < 1:
        return _usage_error("--scale must be positive")
    alpha = _parse_partition(args.alpha)
    beta = _parse_partition(args.beta)
    gamma = _parse_partition(args.gamma)
    print(kronecker(scale(alpha, args.scale), scale(beta, args.scale),
                    scale(gamma, args.scale)))
    return EXIT_OK


def cmd_check(args) -> int:
    if (args.n1, args.n2) not in [(2, 2), (3, 2), (3, 3)]:
        return _usage_error("check supports the sizes 2 2, 3 2, and 3 3")
    checks = run_acceptance([(args.n1, args.n2)], seed=args.seed)
    for check in checks:
        print(check.line())
    failed = [c for c in checks if not c.ok]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed",
          file=sys.stderr)
    return EXIT_MISMATCH if failed else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "enumerate": cmd_enumerate,
        "faces": cmd_faces,
        "kron": cmd_kron,
        "check": cmd_check,
    }
    try:
        return handlers[args.command](args)
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
