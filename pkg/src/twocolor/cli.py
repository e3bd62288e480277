"""Command-line interface.

Every subcommand emits one envelope: command, parameters, status, elapsed
milliseconds, and a list of result records.  --format json prints the
envelope itself; the default table format prints the same content for
humans.  Exit status: 0 all checks passed, 1 at least one check failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import congruence, identities
from .partitions import two_color_table

IDENTITY_NAMES = ("beauty", "jacobi", "phi-product", "phi-5dissect", "phi-f", "frobenius")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twocolor",
        description="Verify modulo-5 congruences for two-color partition counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("table", "json"), default="table",
                       help="output format (default table)")

    p = sub.add_parser("verify", help="scan p_k(25n+24-k) mod m up to a bound")
    p.add_argument("--k", type=int, required=True, help="colored part size, 1..24")
    p.add_argument("--bound", type=int, default=100, help="last n to test (default 100)")
    p.add_argument("--modulus", type=int, default=5, help="modulus (default 5)")
    add_format(p)

    p = sub.add_parser("characterize", help="scan all k in 1..24 at modulus 5")
    p.add_argument("--bound", type=int, default=100, help="last n to test (default 100)")
    p.add_argument("--parallel", choices=("on", "off"), default="off",
                   help="scan the 24 families in worker processes")
    add_format(p)

    p = sub.add_parser("identity", help="check one named series identity")
    p.add_argument("--name", choices=IDENTITY_NAMES, required=True)
    p.add_argument("--order", type=int, default=300, help="truncation order (default 300)")
    p.add_argument("--k", type=int, default=1,
                   help="frobenius only: Pochhammer step (default 1)")
    p.add_argument("--modulus", type=int, default=5,
                   help="frobenius only: prime modulus (default 5)")
    add_format(p)

    p = sub.add_parser("replay-k4", help="replay the k=4 derivation step by step")
    p.add_argument("--order", type=int, default=300, help="truncation order (default 300)")
    add_format(p)

    p = sub.add_parser("strong-5ell", help="scan p_{5l}(5m+4) mod 5 up to a bound")
    p.add_argument("--ell", type=int, required=True, help="multiplier l in 1..4")
    p.add_argument("--bound", type=int, default=100, help="last m to test (default 100)")
    add_format(p)

    p = sub.add_parser("chan-toh", help="scan p_2(5^a n + delta) mod 5^(a//2)")
    p.add_argument("--alpha", type=int, required=True, help="power a >= 2")
    p.add_argument("--bound", type=int, default=100, help="last n to test (default 100)")
    add_format(p)

    p = sub.add_parser("residues", help="triangular-number residue analysis mod m")
    p.add_argument("--modulus", type=int, default=5, help="modulus (default 5)")
    p.add_argument("--target", type=int, default=4, help="target residue (default 4)")
    add_format(p)

    p = sub.add_parser("oracle", help="print one exact count p_k(n) and its residue")
    p.add_argument("--k", type=int, required=True, help="colored part size, k >= 1")
    p.add_argument("--n", type=int, required=True, help="index n >= 0")
    p.add_argument("--modulus", type=int, default=5, help="modulus (default 5)")
    add_format(p)

    return parser


def _report_line(report: congruence.CongruenceReport) -> str:
    a, b = report.progression
    head = "k=%-2d  p_%d(%dn+%d) mod %d" % (report.k, report.k, a, b, report.modulus)
    if report.holds:
        return "%s: holds for n <= %d" % (head, report.bound)
    cx = report.counterexample
    return "%s: fails at n=%d (index %d, value %d, residue %d)" % (
        head, cx.n, cx.index, cx.value, cx.residue)


def _step_line(step: identities.ProofStepResult) -> str:
    mark = "ok" if step.passed else "FAIL"
    line = "[%s] %-12s (order %d)  %s" % (mark, step.step_id, step.order, step.description)
    if not step.passed and step.first_mismatch is not None:
        line += "  first mismatch at q^%d" % step.first_mismatch
    return line


def _run_verify(args, parser):
    params = {"k": args.k, "bound": args.bound, "modulus": args.modulus}
    try:
        report = congruence.verify_family(args.k, args.bound, args.modulus)
    except ValueError as exc:
        parser.error(str(exc))
    return params, [report.to_payload()], not report.holds, _report_line(report)


def _run_characterize(args, parser):
    params = {"bound": args.bound, "parallel": args.parallel}
    if args.bound < 0:
        parser.error("bound must be non-negative, got %d" % args.bound)
    if args.parallel == "on":
        with ProcessPoolExecutor() as pool:
            reports = list(pool.map(_characterize_one,
                                    [(k, args.bound) for k in range(1, 25)]))
    else:
        reports = congruence.characterize_all(args.bound)
    failed = any(not r.holds for r in reports)
    table = "\n".join(_report_line(r) for r in reports)
    return params, [r.to_payload() for r in reports], failed, table


def _characterize_one(job):
    k, bound = job
    return congruence.verify_family(k, bound)


def _run_identity(args, parser):
    if args.name == "frobenius":
        params = {"name": args.name, "k": args.k, "modulus": args.modulus,
                  "order": args.order}
        try:
            step = identities.check_frobenius_congruence(args.k, args.modulus, args.order)
        except ValueError as exc:
            parser.error(str(exc))
    else:
        params = {"name": args.name, "order": args.order}
        checks = {
            "beauty": identities.check_beauty_identity,
            "jacobi": identities.check_jacobi,
            "phi-product": identities.check_phi_product,
            "phi-5dissect": identities.check_phi_5dissection,
            "phi-f": identities.check_phi_f_identity,
        }
        try:
            step = checks[args.name](args.order)
        except ValueError as exc:
            parser.error(str(exc))
    return params, [step.to_payload()], not step.passed, _step_line(step)


def _run_replay(args, parser):
    params = {"order": args.order}
    try:
        steps = identities.replay_k4_proof(args.order)
    except ValueError as exc:
        parser.error(str(exc))
    failed = any(not s.passed for s in steps)
    table = "\n".join(_step_line(s) for s in steps)
    return params, [s.to_payload() for s in steps], failed, table


def _run_strong(args, parser):
    params = {"ell": args.ell, "bound": args.bound}
    try:
        report = congruence.verify_strong_5ell(args.ell, args.bound)
    except ValueError as exc:
        parser.error(str(exc))
    return params, [report.to_payload()], not report.holds, _report_line(report)


def _run_chan_toh(args, parser):
    params = {"alpha": args.alpha, "bound": args.bound}
    try:
        report = congruence.verify_chan_toh(args.alpha, args.bound)
    except ValueError as exc:
        parser.error(str(exc))
    return params, [report.to_payload()], not report.holds, _report_line(report)


def _run_residues(args, parser):
    params = {"modulus": args.modulus, "target": args.target}
    try:
        analysis = congruence.residue_analysis(args.modulus, args.target)
    except ValueError as exc:
        parser.error(str(exc))
    payload = analysis.to_payload()
    lines = [
        "triangular residues mod %d:        {%s}" % (
            analysis.modulus, ", ".join(map(str, sorted(analysis.triangular_residues)))),
        "double triangular residues mod %d: {%s}" % (
            analysis.modulus, ", ".join(map(str, sorted(analysis.double_triangular_residues)))),
        "witness classes hitting %d:" % analysis.target,
    ]
    for (r, s), c in zip(analysis.witness_classes, analysis.coefficient_residues):
        lines.append("  (r=%d, s=%d)  coefficient residue %d" % (r, s, c))
    if not analysis.witness_classes:
        lines.append("  (none)")
    return params, [payload], False, "\n".join(lines)


def _run_oracle(args, parser):
    params = {"k": args.k, "n": args.n, "modulus": args.modulus}
    if args.k < 1:
        parser.error("k must be positive, got %d" % args.k)
    if args.n < 0:
        parser.error("n must be non-negative, got %d" % args.n)
    if args.modulus < 2:
        parser.error("modulus must be at least 2, got %d" % args.modulus)
    value = two_color_table(args.k, args.n).values[args.n]
    residue = value % args.modulus
    payload = {"k": args.k, "n": args.n, "value": str(value), "residue": residue}
    table = "p_%d(%d) = %d\n%d = %d (mod %d)" % (
        args.k, args.n, value, value, residue, args.modulus)
    return params, [payload], False, table


_HANDLERS = {
    "verify": _run_verify,
    "characterize": _run_characterize,
    "identity": _run_identity,
    "replay-k4": _run_replay,
    "strong-5ell": _run_strong,
    "chan-toh": _run_chan_toh,
    "residues": _run_residues,
    "oracle": _run_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    params, results, failed, table = _HANDLERS[args.command](args, parser)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    envelope = {
        "command": args.command,
        "parameters": params,
        "status": "failed" if failed else "ok",
        "elapsed_ms": elapsed_ms,
        "results": results,
    }
    if args.format == "json":
        print(json.dumps(envelope, indent=2))
    else:
        print(table)
        print("status: %s  (%d ms)" % (envelope["status"], elapsed_ms))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
