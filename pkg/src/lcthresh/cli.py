"""Command-line front end: ``lct eval|search|verdict|graph|corpus``.

Exit codes: 0 success, 1 computation-level failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import corpus as corpus_mod
from .boundary import build_record
from .dualgraph import (
    DualGraph,
    NotNegativeDefinite,
    discrepancy_system,
    elliptic_invariants,
    fundamental_cycle,
    klt_verdict,
)
from .k3cover import NonStandardThreshold, k3_cover
from .polynomial import ParseError, parse
from .threshold import (
    DEFAULT_SEARCH_BOUND,
    NormalizationRequired,
    exceptionality_verdict,
    format_rational,
    lct_candidate,
    weight_search,
)
from .weights import Weight

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
UPPER_BOUND_LABEL = "upper bound only (>= 1: pair is lc at t=1)"


class UsageError(Exception):
    pass


def _emit(payload: Any, as_json: bool, text: str) -> None:
    if as_json:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _warn(msg: str) -> None:
    sys.stderr.write(f"warning: {msg}\n")


def _poly(args: argparse.Namespace):
    try:
        return parse(args.poly, args.vars)
    except ParseError as exc:
        raise UsageError(f"cannot parse polynomial: {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _weight(text: str) -> Weight:
    try:
        entries = [int(part) for part in text.split(",")]
        return Weight.primitive(entries)
    except ValueError as exc:
        raise UsageError(f"bad weight {text!r}: {exc}") from None


def default_bound() -> int:
    raw = os.environ.get("LCT_MAX_WEIGHT")
    if raw is None:
        return DEFAULT_SEARCH_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"LCT_MAX_WEIGHT must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("LCT_MAX_WEIGHT must be at least 1")
    return value


def _bound(args: argparse.Namespace) -> int:
    bound = args.max_weight if args.max_weight is not None else default_bound()
    if bound < 1:
        raise UsageError("--max-weight must be at least 1")
    return bound


def _c_label(c) -> str:
    return format_rational(c) + (f"  [{UPPER_BOUND_LABEL}]" if c >= 1 else "")


def cmd_eval(args: argparse.Namespace) -> int:
    f = _poly(args)
    w = _weight(args.weight)
    try:
        report = lct_candidate(f, w)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    c = report.candidate
    status = EXIT_OK
    payload: dict[str, Any] = {"poly": str(f), "threshold": report.to_json(), "upperBoundOnly": c >= 1}
    lines = [
        f"f = {f}",
        f"weight ({report.weight}): ord_w f = {report.order}",
        f"c = {_c_label(c)}",
        f"discrepancy a(S, tF) = {format_rational(report.discrepancy_intercept)} - {report.order}t",
    ]
    if c >= 1:
        _warn(f"c = {format_rational(c)} exceeds 1; this is not a threshold value")

    if f.arity == 3:
        record = build_record(f, report.weight, strict=False)
        payload["boundary"] = record.to_json()
        m1, m2, m3 = record.plane.pair_gcds
        lines += [
            f"S = P({record.plane.well_formed})  (pair gcds {m1},{m2},{m3})",
            "delta = " + ", ".join(format_rational(d) for d in record.delta),
            f"l = {record.residual_curve}  (degree {record.residual_degree})",
            f"balance defect = {format_rational(record.balance_defect)}",
        ]
        if not record.klt_coefficients:
            _warn("a different coefficient is >= 1: the boundary on S is not klt")
            status = EXIT_FAIL
    else:
        payload["boundary"] = None
        lines.append("boundary data: only defined in three variables")

    try:
        cover = k3_cover(f, report.weight)
        payload["k3"] = cover.to_json()
        lines.append(f"K3 cover: {cover.cover_poly}  weights ({cover.weight4}), m = {cover.m}")
    except (NonStandardThreshold, ValueError):
        payload["k3"] = None
        lines.append("K3 cover: non-standard c")
    _emit(payload, args.json, "\n".join(lines))
    return status


def cmd_search(args: argparse.Namespace) -> int:
    f = _poly(args)
    bound = _bound(args)
    try:
        w, c = weight_search(f, bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"poly": str(f), "maxWeight": bound, "weight": list(w), "candidate": format_rational(c), "upperBoundOnly": c >= 1}
    _emit(payload, args.json, f"weight ({w})  c = {_c_label(c)}")
    return EXIT_OK


def cmd_verdict(args: argparse.Namespace) -> int:
    f = _poly(args)
    bound = _bound(args)
    try:
        verdict = exceptionality_verdict(f, bound)
    except NormalizationRequired as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(verdict.to_json(), args.json, f"{verdict.kind.value} {format_rational(verdict.threshold)}  ({verdict.detail})")
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    try:
        graph = DualGraph.load(args.file)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"invalid graph file: {exc}") from None
    try:
        if args.op == "fundamental-cycle":
            z = fundamental_cycle(graph)
            z2 = z.dot(graph)
            payload = {"cycle": z.to_json(), "selfIntersection": z2}
            text = "\n".join(f"z[{v}] = {k}" for v, k in z.coefficients.items()) + f"\nZ^2 = {z2}"
        elif args.op == "invariants":
            d, pa = elliptic_invariants(graph)
            payload = {"d": d, "pa": format_rational(pa)}
            text = f"d = -Z^2 = {d}\npa(Z) = {format_rational(pa)}"
        elif args.op == "discrepancy":
            sol = discrepancy_system(graph)
            payload = {"r": {k: format_rational(v) for k, v in sol.r.items()}, "a": {k: format_rational(v) for k, v in sol.a.items()}}
            text = "\n".join(f"r[{k}] = {format_rational(v)}   a = {format_rational(-v)}" for k, v in sol.r.items())
        else:
            verdict = klt_verdict(discrepancy_system(graph))
            payload = {"verdict": verdict.value}
            text = verdict.value
    except (NotNegativeDefinite, ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    _emit(payload, args.json, text)
    return EXIT_OK


def cmd_corpus(args: argparse.Namespace) -> int:
    path = args.file or corpus_mod.shipped_path()
    try:
        rows = corpus_mod.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    summary = corpus_mod.verify_all(rows)
    counts = summary.counts
    if args.json:
        _emit([r.to_json() for r in summary.reports], True, "")
    else:
        lines = [
            f"{counts['rows']} rows, {counts['reports']} instances: "
            f"{counts['passed']} passed, {counts['failed']} failed, {counts['warnings']} warnings"
        ]
        for report in summary.reports:
            label = report.row_id + (f" [{report.params}]" if report.params else "")
            for ch in report.checks:
                if ch.status == corpus_mod.FAIL:
                    detail = f"expected {ch.expected}, got {ch.got}" if ch.expected is not None else (ch.text or "")
                    lines.append(f"FAIL {label}: {ch.name}: {detail}")
                elif ch.status == corpus_mod.WARN and args.verbose:
                    lines.append(f"warn {label}: {ch.name}: {ch.text}")
        if counts["failed"] == 0:
            lines.append("all rows pass")
        _emit(None, False, "\n".join(lines))
    return EXIT_OK if counts["failed"] == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lct", description="Exact log canonical threshold computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def poly_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--poly", required=True, help="polynomial, e.g. 'x^7+y^3+z^2'")
        p.add_argument("--vars", default="xyz", help="variable letters (default: xyz)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("eval", help="threshold candidate, boundary data and K3 cover for one weight")
    poly_args(p)
    p.add_argument("--weight", required=True, help="comma-separated weight, e.g. 6,14,21")
    p.set_defaults(func=cmd_eval)

    for name, func, help_text in (
        ("search", cmd_search, "minimize the candidate over bounded weights"),
        ("verdict", cmd_verdict, "exceptional / non-exceptional / lc verdict"),
    ):
        p = sub.add_parser(name, help=help_text)
        poly_args(p)
        p.add_argument("--max-weight", type=int, default=None, help="search bound (default: $LCT_MAX_WEIGHT or 30)")
        p.set_defaults(func=func)

    p = sub.add_parser("graph", help="dual graph computations")
    p.add_argument("--file", required=True)
    p.add_argument("--op", required=True, choices=("fundamental-cycle", "invariants", "discrepancy", "klt"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("corpus", help="verify the table corpus")
    p.add_argument("action", choices=("verify",))
    p.add_argument("--file", default=None, help="tables JSON (default: shipped corpus)")
    p.add_argument("--json", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true", help="also list warnings")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
