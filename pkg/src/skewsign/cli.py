"""Command-line front end.

Thin client over the service handlers: subcommands build the same
payloads the HTTP endpoints accept and render the responses as text,
JSON, or CSV. Exit codes: 0 pass, 1 identity violation, 2 usage or
schema error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from . import service
from .shapes import Partition
from .verify import IDENTITIES

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _partition_arg(text: str) -> list[int]:
    text = text.strip()
    if text in ("", "-"):
        return []
    try:
        return list(Partition(int(x) for x in text.split(",")).parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _emit(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(payload)
            if not payload.endswith("\n"):
                handle.write("\n")
    else:
        sys.stdout.write(payload)
        if not payload.endswith("\n"):
            sys.stdout.write("\n")


def _json_text(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def _csv_text(row: dict) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(row.keys())
    writer.writerow(
        json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v
        for v in row.values()
    )
    return buffer.getvalue()


def _shape_label(outer: list[int], inner: list[int]) -> str:
    fmt = lambda parts: ",".join(map(str, parts)) if parts else "-"
    return f"{fmt(outer)}/{fmt(inner)}"


def cmd_imbalance(args) -> int:
    result = service.compute_imbalance(args.outer, args.inner)
    if args.format == "json":
        _emit(_json_text(result), args.out)
    elif args.format == "csv":
        _emit(_csv_text(result), args.out)
    else:
        lines = [
            f"shape: {_shape_label(result['outer'], result['inner'])}",
            f"cells: {result['cells']}",
            f"tableaux: {result['tableau_count']}",
            f"imbalance: {result['imbalance']}",
            f"sign +1: {result['plus']}",
            f"sign -1: {result['minus']}",
        ]
        _emit("\n".join(lines), args.out)
    return EXIT_PASS


def cmd_rs(args) -> int:
    if args.direction == "reverse" and args.trace:
        raise ValueError("--trace applies to the forward direction only")
    with open(args.input, "r", encoding="utf-8") as handle:
        payload = json.load(handle)
    if args.direction == "forward":
        result = service.run_forward(
            payload, trace=args.trace, assert_ledgers=args.assert_ledgers
        )
    else:
        result = service.run_reverse(payload)
    _emit(_json_text(result), args.out)
    return EXIT_PASS


def cmd_verify(args) -> int:
    print(f"checking {args.identity} ...", file=sys.stderr)
    started = time.perf_counter()
    report = service.run_verification(
        args.identity,
        alpha=args.alpha,
        beta=args.beta,
        n=args.n,
        m=args.m,
        workers=args.workers,
        check_ledgers=args.assert_ledgers,
    )
    elapsed = time.perf_counter() - started
    if args.format == "json":
        _emit(_json_text(report), args.out)
    elif args.format == "csv":
        _emit(_csv_text(report), args.out)
    else:
        params = ", ".join(f"{k}={v}" for k, v in report["parameters"].items())
        lines = [
            f"identity: {report['identity']}",
            f"parameters: {params}",
            f"instances: {report['instances']}",
        ]
        if report["lhs"] is not None:
            lines.append(f"lhs: {report['lhs']}")
            lines.append(f"rhs: {report['rhs']}")
        lines.append(f"violations: {len(report['violations'])}")
        for violation in report["violations"][:10]:
            lines.append(f"  - {violation['kind']}: {violation['detail']}")
        lines.append(
            f"result: {'PASS' if report['passed'] else 'FAIL'} ({elapsed:.2f}s)"
        )
        _emit("\n".join(lines), args.out)
    return EXIT_PASS if report["passed"] else EXIT_VIOLATION


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run(service.app, host=args.host, port=args.port)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewsign",
        description="Sign-imbalance statistics, the skew insertion correspondence, "
        "and exhaustive identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_imb = sub.add_parser("imbalance", help="tableau count, imbalance, and sign distribution")
    p_imb.add_argument("--outer", type=_partition_arg, required=True, metavar="PARTS")
    p_imb.add_argument("--inner", type=_partition_arg, default=[], metavar="PARTS")
    p_imb.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_imb.add_argument("--out", metavar="FILE")
    p_imb.set_defaults(func=cmd_imbalance)

    p_rs = sub.add_parser("rs", help="run the correspondence on a JSON input file")
    p_rs.add_argument("direction", choices=("forward", "reverse"))
    p_rs.add_argument("input", metavar="FILE")
    p_rs.add_argument("--trace", action="store_true", help="include the step ledger")
    p_rs.add_argument(
        "--assert-ledgers", action=argparse.BooleanOptionalAction, default=True
    )
    p_rs.add_argument("--out", metavar="FILE")
    p_rs.set_defaults(func=cmd_rs)

    p_ver = sub.add_parser("verify", help="run an identity check")
    p_ver.add_argument("identity", choices=sorted(IDENTITIES))
    p_ver.add_argument("--alpha", type=_partition_arg, default=None, metavar="PARTS")
    p_ver.add_argument("--beta", type=_partition_arg, default=None, metavar="PARTS")
    p_ver.add_argument("--n", type=int, default=None)
    p_ver.add_argument("--m", type=int, default=None)
    p_ver.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p_ver.add_argument(
        "--assert-ledgers", action=argparse.BooleanOptionalAction, default=True
    )
    p_ver.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_ver.add_argument("--out", metavar="FILE")
    p_ver.set_defaults(func=cmd_verify)

    p_srv = sub.add_parser("serve", help="run the HTTP service")
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--port", type=int, default=8000)
    p_srv.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
