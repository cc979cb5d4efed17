"""Batch verification harness.

Every check is a subcommand; reports stream to stdout as versioned JSON
(or aligned text with --format text).  Exit codes: 0 all executed checks
pass, 1 at least one check fails, 2 for unknown subcommands, invalid
flags, or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import CHECKS, run_check, validate_params
from .reports import FAIL, PRECONDITION, SCHEMA_VERSION, VerdictReport


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modpalg",
        description="Exact verification checks for the mod-p graded algebra suite.",
    )
    sub = parser.add_subparsers(dest="subcommand", metavar="subcommand")
    for name in CHECKS:
        sp = sub.add_parser(name, help=f"run the {name.removeprefix('verify-')} check")
        sp.add_argument("--p", type=int, default=None, help="odd prime (default 3)")
        sp.add_argument("--n", type=int, default=None, help="rank / matrix size parameter")
        sp.add_argument("--blocks", type=int, default=None, help="number of Gamma blocks")
        sp.add_argument("--max-degree", type=int, default=None, dest="max_degree",
                        help="degree or index bound where the check takes one")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--seed", type=int, default=None,
                        help="seed recorded for property-test sampling")
    return parser


def render_text(reports: list[VerdictReport]) -> str:
    lines = []
    for r in reports:
        params = " ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
        lines.append(f"[{r.status.upper():>18}] {r.check} {params} ({r.elapsed_ms:.1f} ms)")
        for d in r.details:
            ok = d.get("ok")
            mark = "." if ok else ("!" if ok is False else " ")
            rest = " ".join(f"{k}={v}" for k, v in d.items() if k != "ok")
            lines.append(f"    {mark} {rest}")
        if r.counterexample is not None:
            lines.append(f"    counterexample: {r.counterexample}")
    return "\n".join(lines)


def render_json(reports: list[VerdictReport]) -> str:
    payload = {"schema": SCHEMA_VERSION, "reports": [r.to_dict() for r in reports]}
    return json.dumps(payload, indent=2, sort_keys=False, default=str)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags/subcommands already; normalize odd codes
        return 2 if exc.code else 0
    if not args.subcommand:
        parser.print_usage(sys.stderr)
        return 2
    params = {k: v for k, v in vars(args).items() if k not in ("subcommand", "format")}
    err = validate_params(params)
    if err:
        print(err, file=sys.stderr)
        return 2
    reports = run_check(args.subcommand, params)
    out = render_json(reports) if args.format == "json" else render_text(reports)
    print(out)
    if any(r.status == PRECONDITION for r in reports):
        return 2
    if any(r.status == FAIL for r in reports):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
