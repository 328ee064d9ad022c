"""Command-line front end: ``verify``, ``explore`` and ``diff``.

Every configuration flag can also be set through an environment variable
named after it, e.g. ``BICYCLIC_ELEM_BOUND=6``.  Flags win over the
environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .core import format_elem
from .explore import CarrierMismatchError, ParseError, evaluate
from .reports import CLAIM_IDS, RunConfig, diff_reports, render_text, report_document, run_claims

ENV_PREFIX = "BICYCLIC_"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _env(name: str, default):
    raw = os.environ.get(ENV_PREFIX + name.upper())
    if raw is None:
        return default
    return type(default)(raw) if default is not None else raw


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    defaults = RunConfig()
    p.add_argument("--prime", type=int, default=_env("prime", defaults.prime))
    p.add_argument("--elem-bound", type=int, default=_env("elem_bound", defaults.elem_bound))
    p.add_argument("--param-bound", type=int, default=_env("param_bound", defaults.param_bound))
    p.add_argument("--witness-bound", type=int, default=_env("witness_bound", defaults.witness_bound))
    p.add_argument("--format", choices=("text", "json"), default=_env("format", "text"))
    p.add_argument("--out", type=Path, default=_env("out", None))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bicyclic-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="check a claim at desk scale and report")
    verify.add_argument("claim", choices=CLAIM_IDS)
    _add_config_flags(verify)

    explore = sub.add_parser("explore", help="evaluate a product expression")
    explore.add_argument("expr")
    _add_config_flags(explore)

    diff = sub.add_parser("diff", help="compare two report files, ignoring durations")
    diff.add_argument("golden", type=Path)
    diff.add_argument("fresh", type=Path)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(args.prime, args.elem_bound, args.param_bound, args.witness_bound)


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        print(text)
    else:
        out.write_text(text + "\n")


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    reports = run_claims(args.claim, cfg)
    if args.format == "json":
        text = json.dumps(report_document(reports, cfg), indent=2, sort_keys=True)
    else:
        text = render_text(reports)
    _emit(text, args.out)
    bad = [r for r in reports if not r.matches]
    for r in bad:
        print(f"{r.claim}: differs from the prediction", file=sys.stderr)
        for w in r.witnesses[:5]:
            print(f"  {json.dumps(w, sort_keys=True)}", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_explore(args: argparse.Namespace) -> int:
    try:
        result = evaluate(args.expr)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        print(f"  {args.expr}\n  {' ' * exc.pos}^", file=sys.stderr)
        return EXIT_USAGE
    except CarrierMismatchError as exc:
        print(f"carrier mismatch: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        text = json.dumps(
            {
                "value": format_elem(result.value),
                "factors": [format_elem(f) for f in result.factors],
                "membership": {c.name: flag for c, flag in result.membership.items()},
            },
            sort_keys=True,
        )
    else:
        text = result.render()
    _emit(text, args.out)
    if result.query is not None and not result.membership[result.query]:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_diff(args: argparse.Namespace) -> int:
    try:
        golden = json.loads(args.golden.read_text())
        fresh = json.loads(args.fresh.read_text())
        diffs = diff_reports(golden, fresh)
    except (OSError, ValueError) as exc:
        print(f"cannot compare: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for d in diffs:
        print(d)
    return EXIT_MISMATCH if diffs else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "diff":
        try:
            _config(args)
        except ValueError as exc:
            parser.error(str(exc))
    handler = {"verify": cmd_verify, "explore": cmd_explore, "diff": cmd_diff}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
