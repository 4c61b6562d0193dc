"""Command-line entry point: ``orderlab verify | check | search | demo``.

Exit codes: 0 when every check passes (or a search finds nothing), 1 on a
suite failure or search finding, 2 on bad input or configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .errors import OrderLabError
from .foundation import family_from_json
from .lab.inspect import QUERIES, check_family, check_relation, demo
from .lab.runner import SuiteReport, SuiteSpec, run_suite
from .lab.search import CLAIMS, search_counterexample
from .lab.suites import SUITES
from .relations import relation_from_json, relation_from_matrix_text


def _render(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for key, value in obj.items():
            if isinstance(value, dict) or (isinstance(value, list) and value and isinstance(value[0], dict)):
                lines.append(f"{pad}{key}:")
                lines.extend(_render(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_inline(value)}")
        return lines
    if isinstance(obj, list):
        lines = []
        for item in obj:
            sub = _render(item, indent + 1)
            lines.append(f"{pad}-")
            lines.extend(sub)
        return lines
    return [f"{pad}{_inline(obj)}"]


def _inline(value: Any) -> str:
    if isinstance(value, list):
        if all(isinstance(v, list) for v in value):
            return "[" + ", ".join("{" + ",".join(map(str, v)) + "}" for v in value) + "]"
        return "{" + ",".join(map(str, value)) + "}"
    return json.dumps(value) if value is None or isinstance(value, bool) else str(value)


def _write_report(report: SuiteReport, path: str | None, include_timing: bool) -> None:
    if path:
        Path(path).write_text(report.to_json(include_timing))


def _summary(report: SuiteReport) -> None:
    d = report.to_dict()
    print(f"{d['suite_id']}: {d['status']}  instances={d['instances_checked']}  "
          f"failures={d['failure_count']}  time={d['wall_time_ms']:.0f}ms")
    print(f"  per n: {d['per_n']}")
    for key, value in d["observations"].items():
        print(f"  {key}: {value}")
    for failure in d["failures"][:10]:
        print(f"  FAIL #{failure['index']} n={failure['n']} {failure['predicate']}: {failure['detail']}")
        print(f"    instance: {json.dumps(failure['instance'])}")
    if d.get("note"):
        print(f"  note: {d['note']}")


def cmd_verify(args: argparse.Namespace) -> int:
    mode = "sampled" if args.samples is not None else "exhaustive"
    spec = SuiteSpec(
        suite_id=args.suite,
        max_n=args.max_n,
        mode=mode,
        samples=args.samples or 0,
        seed=args.seed,
        min_n=args.min_n,
    )
    report = run_suite(spec, jobs=args.jobs)
    _summary(report)
    _write_report(report, args.json, not args.no_timing)
    return 0 if report.passed else 1


def _load_instance(path: str):
    text = Path(path).read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        return relation_from_matrix_text(text)
    if isinstance(obj, dict) and "pairs" in obj:
        return relation_from_json(obj)
    return family_from_json(obj)


def cmd_check(args: argparse.Namespace) -> int:
    inst = _load_instance(args.input)
    if hasattr(inst, "rows"):
        out = check_relation(inst, args.query)
    else:
        out = check_family(inst, args.query)
    print(json.dumps(out, indent=2) if args.as_json else "\n".join(_render(out)))
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    report = search_counterexample(args.claim, args.max_n, args.budget)
    _summary(report)
    _write_report(report, args.json, not args.no_timing)
    return 1 if report.failure_count else 0


def cmd_demo(args: argparse.Namespace) -> int:
    out = demo(args.name)
    print(json.dumps(out, indent=2) if args.as_json else "\n".join(_render(out)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orderlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a theorem suite")
    v.add_argument("--suite", required=True, choices=sorted(SUITES))
    v.add_argument("--max-n", type=int, required=True)
    v.add_argument("--min-n", type=int, default=None)
    mode = v.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="enumerate every instance (default)")
    mode.add_argument("--samples", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", metavar="OUT")
    v.add_argument("--no-timing", action="store_true", help="write wall_time_ms as null for byte-stable reports")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("check", help="evaluate one instance from a JSON or 0/1 matrix file")
    c.add_argument("--input", required=True)
    c.add_argument("--query", required=True, choices=QUERIES)
    c.add_argument("--json", dest="as_json", action="store_true")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("search", help="search for instances of an open claim")
    s.add_argument("--claim", required=True, choices=sorted(CLAIMS))
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--budget", type=float, default=None, metavar="SECONDS")
    s.add_argument("--json", metavar="OUT")
    s.add_argument("--no-timing", action="store_true")
    s.set_defaults(func=cmd_search)

    d = sub.add_parser("demo", help="worked examples with all topologies")
    d.add_argument("name", choices=["chain", "antichain", "vee"])
    d.add_argument("--json", dest="as_json", action="store_true")
    d.set_defaults(func=cmd_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (OrderLabError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
