"""Command-line front end.

Exit codes: 0 success, 2 unparseable input, 3 invariant or precondition
violation, 4 a verification check failed, 5 enumeration cap exceeded.
Stdout carries only the requested JSON/CSV; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from . import bijections, enumeration, verify
from .core import npl, parse_path, rml
from .enumeration import PRESETS, StepSet, Statistic
from .errors import CapExceeded, ChungFellerError, InvalidRange, ParseError
from .pointed import (
    PointedLatticePath,
    gamma_sequence,
    pnpl,
    prml,
    theta_sequence,
)

EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_CHECK_FAILED = 4
EXIT_CAP = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def parse_range(text: str) -> list[int]:
    """``"3"`` or ``"1..4"`` (inclusive) to a list of integers."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise ParseError(f"bad range {text!r}; expected N or A..B") from None


def parse_step_set(text: str | None) -> StepSet | None:
    if text is None:
        return None
    if text in PRESETS:
        return PRESETS[text]
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        raise ParseError(f"step set must be one of {sorted(PRESETS)} or JSON") from None
    try:
        if isinstance(obj, dict):
            return StepSet(frozenset(obj.get("A", ())), frozenset(obj.get("B", ())))
        return StepSet.from_steps(obj)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ChungFellerError):
            raise
        raise ParseError(f"malformed step set: {exc}") from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def cmd_stat(args) -> int:
    path = parse_path(args.path)
    stat = Statistic.parse(args.stat)
    if stat.pointed:
        if args.root_offset is None:
            raise ParseError(f"--stat {stat.value} needs --root-offset")
        value = (pnpl if stat is Statistic.PNPL else prml)(PointedLatticePath(path, args.root_offset))
    else:
        value = (npl if stat is Statistic.NPL else rml)(path)
    print(value)
    return 0


def cmd_enumerate(args) -> int:
    step_set = parse_step_set(args.step_set)
    if step_set is None:
        paths = enumeration.enumerate_paths(args.n, args.m)
    else:
        paths = enumeration.enumerate_step_set_paths(step_set, args.n + 1, args.m)
    if args.pointed:
        items = (PointedLatticePath(p, j) for p in paths for j in range(p.steps[-1].x))
    else:
        items = paths
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["steps", "root_offset"] if args.pointed else ["steps"])
        for item in items:
            if args.pointed:
                writer.writerow([str(item.path), item.root_offset])
            else:
                writer.writerow([str(item)])
    else:
        for item in items:
            _emit(item.to_json())
    return 0


def cmd_histogram(args) -> int:
    dist = enumeration.histogram(args.n, args.m, args.statistic, parse_step_set(args.step_set))
    if args.format == "csv":
        sys.stdout.write(dist.to_csv())
    else:
        _emit(dist.to_json())
    return 0


def cmd_biject(args) -> int:
    path = parse_path(args.path)
    fn = bijections.MAPS[args.map]
    if args.trace:
        for step in bijections.orbit(args.map, path):
            _emit(step.to_json())
    else:
        _emit(fn(path).to_json())
    return 0


def _matrix(args, sequence_of, stat_fn) -> int:
    path = parse_path(args.path)
    members = sequence_of(path)
    if args.r is not None:
        if not 1 <= args.r <= len(members):
            raise InvalidRange(f"--r must lie in [1, {len(members)}]")
        _emit(members[args.r - 1].realized.to_json())
        return 0
    _emit({
        "order": [[c.rotation_index, c.offset] for c in members],
        "paths": [c.realized.to_json() for c in members],
        "stat": [stat_fn(c.realized) for c in members],
    })
    return 0


def cmd_theta(args) -> int:
    return _matrix(args, theta_sequence, pnpl)


def cmd_gamma(args) -> int:
    return _matrix(args, gamma_sequence, prml)


def cmd_verify(args) -> int:
    n_values = parse_range(args.n)
    if args.m is not None:
        pairs = verify.grid(n_values, m_values=parse_range(args.m))
    else:
        pairs = verify.grid(n_values, m_offsets=parse_range(args.m_offset))
    report = verify.run(pairs, args.suite)
    _emit(report.to_json())
    for check in report.failed:
        print(f"FAILED {check.name} {check.params}", file=sys.stderr)
    return 0 if report.ok else EXIT_CHECK_FAILED


def cmd_sample(args) -> int:
    q = enumeration.uniform_sample(args.n, args.m, args.statistic, args.r, args.seed)
    _emit(q.to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chungfeller", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stat", help="compute one statistic of a path")
    p.add_argument("--path", required=True)
    p.add_argument("--stat", required=True, choices=[s.value for s in Statistic])
    p.add_argument("--root-offset", type=int)
    p.set_defaults(func=cmd_stat)

    p = sub.add_parser("enumerate", help="stream every path as JSON lines or CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--pointed", action="store_true")
    p.add_argument("--step-set")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("histogram", help="exact distribution of a statistic")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--statistic", required=True, choices=[s.value for s in Statistic])
    p.add_argument("--step-set")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_histogram)

    p = sub.add_parser("biject", help="apply a level-shifting map")
    p.add_argument("--path", required=True)
    p.add_argument("--map", required=True, choices=sorted(bijections.MAPS))
    p.add_argument("--trace", action="store_true", help="repeat until the map's domain ends")
    p.set_defaults(func=cmd_biject)

    for name, func in (("theta", cmd_theta), ("gamma", cmd_gamma)):
        p = sub.add_parser(name, help=f"the {name} ordering of a path's pointed class")
        p.add_argument("--path", required=True)
        p.add_argument("--r", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run exhaustive checks over a grid of (n, m)")
    p.add_argument("--n", required=True, help="N or A..B")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--m", help="M or A..B")
    group.add_argument("--m-offset", default="0..3", help="m = n + 1 + offset; A..B")
    p.add_argument("--suite", choices=["all", *verify.SUITES], default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="uniform pointed path with a given statistic value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--statistic", choices=[s.value for s in Statistic], default="pnpl")
    p.add_argument("--r", type=int, default=0, help="target statistic value")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ChungFellerError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
