"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 bad input,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Iterator, TextIO

from . import automata, bijection, involution, matrix, paths, verify
from .budget import BudgetExceeded, enum_budget, list_budget

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

COUNT_TARGETS = ("det", "acyclic", "single-source", "unlabeled", "paths", "marked")
ENUM_TARGETS = ("automata", "canonical", "paths", "marked-codes", "lists")


class UsageError(ValueError):
    pass


def _dump(obj: object, out: TextIO) -> None:
    out.write(json.dumps(obj) + "\n")


def _need(args: argparse.Namespace, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"-{name} is required for {args.target}")


# -- count ------------------------------------------------------------------


def _count_value(args: argparse.Namespace) -> int:
    t, k, n = args.target, args.k, args.n
    if t == "acyclic":
        _need(args, "k", "n")
        return automata.acyclic_count(k, n)
    _need(args, "k", "n")
    if t == "det":
        return matrix.determinant(matrix.build_matrix(k, n))
    if t == "single-source":
        return automata.single_source_count(k, n)
    if t == "unlabeled":
        return automata.unlabeled_count(k, n)
    if t == "marked":
        return paths.marked_count(k, n)
    _need(args, "p")
    if not 0 <= args.p <= n:
        raise UsageError(f"p must satisfy 0 <= p <= n, got p={args.p}, n={n}")
    return paths.count_paths(k, n, args.p)


def cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    value = _count_value(args)
    if args.json:
        obj = {"target": args.target, "k": args.k, "n": args.n}
        if args.target == "paths":
            obj["p"] = args.p
        obj["value"] = str(value)
        _dump(obj, out)
    else:
        out.write(f"{value}\n")
    return EXIT_OK


# -- enumerate --------------------------------------------------------------


def _enumerate(args: argparse.Namespace) -> Iterator[dict]:
    t, k, n = args.target, args.k, args.n
    budget = enum_budget(args.enum_budget)
    if t == "lists":
        _need(args, "n")
        for pl in involution.enumerate_lists(n, list_budget(args.list_budget)):
            yield {**pl.to_json(), "weight": involution.weight(pl)}
        return
    _need(args, "k", "n")
    if t == "automata":
        yield from (a.to_json() for a in automata.enumerate_saf(k, n, budget))
    elif t == "canonical":
        yield from (a.to_json() for a in automata.enumerate_canonical(k, n, budget))
    elif t == "marked-codes":
        yield from (c.to_json() for c in paths.enumerate_marked_codes(k, n, budget))
    else:
        _need(args, "p")
        if not 0 <= args.p <= n:
            raise UsageError(f"p must satisfy 0 <= p <= n, got p={args.p}, n={n}")
        yield from (P.to_json() for P in paths.enumerate_paths(k, n, args.p, budget))


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    count = 0
    for obj in _enumerate(args):
        _dump(obj, out)
        count += 1
    _dump({"target": args.target, "count": count}, out)
    return EXIT_OK


# -- map / canon ------------------------------------------------------------


def _read_objects(source: str | None, stdin: TextIO) -> Iterator[dict]:
    """JSON objects from a file or stdin, one per line or a single document.
    Enumeration summary lines are skipped."""
    if source and source != "-":
        with open(source) as fh:
            text = fh.read()
    else:
        text = stdin.read()
    text = text.strip()
    if not text:
        raise UsageError("no input")
    try:
        docs = [json.loads(text)]
    except json.JSONDecodeError:
        try:
            docs = [json.loads(line) for line in text.splitlines() if line.strip()]
        except json.JSONDecodeError as exc:
            raise UsageError(f"invalid JSON input: {exc}") from None
    for doc in docs:
        if not isinstance(doc, dict):
            raise UsageError("each input must be a JSON object")
        if "count" in doc and "target" in doc:
            continue
        yield doc


def cmd_map(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    for doc in _read_objects(args.input, stdin):
        if args.direction == "path-to-automaton":
            code = paths.MarkedPathCode.from_json(doc)
            trace = bijection.trace_path_to_automaton(code)
            image = trace.automaton.to_json()
            if args.trace:
                _dump({"image": image, "trace": trace.to_json()}, out)
            else:
                _dump(image, out)
        else:
            a = automata.TwoLineAutomaton.from_json(doc)
            check = automata.validate(a)
            if not check:
                raise UsageError(f"invalid automaton: {check.reason}")
            image = bijection.automaton_to_path(a).to_json()
            if args.trace:
                back = bijection.trace_path_to_automaton(paths.MarkedPathCode.from_json(image))
                _dump({"image": image, "trace": back.to_json()}, out)
            else:
                _dump(image, out)
    return EXIT_OK


def cmd_canon(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    for doc in _read_objects(args.input, stdin):
        a = automata.TwoLineAutomaton.from_json(doc)
        check = automata.validate(a)
        if not check:
            raise UsageError(f"invalid automaton: {check.reason}")
        _dump(automata.canonicalize(a).to_json(), out)
    return EXIT_OK


# -- verify -----------------------------------------------------------------


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    suites = list(verify.SUITES) if args.suites in (None, "all") else args.suites.split(",")
    report = verify.run(args.max_k, args.max_n, suites,
                        enum_budget(args.enum_budget), list_budget(args.list_budget))
    if args.json:
        _dump(report.to_json(timings=args.timings), out)
    else:
        for c in report.checks:
            params = " ".join(f"{key}={val}" for key, val in c.params.items())
            line = f"{c.status.upper():4}  {c.name} [{params}]  {c.lhs} vs {c.rhs}"
            if args.timings:
                line += f"  ({c.elapsed:.3f}s)"
            out.write(line + "\n")
        out.write(f"{report.passed} passed, {report.failed} failed\n")
    return EXIT_FAIL if report.failed else EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stirling-saf",
        description="Stirling cycle determinants and unlabeled acyclic single-source automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def params(p: argparse.ArgumentParser) -> None:
        p.add_argument("-k", type=int, help="alphabet / matrix parameter")
        p.add_argument("-n", type=int, help="size parameter")
        p.add_argument("-p", type=int, help="path end height (paths only)")

    def budgets(p: argparse.ArgumentParser) -> None:
        p.add_argument("--enum-budget", type=int, default=None,
                       help="candidate limit for brute-force enumeration (env SA_ENUM_BUDGET)")
        p.add_argument("--list-budget", type=int, default=None,
                       help="size limit for permutation-list enumeration (env SA_LIST_BUDGET)")

    p = sub.add_parser("count", help="print an exact count",
                       description="For det and marked, -k is the matrix parameter; "
                                   "for automata counts it is the alphabet size.")
    p.add_argument("target", choices=COUNT_TARGETS)
    params(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="stream objects as JSON lines")
    p.add_argument("target", choices=ENUM_TARGETS)
    params(p)
    budgets(p)

    p = sub.add_parser("map", help="apply the path/automaton bijection to JSON input")
    p.add_argument("direction", choices=("path-to-automaton", "automaton-to-path"))
    p.add_argument("input", nargs="?", help="input file (default: stdin)")
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("canon", help="canonicalize automata given as JSON")
    p.add_argument("input", nargs="?", help="input file (default: stdin)")

    p = sub.add_parser("verify", help="run the cross-verification suites")
    p.add_argument("--suites", default="all",
                   help="comma-separated subset of: " + ",".join(verify.SUITES))
    p.add_argument("--max-k", type=int, default=2)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true", help="include per-check durations")
    budgets(p)
    return parser


def main(argv: Iterable[str] | None = None, out: TextIO | None = None,
         stdin: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    stdin = stdin if stdin is not None else sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "count":
            return cmd_count(args, out)
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        if args.command == "map":
            return cmd_map(args, out, stdin)
        if args.command == "canon":
            return cmd_canon(args, out, stdin)
        return cmd_verify(args, out)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
