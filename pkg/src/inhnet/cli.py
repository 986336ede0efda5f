"""Command line front end: ``inhnet <command> ...``.

Exit status is 0 on success, 1 on invalid input, 2 when a cross-check
finds a discrepancy and 64 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from . import checks, setsize, truthvalue
from .diagram import Diagram
from .engine import (
    DEFAULT_EXTENSION_CAP,
    Closure,
    Preclusion,
    Scepticism,
    Strategy,
    conclusion_table,
    concludes,
    evaluate,
    extensions,
    sceptical_closure,
)
from .errors import ConfigurationError, InheritanceError, NetSyntaxError
from .netio import emit_dot, emit_report_json, parse
from .policy import Policy
from .randomnets import NetShape, population

EXIT_OK, EXIT_INPUT, EXIT_FINDINGS, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _strategy_flags(p: argparse.ArgumentParser, scepticism: bool = True) -> None:
    p.add_argument("--strategy", choices=[m.value for m in Preclusion], default="split")
    p.add_argument("--policy", choices=[m.value for m in Policy], default="p22")
    if scepticism:
        p.add_argument("--scepticism", choices=[m.value for m in Scepticism], default="direct")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="inhnet", description=__doc__.splitlines()[0])
    parser.add_argument("--path-cap", type=int, default=None, help="max potential paths per net")
    parser.add_argument("--extension-cap", type=int, default=DEFAULT_EXTENSION_CAP)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="validate a net")
    p.add_argument("file")

    p = sub.add_parser("paths", help="list valid paths")
    p.add_argument("file")
    _strategy_flags(p)
    p.add_argument("--unicode", action="store_true")

    p = sub.add_parser("query", help="does x inherit y?")
    p.add_argument("file")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    _strategy_flags(p)
    p.add_argument("--unicode", action="store_true")

    p = sub.add_parser("extensions", help="list extensions or their intersection")
    p.add_argument("file")
    p.add_argument("--policy", choices=[m.value for m in Policy], default="p22")
    p.add_argument("--intersect", choices=[m.value for m in Closure])
    p.add_argument("--unicode", action="store_true")

    p = sub.add_parser("crosscheck", help="compare the three semantics")
    p.add_argument("file")
    p.add_argument("--policy", choices=[m.value for m in Policy], default="p22")

    p = sub.add_parser("dot", help="emit Graphviz DOT")
    p.add_argument("file")
    p.add_argument("--with-paths", action="store_true", help="highlight valid compound paths")
    _strategy_flags(p, scepticism=False)

    p = sub.add_parser("report", help="emit a JSON report")
    p.add_argument("file")
    _strategy_flags(p)

    p = sub.add_parser("randcheck", help="run every check on random nets")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--max-nodes", type=int, default=8)
    p.add_argument("--max-arrows", type=int, default=14)
    p.add_argument("--edge-prob", type=float, default=NetShape.edge_prob)
    p.add_argument("--neg-prob", type=float, default=NetShape.neg_prob)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--policy", choices=[m.value for m in Policy], default="p22")
    p.add_argument("--workers", type=int, default=1)
    return parser


def _strategy(args) -> Strategy:
    scepticism = getattr(args, "scepticism", "direct")
    try:
        return Strategy(Preclusion(args.strategy), Scepticism(scepticism), Policy(args.policy))
    except ConfigurationError as exc:
        raise UsageError(str(exc)) from None


def _load(path: str) -> Diagram:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse(text)
    except NetSyntaxError as exc:
        found = f", found {exc.found!r}" if exc.found else ""
        raise InheritanceError(f"{path}:{exc.line}:{exc.column}: expected {exc.expected}{found}") from None
    except InheritanceError as exc:
        line = getattr(exc, "line", None)
        where = f"{path}:{line}" if line else path
        raise InheritanceError(f"{where}: {getattr(exc, 'message', exc)}") from None


def _store_for(d: Diagram, strategy: Strategy, args):
    if strategy.scepticism is Scepticism.EXTENSIONS:
        exts = extensions(d, strategy.policy, args.extension_cap, args.path_cap)
        return sceptical_closure(exts, Closure.PATHS), exts
    return evaluate(d, strategy, args.path_cap), None


def cmd_check(args, out) -> int:
    d = _load(args.file)
    print(f"ok: {len(d.nodes)} nodes, {len(d.arrows)} arrows", file=out)
    return EXIT_OK


def cmd_paths(args, out) -> int:
    d = _load(args.file)
    store, _ = _store_for(d, _strategy(args), args)
    for p in store.sorted_paths():
        print(p.format(args.unicode), file=out)
    return EXIT_OK


def cmd_query(args, out) -> int:
    d = _load(args.file)
    strategy = _strategy(args)
    c = concludes(d, args.source, args.target, strategy)
    print(c.value.value, file=out)
    for w in c.witnesses:
        print("  " + w.format(args.unicode), file=out)
    return EXIT_OK


def cmd_extensions(args, out) -> int:
    d = _load(args.file)
    exts = extensions(d, Policy(args.policy), args.extension_cap, args.path_cap)
    if args.intersect is None:
        for i, e in enumerate(exts, start=1):
            print(f"extension {i}:", file=out)
            for p in e.sorted_paths():
                print("  " + p.format(args.unicode), file=out)
    elif Closure(args.intersect) is Closure.PATHS:
        for p in sceptical_closure(exts, Closure.PATHS).sorted_paths():
            print(p.format(args.unicode), file=out)
    else:
        table = sceptical_closure(exts, Closure.CONCLUSIONS)
        for (x, y), c in sorted(table.items()):
            if c.value.value != "no-path":
                print(f"{x} {y} {c.value.value}", file=out)
    return EXIT_OK


def cmd_crosscheck(args, out) -> int:
    d = _load(args.file)
    policy = Policy(args.policy)
    found = 0
    for name, rows in (
        ("truth values", truthvalue.equivalence_report(d, policy)),
        ("set sizes", setsize.equivalence_report(d, policy)),
    ):
        print(f"{name}: {len(rows)} discrepancies", file=out)
        for r in rows:
            print(f"  {r.origin} {r.target}: paths say {r.paths}, {name} say {r.other}", file=out)
        found += len(rows)
    return EXIT_FINDINGS if found else EXIT_OK


def cmd_dot(args, out) -> int:
    d = _load(args.file)
    store = evaluate(d, _strategy(args), args.path_cap) if args.with_paths else None
    out.write(emit_dot(d, store))
    return EXIT_OK


def full_report(d: Diagram, strategy: Strategy, path_cap=None, extension_cap=DEFAULT_EXTENSION_CAP) -> str:
    if strategy.scepticism is Scepticism.EXTENSIONS:
        exts = extensions(d, strategy.policy, extension_cap, path_cap)
        store = sceptical_closure(exts, Closure.PATHS)
        table = sceptical_closure(exts, Closure.CONCLUSIONS)
    else:
        exts = []
        store = evaluate(d, strategy, path_cap)
        table = conclusion_table(store)
    conclusions = {k: c for k, c in table.items() if c.value.value != "no-path"}
    return emit_report_json(
        d,
        store=store,
        conclusions=conclusions,
        extensions=exts,
        truth_facts=truthvalue.derive(d, strategy.policy),
        size_facts=setsize.derive_size_facts(d, strategy.policy),
        equivalence={
            "def41_vs_paths": truthvalue.equivalence_report(d, strategy.policy),
            "fact52": setsize.equivalence_report(d, strategy.policy),
        },
    )


def cmd_report(args, out) -> int:
    d = _load(args.file)
    out.write(full_report(d, _strategy(args), args.path_cap, args.extension_cap))
    return EXIT_OK


def _check_one(item):
    index, d, policy = item
    return index, checks.run_checks(d, policy).failed()


def cmd_randcheck(args, out) -> int:
    if args.n < 0 or args.max_nodes < 2:
        raise UsageError("randcheck needs --n >= 0 and --max-nodes >= 2")
    shape = NetShape(args.max_nodes, args.max_arrows, args.edge_prob, args.neg_prob)
    nets = population(args.n, args.seed, shape)
    items = [(i, d, Policy(args.policy)) for i, d in enumerate(nets)]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            results = list(pool.map(_check_one, items, chunksize=32))
    else:
        results = [_check_one(item) for item in items]
    totals: dict[str, int] = {name: 0 for name in [*checks.STORE_CHECKS, "truth_values", "set_sizes"]}
    failing = 0
    for index, failed in results:
        if failed:
            failing += 1
            print(f"net {index}:", file=out)
            for line in nets[index].sorted_arrows():
                print(f"    {line}", file=out)
            for name, findings in failed.items():
                totals[name] += len(findings)
                for f in findings:
                    print(f"  {name}: {f}", file=out)
    print(f"seed {args.seed}: {len(nets)} nets, {failing} with findings", file=out)
    for name, count in totals.items():
        print(f"  {name}: {count}", file=out)
    return EXIT_FINDINGS if failing else EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "paths": cmd_paths,
    "query": cmd_query,
    "extensions": cmd_extensions,
    "crosscheck": cmd_crosscheck,
    "dot": cmd_dot,
    "report": cmd_report,
    "randcheck": cmd_randcheck,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except InheritanceError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
