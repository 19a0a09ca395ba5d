"""``weihrauch-lab``: list, verify, run, solve, generate.

Exit codes: 0 success, 1 an Invalid verdict (or a broken certificate), 2 bad
names, flags or files, 3 an Unknown verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, List, Optional

from .. import config
from ..encodings import FiniteGraph, OracleFn, from_description
from ..harness import FAMILY_NAMES, family, verify_reduction
from ..harness.mutants import sample
from ..problems import (BASE_NAMES, CertificateError, HatSolution, NoSolution, ShapeError,
                        check_solution, describe_solution, hat_solution, solve_certified)
from ..reductions.registry import ALIASES, ENTRIES, lookup
from ..verdict import Status, Verdict
from .files import FileFormatError, dumps, loads, read_instance

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_pattern(text: Optional[str]) -> Optional[FiniteGraph]:
    """``"3:0-1,1-2"`` is the path on three vertices; ``"2:"`` two isolated vertices."""
    if text is None:
        return None
    try:
        size, _, edges = text.partition(":")
        pairs = [tuple(int(x) for x in e.split("-")) for e in edges.split(",") if e]
        return FiniteGraph.from_edges(int(size), pairs)
    except ValueError as exc:
        raise UsageError(f"bad pattern {text!r}: {exc}") from exc


def parse_solution(text: str) -> Any:
    """An integer, a JSON list (rows of a parallel solution) or an oracle descriptor."""
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad solution {text!r}: {exc}") from exc
    return _solution(value)


def _solution(value: Any) -> Any:
    if isinstance(value, bool):
        raise UsageError("solutions are numbers, lists or oracle descriptors")
    if isinstance(value, int):
        return value
    if isinstance(value, list):
        if not value:
            raise UsageError("a parallel solution needs at least one row")
        return hat_solution(_solution(v) for v in value)
    if isinstance(value, dict):
        try:
            return from_description(value)
        except (KeyError, ValueError) as exc:
            raise UsageError(f"bad oracle descriptor: {exc}") from exc
    raise UsageError(f"cannot read a solution from {value!r}")


def show_solution(sol: Any) -> Any:
    if isinstance(sol, int):
        return sol
    if isinstance(sol, (OracleFn, HatSolution)):
        try:
            return {"digest": describe_solution(sol), "values": sample(sol)}
        except Exception as exc:  # values may be out of fuel; the digest still stands
            return {"digest": describe_solution(sol), "values": f"unavailable: {exc}"}
    return describe_solution(sol)


def _exit_for(v: Verdict) -> int:
    return {Status.VALID: EXIT_OK, Status.INVALID: EXIT_INVALID,
            Status.UNKNOWN: EXIT_UNKNOWN}[v.status]


def _emit(fmt: str, doc: dict, text: List[str]) -> None:
    if fmt == "json":
        print(json.dumps(doc, sort_keys=True))
    else:
        print("\n".join(text))


def _entry_and_reduction(args):
    try:
        entry = lookup(args.reduction)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    try:
        r = entry.make(k=args.k, n=args.n, pattern=parse_pattern(args.pattern))
    except ValueError as exc:
        raise UsageError(f"bad parameters for {entry.name}: {exc}") from exc
    return entry, r


# -- commands ----------------------------------------------------------------------

def cmd_list(args) -> int:
    problems = list(BASE_NAMES) + ["Hat"]
    reductions = [{"name": e.name, "anchor": e.anchor, "params": list(e.params),
                   "family": e.family, "summary": e.summary} for e in ENTRIES]
    if args.json:
        print(json.dumps({"problems": problems, "reductions": reductions,
                          "families": list(FAMILY_NAMES), "aliases": ALIASES}, sort_keys=True))
        return EXIT_OK
    print("problems: " + ", ".join(problems))
    print("reductions:")
    for e in ENTRIES:
        params = f" [{', '.join(e.params)}]" if e.params else ""
        print(f"  {e.name} ({e.anchor}){params}: {e.summary}")
    print("families: " + ", ".join(FAMILY_NAMES))
    return EXIT_OK


def cmd_verify(args) -> int:
    entry, r = _entry_and_reduction(args)
    fam_name = args.family or entry.family
    try:
        fam = family(fam_name, k=args.k or 2, n=args.n or 3, pattern=parse_pattern(args.pattern))
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    if fam.problem != r.source:
        raise UsageError(f"family {fam_name} makes {fam.problem}, {r.name} expects {r.source}")
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    report = verify_reduction(r, fam, args.seed, args.count, args.budget)
    lines = [report.summary()]
    for f in report.to_dict()["failures"]:
        lines.append(f"  case {f['index']} (seed {f['seed']}): {f['status']} at {f['stage']}"
                     f"{': ' + f['reason'] if 'reason' in f else ''}")
    if args.format == "json":
        print(report.to_json())
    else:
        print("\n".join(lines))
    return EXIT_OK if report.ok else EXIT_INVALID


def _load(path: str):
    try:
        return read_instance(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except FileFormatError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_solve(args) -> int:
    inst = _load(args.instance)
    if inst.certificate is None:
        v = Verdict.unknown("no certificate: the answer cannot be settled by a finite search")
        _emit(args.format, {"solution": None, "verdict": v.to_json()}, [f"unknown: {v.reason}"])
        return EXIT_UNKNOWN
    try:
        y = solve_certified(inst, args.budget)
        v = check_solution(inst, y, args.budget)
    except (CertificateError, NoSolution) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    shown = show_solution(y)
    _emit(args.format, {"solution": shown, "verdict": v.to_json()},
          [json.dumps(shown, sort_keys=True) if not isinstance(shown, int) else str(shown),
           f"verdict: {v.status.value}{' (' + v.reason + ')' if v.reason else ''}"])
    return _exit_for(v)


def cmd_run(args) -> int:
    _, r = _entry_and_reduction(args)
    u = _load(args.instance)
    if u.problem != r.source:
        raise UsageError(f"{r.name} expects {r.source}, the file holds {u.problem}")
    try:
        x = r.forward(u)
    except CertificateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    doc = {"reduction": r.name, "forward": {"problem": x.problem.describe(),
                                            "digest": json.loads(dumps(x))["payload"]}}
    text = [f"forward: {x.problem}", f"digest: {json.dumps(doc['forward']['digest'], sort_keys=True)}"]
    if args.solution is not None:
        y = parse_solution(args.solution)
    elif x.certificate is not None:
        y = solve_certified(x, args.budget)
    else:
        _emit(args.format, doc, text)
        return EXIT_OK
    try:
        v = r.back(u, y)
        verdict = check_solution(u, v, args.budget)
    except ShapeError as exc:
        raise UsageError(f"solution does not fit {x.problem}: {exc}") from exc
    except (CertificateError, NoSolution) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    doc.update({"y": show_solution(y), "back": show_solution(v), "verdict": verdict.to_json()})
    text += [f"y: {json.dumps(doc['y'], sort_keys=True)}",
             f"back: {json.dumps(doc['back'], sort_keys=True)}",
             f"verdict: {verdict.status.value}"]
    _emit(args.format, doc, text)
    return _exit_for(verdict)


def cmd_generate(args) -> int:
    try:
        fam = family(args.family, k=args.k or 2, n=args.n or 3, pattern=parse_pattern(args.pattern))
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    out = []
    for inst in fam.generate(args.seed, args.count):
        text = dumps(inst)
        try:
            loads(text)
        except FileFormatError as exc:
            raise UsageError(f"family {args.family} builds payloads that cannot be written "
                             f"to a file ({exc})") from exc
        out.append(text)
    print("\n".join(out))
    return EXIT_OK


# -- argument parsing --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weihrauch-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    ls = sub.add_parser("list", help="problems, reductions and families")
    ls.add_argument("--json", action="store_true")
    ls.set_defaults(func=cmd_list)

    def common(sp, reduction: bool):
        if reduction:
            sp.add_argument("--reduction", required=True)
        sp.add_argument("--k", type=int, default=None)
        sp.add_argument("--n", type=int, default=None)
        sp.add_argument("--pattern", default=None, help='finite graph such as "3:0-1,1-2"')
        sp.add_argument("--budget", type=int, default=None)
        sp.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="run a reduction over a seeded certified family")
    common(v, True)
    v.add_argument("--family", default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=100)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("run", help="apply a reduction to an instance file")
    common(r, True)
    r.add_argument("--instance", required=True)
    r.add_argument("--solution", default=None, help="target solution as JSON")
    r.set_defaults(func=cmd_run)

    s = sub.add_parser("solve", help="solve a certified instance file")
    common(s, False)
    s.add_argument("--instance", required=True)
    s.set_defaults(func=cmd_solve)

    g = sub.add_parser("generate", help="write seeded instances as JSON lines")
    common(g, False)
    g.add_argument("--family", required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--count", type=int, default=1)
    g.set_defaults(func=cmd_generate)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad flags already; keep --help at 0
        return int(exc.code or 0)
    try:
        if getattr(args, "budget", None) is None and hasattr(args, "budget"):
            args.budget = config.budget_from_env()
        if getattr(args, "budget", 1) < 1:
            raise UsageError("--budget must be positive")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:  # e.g. a malformed WEIHRAUCH_LAB_BUDGET
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
