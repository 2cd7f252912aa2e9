"""Command-line front end.

Exit codes: 0 success / true verdict / valid trace; 1 mismatches, invalid
trace or failed criterion; 2 usage, parse or precondition error; 3 false
verdict from ``decide``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

from .core import COUNTABLE, Alphabet, IndexSet, SemigroupKind
from .errors import GenShiftError
from .literals import parse_config
from .relations import DEFAULT_BUDGET, RelationKind, decide, equivalence_harness
from .topology import Window
from .verification import run_all
from .witnesses import (
    DEFAULT_BOUND, collapse_trace, witness_L_violation, witness_P_H_blocks,
    witness_P_H_countable, witness_P_S, witness_Q_infinite,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_FALSE = 0, 1, 2, 3
MAX_DEPTH = 16

CONSTRUCTIONS = (
    "ConstantMapWitness", "PairingDoubleShift", "MatchingWitness",
    "BlockPartitionWitness", "SwapRefutation", "CollapsePair",
)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _gamma(text: str) -> IndexSet:
    if text == "countable":
        return COUNTABLE
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"--gamma must be a positive integer or 'countable', got {text!r}")
    if n < 1:
        raise UsageError("--gamma must be at least 1")
    return IndexSet(n)


def _alphabet(text: str) -> Alphabet:
    try:
        return Alphabet(tuple(s.strip() for s in text.split(",")))
    except ValueError as exc:
        raise UsageError(f"--alphabet: {exc}")


def _check_relation(args):
    if args.relation is RelationKind.L and args.semigroup is SemigroupKind.S:
        raise UsageError("relation L is only defined for semigroup H")


def _window(args) -> Window:
    if args.depth < 1:
        raise UsageError("--depth must be at least 1")
    if args.depth > MAX_DEPTH and not args.allow_deep:
        raise UsageError(f"--depth above {MAX_DEPTH} needs --allow-deep")
    return Window.prefix(args.depth)


def _emit(args, text: str):
    """Write ``text`` to ``--out`` atomically, or to stdout."""
    if not args.out or args.out == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(args.out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".genshift-")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, args.out)
    except BaseException:
        os.unlink(tmp)
        raise


def _json(record) -> str:
    return json.dumps(record, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    gamma = _gamma(args.gamma)
    if not gamma.is_finite:
        raise UsageError("enumerate needs a finite --gamma")
    _check_relation(args)
    report = equivalence_harness(_alphabet(args.alphabet), gamma.size, args.relation,
                                 args.semigroup, args.budget)
    if args.format == "csv":
        _emit(args, _csv(("x", "y", "oracle", "decider", "match"),
                         [(x, y, o, d, o == d) for x, y, o, d in report.rows]))
    else:
        _emit(args, _json(report.to_record()))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_decide(args) -> int:
    alphabet, gamma = _alphabet(args.alphabet), _gamma(args.gamma)
    _check_relation(args)
    x = parse_config(args.x, alphabet, gamma)
    y = parse_config(args.y, alphabet, gamma)
    verdict = decide(args.relation, args.semigroup, x, y)
    record = {"relation": str(args.relation), "semigroup": str(args.semigroup),
              "x": str(x), "y": str(y), **verdict.to_record()}
    if args.format == "csv":
        _emit(args, _csv(list(record), [list(record.values())]))
    else:
        _emit(args, _json(record))
    return EXIT_OK if verdict.value else EXIT_FALSE


def cmd_witness(args) -> int:
    alphabet, gamma = _alphabet(args.alphabet), _gamma(args.gamma)
    name = args.construction
    x = parse_config(args.x, alphabet, gamma)
    y = parse_config(args.y, alphabet, gamma)
    p = alphabet.check(args.p) if args.p else alphabet.symbols[0]
    q = alphabet.check(args.q) if args.q else alphabet.symbols[1]
    if name == "ConstantMapWitness":
        beta = args.beta
        if beta is None:
            hint = decide(RelationKind.P, SemigroupKind.S, x, y).witness_hint
            if hint is None:
                raise UsageError("x and y agree nowhere; no constant map works")
            beta = hint
        trace = witness_P_S(x, y, beta)
    elif name == "CollapsePair":
        if not args.u:
            raise UsageError("CollapsePair needs --u")
        trace = collapse_trace(x, y, parse_config(args.u, alphabet, gamma), p, q)
    elif not gamma.is_finite:
        window = _window(args)
        if name == "PairingDoubleShift":
            trace = witness_Q_infinite(x, y, p, window, args.bound)
        elif name == "MatchingWitness":
            trace = witness_P_H_countable(x, y, window, args.bound)
        elif name == "BlockPartitionWitness":
            trace = witness_P_H_blocks(x, y, window, args.bound)
        else:
            trace = witness_L_violation(x, y, p, q, window)
    else:
        raise UsageError(f"{name} needs --gamma countable")
    if args.format == "csv":
        _emit(args, _csv(("label", "window", "stabilization_index", "limit", "bound"), [
            (r["label"], " ".join(map(str, r["window"])), r["stabilization_index"],
             " ".join(r["limit"]), r["bound"])
            for r in trace.to_record()["reports"]
        ]))
    else:
        _emit(args, _json(trace.to_record()))
    return EXIT_OK if trace.valid else EXIT_FAIL


def cmd_verify(args) -> int:
    def progress(res):
        print(f"criterion {res.number}: {'pass' if res.passed else 'FAIL'} in {res.seconds:.2f}s",
              file=sys.stderr)

    results = run_all(args.seed, args.budget, progress)
    if args.format == "json":
        text = _json([{"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
                      for r in results])
    elif args.format == "csv":
        text = _csv(("number", "name", "passed", "detail"),
                    [(r.number, r.name, r.passed, r.detail) for r in results])
    else:
        passed = sum(r.passed for r in results)
        text = "".join(r.line() + "\n" for r in results)
        text += f"{passed}/{len(results)} criteria passed (seed {args.seed})\n"
    _emit(args, text)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", default="a,b", help="comma-separated symbols (default a,b)")
    common.add_argument("--gamma", default="2", help="finite size n, or 'countable'")
    common.add_argument("--relation", type=RelationKind, choices=list(RelationKind), default=RelationKind.P)
    common.add_argument("--semigroup", type=SemigroupKind, choices=list(SemigroupKind), default=SemigroupKind.S)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="max shift applications per harness run")
    common.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="convergence bound")
    common.add_argument("--depth", type=int, default=8, help="window depth")
    common.add_argument("--allow-deep", action="store_true", help=f"permit --depth above {MAX_DEPTH}")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--out", default=None, help="output path (default stdout)")

    parser = argparse.ArgumentParser(
        prog="genshift",
        description="Proximal relations of generalized shifts: enumerate, decide, witness, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("enumerate", parents=[common], help="oracle vs decider on every pair of X^Γ")

    p = sub.add_parser("decide", parents=[common], help="decide one pair")
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("witness", parents=[common], help="build and check a witness trace")
    p.add_argument("construction", choices=CONSTRUCTIONS)
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--u", help="third point for CollapsePair")
    p.add_argument("--p", help="symbol p (default: first alphabet symbol)")
    p.add_argument("--q", help="symbol q (default: second alphabet symbol)")
    p.add_argument("--beta", type=int, help="agreement index for ConstantMapWitness")

    sub.add_parser("verify", parents=[common], help="run the acceptance grid")
    return parser


COMMANDS = {
    "enumerate": cmd_enumerate, "decide": cmd_decide,
    "witness": cmd_witness, "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GenShiftError) as exc:
        print(f"genshift {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
