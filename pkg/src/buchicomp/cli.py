"""Command-line surface.

Exit codes: 0 success / check passed, 1 check failed (the counterexample is
printed as ``stem;loop``), 2 usage or parse error, 3 algorithm precondition
violated (e.g. a fa-only construction on an infinitely ambiguous automaton).
"""

from __future__ import annotations

import argparse
import sys

from . import lang
from .core import classify, ldbw_partition
from .dot import to_dot
from .errors import AutomatonError, ParseError
from .fileformat import parse, write
from .ldbwcomp import ldbw_codet_dag
from .rundag import lasso_dag
from .words import LassoWord


def _load(path: str, auto_complete: bool = True):
    with open(path, encoding="utf-8") as handle:
        return parse(handle.read(), auto_complete=auto_complete)


def _word(stem: str, loop: str) -> LassoWord:
    def letters(chunk):
        chunk = chunk.strip()
        if not chunk:
            return ()
        return tuple(chunk.split()) if " " in chunk else tuple(chunk)

    return LassoWord(letters(stem), letters(loop))


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="buchicomp",
                                     description="Buchi automaton complementation toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="print classification flags")
    p.add_argument("file")

    p = sub.add_parser("complement", help="write a complement automaton")
    p.add_argument("file")
    p.add_argument("--algo", default="auto",
                   choices=["rkc", "rkc-fa", "slc-fa", "nsbc", "auto"])
    p.add_argument("-o", "--output")

    p = sub.add_parser("contains", help="check L(A) subset of L(B)")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--algo", default="auto",
                   choices=["rkc", "rkc-fa", "slc-fa", "nsbc", "auto"])

    p = sub.add_parser("member", help="test lasso-word membership")
    p.add_argument("file")
    p.add_argument("--stem", default="")
    p.add_argument("--loop", required=True)

    p = sub.add_parser("check-complement", help="oracle-check a construction")
    p.add_argument("file")
    p.add_argument("--algo", default="auto",
                   choices=["rkc", "rkc-fa", "slc-fa", "nsbc", "auto"])
    p.add_argument("--max-stem", type=int, default=3)
    p.add_argument("--max-loop", type=int, default=3)

    p = sub.add_parser("dag", help="render a run DAG as DOT")
    p.add_argument("file")
    p.add_argument("--stem", default="")
    p.add_argument("--loop", required=True)
    p.add_argument("--mode", default="reduced", choices=["full", "reduced", "ldbw"])
    p.add_argument("--dot")

    p = sub.add_parser("random", help="generate a random automaton document")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--shape", default="any", choices=["any", "ldbw", "fanbw"])
    p.add_argument("--alphabet-size", type=int, default=2)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--acc-fraction", type=float, default=0.3)
    p.add_argument("-o", "--output")
    return parser


def _run(args) -> int:
    if args.command == "classify":
        report = classify(_load(args.file))
        for flag in ("complete", "deterministic", "reverse_deterministic",
                     "limit_deterministic", "finitely_ambiguous"):
            print(f"{flag}: {str(getattr(report, flag)).lower()}")
        if report.ldbw_partition is not None:
            part = report.ldbw_partition
            print("q_n:", " ".join(str(q) for q in sorted(part.q_n)))
            print("q_d:", " ".join(str(q) for q in sorted(part.q_d)))
        return 0

    if args.command == "complement":
        comp = lang.build_complement(_load(args.file), args.algo)
        _emit(write(comp), args.output)
        return 0

    if args.command == "contains":
        report = lang.contains(_load(args.file_a), _load(args.file_b), args.algo)
        if report.passed:
            print("contained")
            return 0
        print(f"counterexample: {report.counterexample}")
        return 1

    if args.command == "member":
        result = lang.member(_load(args.file), _word(args.stem, args.loop))
        print(str(result).lower())
        return 0

    if args.command == "check-complement":
        a = _load(args.file)
        comp = lang.build_complement(a, args.algo)
        report = lang.complement_check(a, comp, args.max_stem, args.max_loop)
        if report.passed:
            print(f"ok: {report.lassos_tested} lassos checked")
            return 0
        print(f"counterexample: {report.counterexample}")
        return 1

    if args.command == "dag":
        a = _load(args.file)
        w = _word(args.stem, args.loop)
        if args.mode == "ldbw":
            dag = ldbw_codet_dag(a, ldbw_partition(a), w)
        else:
            dag = lasso_dag(a, w, args.mode)
        _emit(to_dot(dag), args.dot)
        return 0

    if args.command == "random":
        a = lang.random_nbw(args.n, args.alphabet_size, args.density,
                            args.acc_fraction, args.seed, args.shape)
        _emit(write(a), args.output)
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def cli_main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _run(args)
    except (ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AutomatonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(cli_main())
