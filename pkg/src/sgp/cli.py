"""Command-line front end.

Exit codes: 0 success / verification passed, 1 verification failed,
2 usage or input error. Machine output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import classify as cl
from .core import NumericalSemigroup
from .enumerate import REGISTRY, EnumerationQuery, enumerate_by_genus, verify_many
from .errors import SemigroupError
from .records import SemigroupRecord


def int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def int_pair(text: str) -> tuple[int, int]:
    values = int_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}")
    return values[0], values[1]


def _emit_record(S: NumericalSemigroup, fmt: str) -> None:
    rec = SemigroupRecord.from_semigroup(S)
    if fmt == "json":
        print(rec.to_json())
        return
    for key, value in rec.to_dict().items():
        if isinstance(value, list):
            value = "{" + ", ".join(map(str, value)) + "}"
        elif isinstance(value, dict):
            value = " ".join(f"{k}={str(v).lower()}" for k, v in value.items())
        print(f"{key}: {value}")


def _semigroup_from_args(args: argparse.Namespace) -> NumericalSemigroup:
    if args.gens is not None:
        return NumericalSemigroup.from_generators(args.gens)
    if args.gaps is not None:
        return NumericalSemigroup.from_gaps(args.gaps)
    if args.delta_minus is not None:
        return cl.construct_delta_minus(*args.delta_minus)
    if args.delta_fm is not None:
        return cl.construct_delta_fm(*args.delta_fm)
    return cl.construct_half_line(args.half_line)


def cmd_info(args: argparse.Namespace) -> int:
    _emit_record(_semigroup_from_args(args), args.format)
    return 0


FAMILIES = {
    "delta-minus": (2, cl.construct_delta_minus),
    "delta-fm": (2, cl.construct_delta_fm),
    "half-line": (1, cl.construct_half_line),
}


def cmd_construct(args: argparse.Namespace) -> int:
    params = [p for chunk in args.params for p in int_list(chunk)]
    arity, build = FAMILIES[args.family]
    if len(params) != arity:
        print(f"error: {args.family} takes {arity} parameter(s), got {params}", file=sys.stderr)
        return 2
    _emit_record(build(*params), args.format)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    q = EnumerationQuery(args.max_genus, args.filter)
    stream = enumerate_by_genus(q)
    if args.out == "-":
        n = 0
        for S in stream:
            sys.stdout.write(SemigroupRecord.from_semigroup(S).to_json() + "\n")
            n += 1
        print(n, file=sys.stderr)
        return 0
    n = 0
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        for S in stream:
            fh.write(SemigroupRecord.from_semigroup(S).to_json() + "\n")
            n += 1
    print(n)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    ids = list(REGISTRY) if args.theorem == "all" else [args.theorem]
    reports = verify_many(ids, args.max_genus, jobs=args.jobs)
    for r in reports:
        if args.format == "json":
            print(json.dumps(r.to_dict(), separators=(",", ":")))
        else:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.theorem_id} max_genus={r.max_genus} "
                  f"universe={r.universe_size} violations={len(r.violations)}")
            for v in r.violations[:20]:
                print(f"  gaps={list(v.gaps)} {v.claim}: lhs={v.lhs} rhs={v.rhs}")
    if reports:
        print(f"elapsed {reports[0].elapsed:.2f}s", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgp", description="Numerical semigroup invariants and classification checks."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", help="print all invariants of one semigroup")
    spec = info.add_mutually_exclusive_group(required=True)
    spec.add_argument("--gens", type=int_list, help="generators, e.g. 3,5,7")
    spec.add_argument("--gaps", type=int_list, help="gap set, e.g. 1,2,4")
    spec.add_argument("--delta-minus", type=int_pair, metavar="M,T")
    spec.add_argument("--delta-fm", type=int_pair, metavar="F,M")
    spec.add_argument("--half-line", type=int, metavar="M")
    info.add_argument("--format", choices=("json", "text"), default="json")
    info.set_defaults(func=cmd_info)

    construct = sub.add_parser("construct", help="build a member of a named family")
    construct.add_argument("family", choices=sorted(FAMILIES))
    construct.add_argument("params", nargs="+", help="parameters, e.g. '7,4' or '7 4'")
    construct.add_argument("--format", choices=("json", "text"), default="json")
    construct.set_defaults(func=cmd_construct)

    enum = sub.add_parser("enumerate", help="write one record per semigroup of genus <= N")
    enum.add_argument("--max-genus", type=int, required=True)
    enum.add_argument("--filter", default=None,
                      help="none, symmetric, almost_symmetric, med, max_reduced_type, "
                           "half_line; join with '+' for conjunctions")
    enum.add_argument("--out", default="-", help="output path ('-' for stdout)")
    enum.set_defaults(func=cmd_enumerate)

    ver = sub.add_parser("verify", help="check a registry claim over all semigroups of genus <= N")
    ver.add_argument("theorem", help=f"one of {', '.join(REGISTRY)}, or 'all'")
    ver.add_argument("--max-genus", type=int, required=True)
    ver.add_argument("--format", choices=("json", "text"), default="text")
    ver.add_argument("--jobs", type=int, default=1)
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SemigroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
