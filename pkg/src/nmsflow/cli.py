"""Command line interface.

Subcommands:
  classify   classify one invariant quadruple l1 m1 l2 m2
  homeo      decide whether two manifold expressions are homeomorphic
  h1         first homology of a manifold expression
  enumerate  group admissible quadruples up to a bound by target manifold
  selfcheck  run the internal consistency battery

Exit codes: 0 success, 1 expression parse error, 2 inadmissible
quadruple, 3 selfcheck failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classifier import (
    InvalidFlowInvariant,
    classify_quadruple,
    enumerate_invariants,
)
from .expressions import ParseError, parse_manifold
from .homology import h1
from .manifolds import homeomorphic, is_prime
from .selfcheck import run_selfcheck


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nmsflow",
        description="Classify 3-manifolds carrying nonsingular Morse-Smale "
                    "flows with a single twisted saddle orbit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify an invariant quadruple")
    p.add_argument("l1", type=int)
    p.add_argument("m1", type=int)
    p.add_argument("l2", type=int)
    p.add_argument("m2", type=int)
    p.add_argument("--json", action="store_true", help="emit one JSON object")

    p = sub.add_parser("homeo", help="compare two manifold expressions")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("h1", help="first homology of a manifold expression")
    p.add_argument("expr")

    p = sub.add_parser(
        "enumerate",
        help="group admissible quadruples by homeomorphism type")
    p.add_argument("--bound", type=int, default=4,
                   help="max |l_i|, |m_i| to enumerate (default 4)")

    p = sub.add_parser("selfcheck", help="run the consistency battery")
    p.add_argument("--bound", type=int, default=6,
                   help="enumeration bound for the battery (default 6)")
    return parser


def _cmd_classify(args) -> int:
    try:
        res = classify_quadruple(args.l1, args.m1, args.l2, args.m2)
    except InvalidFlowInvariant as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    group = h1(res.manifold)
    prime = is_prime(res.manifold)
    if args.json:
        inter = res.intermediate_seifert
        payload = {
            "input": [args.l1, args.m1, args.l2, args.m2],
            "kind": res.invariant.kind.value,
            "case": res.case,
            "canonical": str(res.manifold),
            "prime": prime,
            "h1": {"free_rank": group.free_rank,
                   "torsion": list(group.torsion)},
            "intermediate_seifert":
                None if inter is None else [list(f) for f in inter],
        }
        print(json.dumps(payload, sort_keys=True))
        return 0
    print(f"case {res.case}: {res.manifold}")
    print(f"h1: {group}")
    print(f"prime: {'true' if prime else 'false'}")
    if res.intermediate_seifert is not None:
        rendered = ",".join(f"({a},{b})" for a, b in res.intermediate_seifert)
        print(f"intermediate seifert: {rendered}")
    return 0


def _cmd_homeo(args) -> int:
    try:
        left = parse_manifold(args.left)
        right = parse_manifold(args.right)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print("true" if homeomorphic(left, right) else "false")
    return 0


def _cmd_h1(args) -> int:
    try:
        manifold = parse_manifold(args.expr)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(h1(manifold))
    return 0


def _cmd_enumerate(args) -> int:
    for rep, members in enumerate_invariants(args.bound):
        example = members[0].invariant.quadruple()
        print(f"{rep}  h1={h1(rep)}  count={len(members)}  e.g. {example}")
    return 0


def _cmd_selfcheck(args) -> int:
    return run_selfcheck(args.bound)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {
        "classify": _cmd_classify,
        "homeo": _cmd_homeo,
        "h1": _cmd_h1,
        "enumerate": _cmd_enumerate,
        "selfcheck": _cmd_selfcheck,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
