"""Command-line front end.

Verbs: fpp, bases, covers, covered-by, shift, decperm, poset, verify,
render, convert.  Output is JSON on stdout unless an --ascii/--svg/--dot
render is asked for.  Exit status: 0 on success, 1 when a domain rule is
violated (bad interval, malformed grid, guard exceeded, ...), 2 on usage
errors.  The POSITROID_MAX_N environment variable relaxes the enumeration
guards.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decperm import (
    covered_by_shift,
    decperm_of,
    left_cyclic_shift,
    parse_decperm,
    positroid_of,
    right_cyclic_shift,
)
from .exceptions import DomainError
from .flagbuild import quotient_covers
from .pathgraph import bases_of
from .perm import validate_permutation
from .pipedream import PipeDream, construct_fpp, restrict
from .positroid import Positroid
from .poset import build_poset, export_dot, export_json, maximal_chain_count, missing_covers
from .render import ascii_grid, svg_grid
from .serialize import parse_any, to_json
from .verify import CHECK_NAMES, DEFAULT_SEED, run_all

__all__ = ["main"]


def _perm_arg(text: str) -> tuple[int, ...]:
    """One-line notation: digit string up to n=9, comma-separated beyond."""
    parts = text.split(",") if "," in text else list(text)
    try:
        w = tuple(int(p) for p in parts)
    except ValueError:
        raise DomainError(f"cannot read permutation {text!r}")
    validate_permutation(w)
    return w


def _int_set_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(sorted({int(p) for p in text.split(",") if p}))
    except ValueError:
        raise DomainError(f"cannot read column set {text!r}")


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _dream_from_args(args) -> PipeDream:
    """A grid from --dream FILE, --decperm STR, or a u/v positional pair."""
    if getattr(args, "dream", None):
        kind, value = parse_any(_read_json(args.dream))
        if kind == "positroid":
            return value.dream
        if kind == "dream":
            return value
        raise DomainError(f"{args.dream} holds a {kind}, not a grid")
    if getattr(args, "decperm", None):
        return positroid_of(parse_decperm(args.decperm)).dream
    if getattr(args, "u", None) and getattr(args, "v", None):
        return construct_fpp(_perm_arg(args.u), _perm_arg(args.v))
    raise DomainError("no grid given: pass U V, --dream FILE, or --decperm STR")


def _positroid_from_args(args) -> Positroid:
    if getattr(args, "decperm", None):
        return positroid_of(parse_decperm(args.decperm))
    return Positroid.from_dream(_dream_from_args(args))


def _emit(payload, args) -> None:
    if getattr(args, "ascii", False) or getattr(args, "svg", False):
        print(payload)
    else:
        print(json.dumps(to_json(payload), indent=2))


def _cmd_fpp(args) -> None:
    D = construct_fpp(_perm_arg(args.u), _perm_arg(args.v))
    if args.ascii:
        _emit(ascii_grid(D), args)
    elif args.svg:
        _emit(svg_grid(D), args)
    else:
        _emit(D, args)


def _cmd_render(args) -> None:
    D = _dream_from_args(args)
    if args.svg:
        _emit(svg_grid(D), args)
    else:
        args.ascii = True
        _emit(ascii_grid(D), args)


def _cmd_bases(args) -> None:
    D = _dream_from_args(args)
    if args.k is not None:
        D = restrict(D, args.k)
    _emit(bases_of(D), args)


def _cmd_decperm(args) -> None:
    D = _dream_from_args(args)
    if args.k is not None:
        D = restrict(D, args.k)
    _emit(decperm_of(D), args)


def _cmd_covers(args) -> None:
    P = _positroid_from_args(args)
    _emit([decperm_of(Q.dream) for Q in quotient_covers(P)], args)


def _cmd_covered_by(args) -> None:
    w = decperm_of(_positroid_from_args(args).dream)
    _emit(list(covered_by_shift(w)), args)


def _cmd_shift(args) -> None:
    w = parse_decperm(args.decperm)
    C = _int_set_arg(args.set)
    shifted = left_cyclic_shift(w, C) if args.left else right_cyclic_shift(w, C)
    _emit(shifted, args)


def _cmd_poset(args) -> None:
    poset = build_poset(args.n, flavor=args.flavor)
    if args.stats:
        _emit({"elements": len(poset.elements),
               "maxChains": maximal_chain_count(poset)}, args)
    elif args.dot:
        dashed = missing_covers(args.n) if args.flavor == "matroidal" else ()
        print(export_dot(poset, dashed=dashed))
    else:
        _emit(export_json(poset), args)


def _cmd_verify(args) -> int:
    names = args.checks or list(CHECK_NAMES)
    results = run_all(names, jobs=args.jobs, seed=args.seed)
    print(json.dumps([{"name": r.name, "ok": r.ok, "detail": r.detail,
                       "seconds": round(r.seconds, 3)} for r in results],
                     indent=2))
    for r in results:
        print(r.line, file=sys.stderr)
    return 0 if all(r.ok for r in results) else 1


def _cmd_convert(args) -> None:
    kind, value = parse_any(_read_json(args.file))
    print(json.dumps(to_json(value), indent=2))


def _add_grid_source(sub, positional: bool = True) -> None:
    if positional:
        sub.add_argument("u", nargs="?", help="lower permutation, one-line")
        sub.add_argument("v", nargs="?", help="upper permutation, one-line")
    sub.add_argument("--dream", help="JSON grid or positroid file ('-' for stdin)")
    sub.add_argument("--decperm", help="boundary string such as 2o1u")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagpipes",
        description="Pipe-dream calculus for flags of positroids.")
    verbs = parser.add_subparsers(dest="verb", required=True)

    sub = verbs.add_parser("fpp", help="build the grid of a Bruhat interval")
    sub.add_argument("u", help="lower permutation, one-line notation")
    sub.add_argument("v", help="upper permutation, one-line notation")
    sub.add_argument("--ascii", action="store_true", help="letter grid")
    sub.add_argument("--svg", action="store_true", help="SVG drawing")
    sub.set_defaults(func=_cmd_fpp)

    sub = verbs.add_parser("render", help="draw a stored grid")
    _add_grid_source(sub)
    sub.add_argument("--ascii", action="store_true", help="letter grid (default)")
    sub.add_argument("--svg", action="store_true", help="SVG drawing")
    sub.set_defaults(func=_cmd_render)

    sub = verbs.add_parser("bases", help="basis family of a grid")
    _add_grid_source(sub)
    sub.add_argument("--k", type=int, help="restrict to the first k rows")
    sub.set_defaults(func=_cmd_bases)

    sub = verbs.add_parser("decperm", help="boundary permutation of a grid")
    _add_grid_source(sub)
    sub.add_argument("--k", type=int, help="restrict to the first k rows")
    sub.set_defaults(func=_cmd_decperm)

    sub = verbs.add_parser("covers", help="elementary quotient covers")
    _add_grid_source(sub)
    sub.set_defaults(func=_cmd_covers)

    sub = verbs.add_parser("covered-by", help="elements this one covers")
    _add_grid_source(sub)
    sub.set_defaults(func=_cmd_covered_by)

    sub = verbs.add_parser("shift", help="cyclic shift of a boundary string")
    sub.add_argument("--decperm", required=True)
    sub.add_argument("--set", required=True, help="comma-separated positions")
    sub.add_argument("--left", action="store_true", help="shift leftward")
    sub.set_defaults(func=_cmd_shift)

    sub = verbs.add_parser("poset", help="the quotient order on positroids")
    sub.add_argument("n", type=int)
    sub.add_argument("--flavor", default="representable",
                     choices=("representable", "matroidal"))
    sub.add_argument("--stats", action="store_true",
                     help="element and chain counts only")
    sub.add_argument("--dot", action="store_true", help="Graphviz output")
    sub.set_defaults(func=_cmd_poset)

    sub = verbs.add_parser("verify", help="run the published-fact checks")
    sub.add_argument("checks", nargs="*", metavar="CHECK",
                     help=f"subset of: {', '.join(CHECK_NAMES)}")
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub.set_defaults(func=_cmd_verify)

    sub = verbs.add_parser("convert", help="sniff a JSON file, re-emit canonically")
    sub.add_argument("file", help="path or '-' for stdin")
    sub.set_defaults(func=_cmd_convert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return out if isinstance(out, int) else 0


if __name__ == "__main__":
    sys.exit(main())
