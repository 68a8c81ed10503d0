"""Command-line interface: ``scrollrees <subcommand> ...``.

Exit codes: 0 success or all checks pass, 1 a check failed or a budget was
exhausted, 2 usage error.  Output is deterministic; JSON goes to stdout unless
``--out`` is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import complex as cx
from .errors import BudgetExceeded, InvalidPartition, ScrollReesError
from .groebner import DEFAULT_PAIR_BUDGET, is_groebner
from .hilbert import hs_of_ideal
from .order import GradedLex, order_context
from .poly import Polynomial, parse_poly, plain_ring
from .relations import FAMILIES, generators, to_x_presentation
from .scroll import build_matrix_M, build_matrix_X, parse_partition, partitions_up_to
from . import verify as vf

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUITES = ("lm", "syzygies", "kernel", "minimality", "fiber-gb", "rees-gb", "initial-complex", "complex",
          "hilbert-harness", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text: str):
    try:
        return parse_partition(text)
    except InvalidPartition as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="scrollrees", description="Rees and fiber relations of rational normal scrolls.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add_partition(sp, required=True):
        sp.add_argument("-n", "--partition", type=_partition, required=required,
                        help="block degrees, comma separated, e.g. 1,2,2,3")

    def add_out(sp):
        sp.add_argument("--out", help="write output to this file instead of stdout")

    g = sub.add_parser("gen", help="print generators (or the matrices)")
    add_partition(g)
    g.add_argument("--target", choices=("fiber", "rees"), default="rees")
    g.add_argument("--family", choices=FAMILIES, action="append",
                   help="restrict to these families (repeatable)")
    g.add_argument("--presentation", choices=("m", "x"), default="m",
                   help="m: T[a,b] on the rearranged matrix; x: Y[a,b] on the catalecticant matrix")
    g.add_argument("--matrix", choices=("M", "X"), help="print this matrix instead of generators")
    g.add_argument("--emit", choices=("text", "json"), default="text")
    add_out(g)

    b = sub.add_parser("gb", help="check that the generators form a Groebner basis")
    add_partition(b)
    b.add_argument("--target", choices=("fiber", "rees"), default="rees")
    b.add_argument("--budget", type=_positive, default=DEFAULT_PAIR_BUDGET, help="maximum S-pairs to reduce")
    b.add_argument("--modulus", type=_positive, help="work modulo this prime instead of over Q")
    add_out(b)

    c = sub.add_parser("complex", help="the initial complex")
    csub = c.add_subparsers(dest="action", metavar="ACTION", parser_class=_Parser)
    csub.required = True
    f = csub.add_parser("facets", help="enumerate or count facets")
    add_partition(f)
    f.add_argument("--method", choices=("clique", "tree", "formula"), default="clique")
    f.add_argument("--emit", choices=("json", "count"), default="json")
    f.add_argument("--budget", type=_positive, help="maximum number of facets to emit")
    add_out(f)
    nf = csub.add_parser("nonfaces", help="list the minimal non-faces")
    add_partition(nf)
    add_out(nf)

    h = sub.add_parser("hilbert", help="Hilbert series numerator")
    h.add_argument("source", help="harness case (G4, M5, L5:3 with a 1-based order index) or a JSON file "
                   "{\"variables\": [...], \"generators\": [...]}, '-' for stdin")
    h.add_argument("--budget", type=_positive, default=DEFAULT_PAIR_BUDGET, help="maximum S-pairs during completion")
    add_out(h)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--depth", choices=("fast", "slow"), default="fast")
    v.add_argument("-n", "--partition", type=_partition, action="append", default=[],
                   help="scroll to check (repeatable)")
    v.add_argument("--up-to", type=_positive, metavar="C", help="also check every scroll with c <= C")
    v.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    v.add_argument("--timing", action="store_true", help="include elapsed time in the report")
    add_out(v)

    o = sub.add_parser("order-dump", help="print the variable order or the degree table")
    add_partition(o)
    o.add_argument("--emit", choices=("text", "json"), default="text")
    add_out(o)
    return p


def _emit(text: str, out: Optional[str]):
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def cmd_gen(args) -> int:
    spec = args.partition
    if args.matrix:
        m = build_matrix_M(spec) if args.matrix == "M" else build_matrix_X(spec)
        _emit(m.dump_text() if args.emit == "text" else m.to_json(), args.out)
        return EXIT_OK
    gens = generators(spec, args.target)
    if args.presentation == "x":
        gens = to_x_presentation(spec, gens)
    items = [g for g in gens.all() if not args.family or g.family in args.family]
    if args.emit == "text":
        _emit("\n".join(f"{g.label} = {g.poly.text()}" for g in items), args.out)
    else:
        data = {
            "partition": list(spec.n),
            "target": args.target,
            "presentation": args.presentation,
            "generators": [
                {"family": g.family, "indices": list(g.indices), "text": g.poly.text(), "terms": g.poly.to_json_obj()}
                for g in items
            ],
        }
        _emit(_dump(data), args.out)
    return EXIT_OK


def cmd_gb(args) -> int:
    spec = args.partition
    gens = generators(spec, args.target)
    items = gens.all()
    res = is_groebner(order_context(spec), gens.polys(), [g.family for g in items],
                      modulus=args.modulus, budget=args.budget)
    data = res.to_json_obj([g.label for g in items])
    _emit(_dump(data), args.out)
    return EXIT_OK if res.is_gb else EXIT_FAIL


def cmd_complex(args) -> int:
    spec = args.partition
    if args.action == "nonfaces":
        cross, barred = cx.minimal_nonfaces(spec)
        data = {"crossing": [[list(u), list(v)] for u, v in cross], "barred": [[list(u), list(v)] for u, v in barred]}
        _emit(_dump(data), args.out)
        return EXIT_OK
    if args.method == "formula":
        if args.emit != "count":
            raise UsageError("argument --method: 'formula' only supports --emit count")
        _emit(str(cx.facet_count_formula(spec)), args.out)
        return EXIT_OK
    facets = cx.facets_clique(spec) if args.method == "clique" else cx.facets_tree(spec)
    if args.budget is not None and len(facets) > args.budget:
        raise BudgetExceeded(f"{len(facets)} facets exceed the budget of {args.budget}")
    if args.emit == "count":
        _emit(str(len(facets)), args.out)
    else:
        _emit(json.dumps(cx.facets_json(facets)), args.out)
    return EXIT_OK


def _load_ideal(source: str):
    if source == "-":
        data = json.load(sys.stdin)
    else:
        with open(source) as fh:
            data = json.load(fh)
    if not isinstance(data, dict) or "variables" not in data or "generators" not in data:
        raise UsageError("hilbert input must be an object with 'variables' and 'generators'")
    ring = plain_ring(data["variables"])
    polys = [parse_poly(ring, g) if isinstance(g, str) else Polynomial.from_json_obj(ring, g)
             for g in data["generators"]]
    return ring, [p for p in polys if not p.is_zero()]


def cmd_hilbert(args) -> int:
    src = args.source
    if src[:1] in ("G", "M", "L") and len(src) >= 2 and src[1] in "45":
        try:
            hs = vf.harness_case(src)
        except ValueError as exc:
            raise UsageError(f"argument source: {exc}") from None
    else:
        try:
            ring, polys = _load_ideal(src)
        except OSError as exc:
            raise UsageError(f"argument source: {exc}") from None
        hs = hs_of_ideal(GradedLex(ring), polys, ring.nvars, budget=args.budget)
    _emit(json.dumps(list(hs.numerator)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    specs = list(args.partition)
    if args.up_to:
        specs.extend(s for s in partitions_up_to(args.up_to) if s not in specs)
    if args.suite == "hilbert-harness":
        rep = vf.run_hilbert_harness()
    elif args.suite == "all":
        if not specs:
            raise UsageError("argument -n/--partition: required for --suite all (or give --up-to)")
        rep = vf.verify_all(specs, depth=args.depth, jobs=args.jobs)
    else:
        if not specs:
            raise UsageError(f"argument -n/--partition: required for --suite {args.suite}")
        rep = vf.verify_all(specs, depth=args.depth, jobs=args.jobs, harness=False, suites=[args.suite])
        rep.suite = args.suite
    _emit(rep.to_json(timing=args.timing), args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_order_dump(args) -> int:
    ctx = order_context(args.partition)
    _emit(ctx.dump_variables() if args.emit == "text" else ctx.dump_degrees(), args.out)
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "gb": cmd_gb,
    "complex": cmd_complex,
    "hilbert": cmd_hilbert,
    "verify": cmd_verify,
    "order-dump": cmd_order_dump,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"scrollrees: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"scrollrees: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ScrollReesError as exc:
        print(f"scrollrees: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
