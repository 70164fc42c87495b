"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 structural hypothesis not
met, 3 a theorem check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import complexes
from .flagdeg import degree_sequence, f_vector, flag_f, sequence_json
from .poset import (
    PosetError,
    PreconditionError,
    RankedPoset,
    facets_isomorphic_as_lattices,
    format_poset,
    is_pure,
    is_simple_facet,
    is_simplicial_complex,
    is_simplicial_poset,
    parse_poset,
    truncate,
)
from .seqcore import Composition, compare, compositions_of
from .verify import CHECKS, NOT_MET, run_check

log = logging.getLogger("facetflag")

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_input(path: str | Path, fmt: str | None = None) -> RankedPoset:
    """Read a facet file or a poset file; the format defaults from the suffix."""
    path = Path(path)
    if fmt is None:
        fmt = "poset" if path.suffix == ".poset" else "facets"
    text = path.read_text()
    if not text.strip():
        log.warning("%s is empty; using the empty poset", path)
    if fmt == "poset":
        return parse_poset(text)
    if fmt == "facets":
        return complexes.facets_to_poset(complexes.parse_facets(text))
    raise UsageError(f"unknown input format {fmt!r}")


def _composition(text: str) -> Composition:
    try:
        return Composition.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _load(args) -> RankedPoset:
    p = parse_input(args.input, args.format)
    if args.truncate is not None:
        p = truncate(p, args.truncate)
    return p


def _require_rank(p: RankedPoset, *cs: Composition) -> None:
    for c in cs:
        if c.total != p.max_rank:
            raise UsageError(f"composition {c} sums to {c.total}, but the poset has rank {p.max_rank}")


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def cmd_degseq(args) -> int:
    p = _load(args)
    cs = compositions_of(p.max_rank) if args.all else args.composition
    if not cs:
        raise UsageError("give --composition or --all")
    _require_rank(p, *cs)
    for c in cs:
        d = degree_sequence(p, c)
        _emit(args, sequence_json(c, d), f"d^{c} = {d}")
    return EXIT_OK


def cmd_compare(args) -> int:
    p = _load(args)
    _require_rank(p, args.sigma, args.pi)
    a, b = degree_sequence(p, args.sigma), degree_sequence(p, args.pi)
    rel = compare(a, b)
    payload = {
        "sigma": sequence_json(args.sigma, a),
        "pi": sequence_json(args.pi, b),
        "relation": rel.verdict.value,
        "first_violation": rel.first_violation,
    }
    _emit(args, payload, rel.verdict.value)
    return EXIT_OK


def cmd_fvector(args) -> int:
    p = _load(args)
    f = f_vector(p).as_tuple()
    _emit(args, {"f_vector": list(f)}, "(" + ",".join(map(str, f)) + ")")
    return EXIT_OK


def cmd_flagf(args) -> int:
    p = _load(args)
    n = flag_f(p, args.ranks)
    _emit(args, {"ranks": list(args.ranks), "count": n}, str(n))
    return EXIT_OK


def cmd_verify(args) -> int:
    p = _load(args)
    names = list(CHECKS) if args.all or not args.check else args.check
    if args.sigma:
        _require_rank(p, *args.sigma)
    reports = [run_check(name, p, args.sigma or None) for name in names]
    for r in reports:
        if args.json:
            for line in r.json_lines():
                print(line)
        else:
            print(r)
    if any(r.failed for r in reports):
        return EXIT_FAILED
    # an explicitly requested theorem whose hypotheses fail is a validation error
    if not args.all and any(r.hypothesis == NOT_MET and r.asserts_theorem for r in reports):
        return EXIT_HYPOTHESIS
    return EXIT_OK


def cmd_validate(args) -> int:
    p = _load(args)
    props = {
        "elements": len(p),
        "max_rank": p.max_rank,
        "f_vector": list(f_vector(p).as_tuple()),
        "pure": is_pure(p),
        "simplicial_poset": is_simplicial_poset(p),
        "simplicial_complex": is_simplicial_complex(p),
        "facets_simple": all(is_simple_facet(p, x) for x in p.maximal_elements()),
        "facets_isomorphic": facets_isomorphic_as_lattices(p),
    }
    _emit(args, props, "\n".join(f"{k}: {v}" for k, v in props.items()))
    return EXIT_OK


def cmd_gen(args) -> int:
    kind, params = args.kind, args.params
    try:
        if kind == "complete":
            out = complexes.format_facets(complexes.gen_complete_complex(*_n_ints(params, 2)))
        elif kind == "simplex":
            out = complexes.format_facets(complexes.gen_simplex(*_n_ints(params, 1)))
        elif kind == "random":
            n, k, m = _n_ints(params, 3)
            out = complexes.format_facets(complexes.gen_random_pure(n, k, m, args.seed))
        elif kind == "cross":
            out = format_poset(complexes.gen_cross_polytope_solid(*_n_ints(params, 1)))
        elif kind == "cube":
            out = format_poset(complexes.gen_hypercube_solid(*_n_ints(params, 1)))
        elif kind == "grid":
            if len(params) != 1:
                raise UsageError("grid takes one argument such as 2,1,1")
            out = format_poset(complexes.gen_cubical_grid(_ints(params[0])))
        else:
            raise UsageError(f"unknown generator {kind!r}")
    except argparse.ArgumentTypeError as e:
        raise UsageError(str(e)) from None
    sys.stdout.write(out)
    return EXIT_OK


def _n_ints(params: list[str], n: int) -> tuple[int, ...]:
    if len(params) != n:
        raise UsageError(f"expected {n} integer argument(s), got {len(params)}")
    try:
        return tuple(int(x) for x in params)
    except ValueError:
        raise UsageError(f"expected integers, got {params}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="facetflag", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(sp):
        sp.add_argument("--input", "-i", required=True, help="facet file or .poset file")
        sp.add_argument("--format", choices=("facets", "poset"), help="default: by file suffix")
        sp.add_argument("--truncate", type=int, metavar="R", help="drop elements above rank R first")
        sp.add_argument("--json", action="store_true", help="JSON output")
        return sp

    sp = with_input(sub.add_parser("degseq", help="face-to-flag degree sequences"))
    sp.add_argument("--composition", "-c", type=_composition, action="append", default=[])
    sp.add_argument("--all", action="store_true", help="every composition of the rank")
    sp.set_defaults(func=cmd_degseq)

    sp = with_input(sub.add_parser("compare", help="majorization relation between two sequences"))
    sp.add_argument("--sigma", type=_composition, required=True)
    sp.add_argument("--pi", type=_composition, required=True)
    sp.set_defaults(func=cmd_compare)

    sp = with_input(sub.add_parser("fvector", help="faces per rank"))
    sp.set_defaults(func=cmd_fvector)

    sp = with_input(sub.add_parser("flagf", help="one flag f-vector entry"))
    sp.add_argument("--ranks", type=_ints, required=True, help="strictly increasing, e.g. 1,4")
    sp.set_defaults(func=cmd_flagf)

    sp = with_input(sub.add_parser("verify", help="run theorem checks"))
    sp.add_argument("--all", action="store_true", help="run every check; unmet hypotheses are notes")
    sp.add_argument("--check", choices=sorted(CHECKS), action="append", default=[])
    sp.add_argument("--sigma", type=_composition, action="append", default=[],
                    help="restrict to these starting compositions (repeatable)")
    sp.set_defaults(func=cmd_verify)

    sp = with_input(sub.add_parser("validate", help="structural properties"))
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("gen", help="emit a canonical complex or poset")
    sp.add_argument("kind", choices=("complete", "simplex", "random", "cross", "cube", "grid"))
    sp.add_argument("params", nargs="*")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, PosetError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as e:
        print(f"hypothesis not met: {e}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
