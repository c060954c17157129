"""Command-line interface.

Subcommands: bounds, solve, candidates, classify, kpp, verify.
Exit codes: 0 success, 1 usage error, 2 catalog parse/validation error,
3 incomplete catalog in exhaustive mode.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import (DomainError, lemma21_bounds, theoremA_bounds,
                     thm311_bound, thm322_bound)
from .catalog import CatalogError, IncompleteCatalogError, parse_catalog
from .classify import (classify_kpp, classify_one_class, classify_two_coprime,
                       emit_table, group_count)
from .fracsolve import (candidate_orders_one_class, candidate_orders_two_coprime,
                        unit_fraction_solutions)
from .verify import verify_catalog

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CATALOG = 2
EXIT_INCOMPLETE = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; this tool reserves 2
    for catalog errors, so usage failures are remapped to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser():
    parser = _Parser(prog="landau",
                     description="Finite-group classification by counted "
                                 "conjugacy classes in a normal subgroup.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bounds", help="order bounds for a given index")
    p.add_argument("--index", type=int, required=True, metavar="N",
                   help="index of the normal subgroup")
    p.add_argument("--noncentral", type=int, required=True, metavar="S",
                   help="number of non-central classes in the subgroup")

    p = sub.add_parser("solve", help="unit-fraction decompositions of 1/N")
    p.add_argument("--index", type=int, required=True, metavar="N")
    p.add_argument("--parts", type=int, required=True, metavar="P")

    p = sub.add_parser("candidates", help="candidate group orders")
    p.add_argument("--mode", choices=("one-class", "two-coprime"), required=True)
    p.add_argument("--index", type=int, required=True, metavar="N")

    p = sub.add_parser("classify", help="scan a catalog for qualifying pairs")
    p.add_argument("--mode", choices=("one-class", "two-coprime"), required=True)
    p.add_argument("--index", type=int, required=True, metavar="N")
    p.add_argument("--catalog", required=True, metavar="FILE")
    p.add_argument("--exhaustive", action="store_true",
                   help="fail unless the catalog covers the full order bound")
    p.add_argument("--format", choices=("csv", "md", "json"), default="csv")
    p.add_argument("--out", metavar="PATH", help="write the table here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, metavar="J",
                   help="parallel workers for the catalog scan")

    p = sub.add_parser("kpp", help="groups by prime-power-order class count")
    p.add_argument("--max-k", type=int, required=True, metavar="K")
    p.add_argument("--catalog", required=True, metavar="FILE")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--format", choices=("csv", "md", "json"), default="csv")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("verify", help="run the whole property suite over a catalog")
    p.add_argument("--catalog", required=True, metavar="FILE")
    p.add_argument("--quiet", action="store_true", help="suppress per-entry progress")

    return parser


def _load_catalog(path):
    try:
        return parse_catalog(path)
    except IncompleteCatalogError:
        raise
    except CatalogError as exc:
        print(f"landau: catalog error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_CATALOG)
    except OSError as exc:
        print(f"landau: cannot read catalog: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_CATALOG)


def _cmd_bounds(args):
    reports = [theoremA_bounds(args.index, args.noncentral)]
    if args.noncentral == 1:
        reports.append(thm311_bound(args.index))
    if args.noncentral == 2:
        reports.append(thm322_bound(args.index))
    payload = {
        "index": args.index,
        "noncentral": args.noncentral,
        "bounds": [
            {"source": r.source, "bound_G": r.bound_G, "bound_N": r.bound_N,
             "strict": r.strict}
            for r in reports
        ],
        "part_caps": lemma21_bounds(args.index, args.noncentral),
    }
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def _cmd_solve(args):
    solutions = unit_fraction_solutions(args.index, args.parts)
    for sol in solutions:
        print(" + ".join(f"1/{p}" for p in sol.parts) + f" = 1/{sol.n}")
    print(f"{len(solutions)} solution(s)", file=sys.stderr)
    return EXIT_OK


def _cmd_candidates(args):
    fn = (candidate_orders_one_class if args.mode == "one-class"
          else candidate_orders_two_coprime)
    for cand in fn(args.index):
        witnesses = ", ".join(str(w) for w in cand.witnesses)
        print(f"{cand.c}\t{witnesses}")
    return EXIT_OK


def _cmd_classify(args):
    catalog = _load_catalog(args.catalog)
    fn = classify_one_class if args.mode == "one-class" else classify_two_coprime
    rows = fn(catalog, args.index, exhaustive=args.exhaustive, jobs=args.jobs)
    text = emit_table(rows, format=args.format, destination=args.out)
    if args.out is None:
        sys.stdout.write(text)
    print(f"{group_count(rows)} group(s), {len(rows)} row(s)", file=sys.stderr)
    return EXIT_OK


def _cmd_kpp(args):
    catalog = _load_catalog(args.catalog)
    rows = classify_kpp(catalog, args.max_k, exhaustive=args.exhaustive)
    text = emit_table(rows, format=args.format, destination=args.out)
    if args.out is None:
        sys.stdout.write(text)
    print(f"{len(rows)} row(s)", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args):
    catalog = _load_catalog(args.catalog)
    progress = None if args.quiet else lambda msg: print(msg, file=sys.stderr)
    violations = verify_catalog(catalog, progress=progress)
    for violation in violations:
        print(f"VIOLATION: {violation}")
    print(f"{len(catalog.entries)} entries checked, {len(violations)} violation(s)")
    return EXIT_OK if not violations else EXIT_CATALOG


_COMMANDS = {
    "bounds": _cmd_bounds,
    "solve": _cmd_solve,
    "candidates": _cmd_candidates,
    "classify": _cmd_classify,
    "kpp": _cmd_kpp,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"landau: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IncompleteCatalogError as exc:
        print(f"landau: incomplete catalog: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
