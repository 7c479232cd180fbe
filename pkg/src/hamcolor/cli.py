"""
Command-line front end.

Subcommands:
  params     admissibility report for (q, b, c); exit 0 settled, 2 inadmissible,
             3 open gap or no known construction
  construct  build a coloring from a recipe and write it to a file
  verify     check a coloring file against a quotient matrix; exit 0 pass, 1 fail
  wdist      weight distribution from the quotient-matrix recurrence
  table      regenerate an admissibility table, optionally diffing a reference
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import analysis, catalog
from .bounds import lower_bound
from .fileio import read_coloring, write_coloring
from .hamming import Shape
from .recipes import build, parse_recipe, predict, recipe_to_text


def _load_matrix(path: str) -> np.ndarray:
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                rows.append([int(x) for x in line.split()])
    return np.array(rows, dtype=np.int64)


def cmd_params(args) -> int:
    lb = lower_bound(args.q, args.b, args.c)
    if lb.inadmissible:
        print(f"({args.b},{args.c}) over q={args.q}: inadmissible "
              f"({lb.inadmissible_reason})")
        return 2
    res = catalog.plan(args.q, args.b, args.c, args.depth)
    print(f"({args.b},{args.c}) over q={args.q}")
    for name, val in lb.reasons:
        print(f"  bound {name}: n >= {val}")
    print(f"  LB = {lb.value}")
    for name in catalog.construction_columns(args.q):
        ent = res.columns.get(name)
        if ent is None:
            print(f"  {name}: --")
        else:
            print(f"  {name}: n = {ent.n}  {recipe_to_text(ent.recipe)}")
    if res.ub is None:
        print("  UB = ?  (no known construction)")
        print("  status: ???")
        return 3
    print(f"  UB = {res.ub.n}")
    print(f"  status: {res.status or 'settled'}")
    return 0 if res.status == "" else 3


def cmd_construct(args) -> int:
    text = args.recipe
    if text is None:
        with open(args.recipe_file) as fh:
            text = fh.read()
    rec = parse_recipe(text)
    pred = predict(rec)
    col = build(rec)
    print(f"built {col} from {recipe_to_text(rec)}")
    if pred.S is not None:
        print(f"predicted quotient:\n{pred.S}")
    if args.out:
        write_coloring(args.out, col, mode=args.mode)
        print(f"wrote {args.out} [{args.mode}]")
    return 0


def cmd_verify(args) -> int:
    col = read_coloring(args.file)
    if args.matrix:
        expected = _load_matrix(args.matrix)
    elif args.b is not None and args.c is not None:
        deg = col.shape.degree
        expected = np.array([[deg - args.b, args.b], [args.c, deg - args.c]])
    elif col.quotient is not None:
        expected = col.quotient
    else:
        print("no expected quotient: give --matrix or --b/--c", file=sys.stderr)
        return 1
    if args.mode == "full":
        rep = analysis.verify_full(col, expected)
    elif args.mode == "sample":
        rep = analysis.verify_sampled(col, expected, samples=args.samples,
                                      seed=args.seed)
    else:
        rep = analysis.verify(col, expected, samples=args.samples, seed=args.seed)
    print(rep.summary())
    return 0 if rep.ok else 1


def cmd_wdist(args) -> int:
    if args.matrix:
        S = _load_matrix(args.matrix)
    else:
        deg = args.n * (args.q - 1)
        S = np.array([[deg - args.b, args.b], [args.c, deg - args.c]])
    shape = Shape(args.n, args.q)
    try:
        W = analysis.weight_distribution_recurrence(S, shape, args.start)
    except analysis.InfeasibleDistribution as e:
        print(f"infeasible: {e}")
        return 1
    for l, row in enumerate(W, start=1):
        print(f"color {l}: {row}")
    return 0


def cmd_table(args) -> int:
    rows = catalog.build_table(args.q, args.max_bc, args.depth)
    print(catalog.format_table(rows, args.format), end="")
    if args.fixture:
        with open(args.fixture) as fh:
            diffs = catalog.compare_with_reference(rows, fh.read())
        if diffs:
            for d in diffs:
                print(f"DIFF {d}", file=sys.stderr)
            return 1
        print(f"reference match: {len(rows)} rows", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="hamcolor",
                                 description="perfect 2-colorings of Hamming graphs")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("params", help="admissibility report for (q,b,c)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--depth", type=int, default=catalog.DEFAULT_DEPTH)
    p.set_defaults(fn=cmd_params)

    p = sub.add_parser("construct", help="build a coloring from a recipe")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--recipe", help="recipe s-expression")
    g.add_argument("--recipe-file")
    p.add_argument("--out")
    p.add_argument("--mode", choices=["RECIPE", "DENSE", "DENSE-RLE"],
                   default="RECIPE")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", help="verify a coloring file")
    p.add_argument("file")
    p.add_argument("--matrix", help="file with the expected quotient matrix")
    p.add_argument("--b", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--mode", choices=["auto", "full", "sample"], default="auto")
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("wdist", help="weight distribution by recurrence")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--matrix")
    p.add_argument("--start", type=int, default=1, help="color of the origin")
    p.set_defaults(fn=cmd_wdist)

    p = sub.add_parser("table", help="regenerate an admissibility table")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-bc", type=int, required=True)
    p.add_argument("--format", choices=["text", "tsv"], default="text")
    p.add_argument("--fixture", help="reference TSV to diff against")
    p.add_argument("--depth", type=int, default=catalog.DEFAULT_DEPTH)
    p.set_defaults(fn=cmd_table)

    args = ap.parse_args(argv)
    return args.fn(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
