"""Command-line interface.

Subcommands: ``catalog``, ``check-jacobi``, ``bracket-table``, ``basis``,
``table``, ``verify``.  Exit codes: 0 success, 1 verification difference,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import (AlgebraError, catalog_get, catalog_names, catalog_spec,
                      check_jacobi, load_algebra)
from .chain import boundary_matrix, chain_basis, format_monomial
from .exterior import generator_system, render_bracket_table
from .homology import betti_table, load_expected, verify_table
from .rational import format_rational, parse_rational


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superhomology",
        description="Weight-graded super homology tables of low-dimensional Lie algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p):
        p.add_argument("--algebra", help="catalog name (see `catalog`)")
        p.add_argument("--file", help="path to an algebra JSON document")
        p.add_argument("--param", action="append", default=[], metavar="NAME=P/Q",
                       help="bind a parameter (repeatable)")
        p.add_argument("--basis", choices=("canonical", "paper"), default="canonical",
                       help="level-2 basis: canonical wedge order or the printed-table basis")

    sub.add_parser("catalog", help="list catalog algebras and their parameters")

    p = sub.add_parser("check-jacobi", help="verify the Jacobi identity")
    add_source(p)

    p = sub.add_parser("bracket-table", help="print the multiplication tables")
    add_source(p)

    p = sub.add_parser("basis", help="list the monomial basis of one chain space")
    add_source(p)
    p.add_argument("--m", type=int, required=True, help="degree")
    p.add_argument("--w", type=int, required=True, help="weight")

    p = sub.add_parser("table", help="compute the Betti table up to a weight")
    add_source(p)
    p.add_argument("--wmax", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "md"), default="md")
    p.add_argument("--dump-matrix", metavar="DIR",
                   help="write every boundary matrix as 'rows cols' + 'r c p/q' triplets")
    p.add_argument("--report", metavar="PATH",
                   help="write elimination reports (rank, pivots, fill-in, time) as JSON")
    p.add_argument("--sweep", metavar="NAME=V1,V2,...",
                   help="run the table per parameter value and report differing cells")

    p = sub.add_parser("verify", help="compare a computed table against an expected file")
    add_source(p)
    p.add_argument("--wmax", type=int, required=True)
    p.add_argument("--expected", required=True, metavar="PATH")

    return parser


def _parse_params(items) -> dict:
    out = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise AlgebraError(f"bad --param {item!r}; want NAME=P/Q")
        out[name.strip()] = parse_rational(value)
    return out


def _load_source(args, params):
    if bool(args.algebra) == bool(args.file):
        raise AlgebraError("exactly one of --algebra or --file is required")
    if args.algebra:
        return catalog_get(args.algebra, params)
    return load_algebra(args.file, params)


def _cmd_catalog(out) -> int:
    for name in catalog_names():
        spec = catalog_spec(name)
        desc = f"{name}  dim={spec.dim}"
        if spec.params:
            constrained = {p for p, kind in spec.constraints if kind == "nonzero"}
            parts = [p + (" != 0" if p in constrained else "") for p in spec.params]
            desc += "  params: " + ", ".join(parts)
        out.write(desc + "\n")
    return 0


def _cmd_table(args, out) -> int:
    params = _parse_params(args.param)
    if args.sweep:
        return _cmd_sweep(args, params, out)
    sc = _load_source(args, params)
    gs = generator_system(sc, args.basis)
    reports: dict = {}
    sink = reports if args.report else None
    table = betti_table(gs, args.wmax, params=params, report_sink=sink)
    if args.dump_matrix:
        os.makedirs(args.dump_matrix, exist_ok=True)
        for row in table.rows:
            # record the basis ordering the matrix files refer to
            basis_path = os.path.join(args.dump_matrix, f"basis_w{row.w}.txt")
            with open(basis_path, "w", encoding="utf-8") as fh:
                for m in row.degrees:
                    for i, mono in enumerate(chain_basis(gs, m, row.w)):
                        fh.write(f"m={m} {i} {format_monomial(gs, mono)}\n")
            for m in row.degrees:
                if m < 1:
                    continue
                path = os.path.join(args.dump_matrix, f"boundary_w{row.w}_m{m}.txt")
                with open(path, "w", encoding="utf-8") as fh:
                    boundary_matrix(gs, m, row.w).dump(fh)
    if args.report:
        payload = [{"w": w, "m": m, **rep.to_dict()}
                   for (w, m), rep in sorted(reports.items())]
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    if args.format == "json":
        out.write(table.to_json())
    elif args.format == "csv":
        out.write(table.to_csv())
    else:
        out.write(table.to_markdown())
    return 0


def _cmd_sweep(args, params, out) -> int:
    name, sep, values = args.sweep.partition("=")
    if not sep or not values:
        raise AlgebraError(f"bad --sweep {args.sweep!r}; want NAME=V1,V2,...")
    name = name.strip()
    bindings = [parse_rational(v) for v in values.split(",")]
    tables = []
    for value in bindings:
        swept = dict(params)
        swept[name] = value
        sc = _load_source(args, swept)
        gs = generator_system(sc, args.basis)
        tables.append(betti_table(gs, args.wmax, params=swept))
    labels = [format_rational(v) for v in bindings]
    differing = []
    for w in range(args.wmax + 1):
        rows = [t.row(w) for t in tables]
        degrees = sorted({m for r in rows if r for m in r.degrees})
        for m in degrees:
            cells = [r.cell(m) if r else (0, 0, 0) for r in rows]
            for pos, field in enumerate(("space_dim", "kernel_dim", "betti")):
                vals = [c[pos] for c in cells]
                if len(set(vals)) > 1:
                    differing.append((w, m, field, vals))
    out.write(f"sweep {name} over {', '.join(labels)} "
              f"(algebra {tables[0].algebra}, w <= {args.wmax})\n")
    if not differing:
        out.write("all cells identical across the sweep\n")
        return 0
    out.write(f"{len(differing)} differing cells:\n")
    for w, m, field, vals in differing:
        pairs = ", ".join(f"{name}={lab}: {v}" for lab, v in zip(labels, vals))
        out.write(f"  w={w} degree={m} {field}: {pairs}\n")
    return 0


def run_cli(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "catalog":
            return _cmd_catalog(out)

        if args.command == "check-jacobi":
            params = _parse_params(args.param)
            if args.file:
                sc = load_algebra(args.file, params, check=False)
            else:
                sc = _load_source(args, params)
            violations = check_jacobi(sc)
            if not violations:
                out.write(f"{sc.name or 'algebra'}: Jacobi identity holds\n")
                return 0
            for triple, residual in violations:
                res = ", ".join(format_rational(c) for c in residual)
                out.write(f"violation at {triple}: residual ({res})\n")
            return 1

        if args.command == "bracket-table":
            params = _parse_params(args.param)
            sc = _load_source(args, params)
            gs = generator_system(sc, args.basis)
            out.write(render_bracket_table(gs))
            return 0

        if args.command == "basis":
            params = _parse_params(args.param)
            sc = _load_source(args, params)
            gs = generator_system(sc, args.basis)
            monos = chain_basis(gs, args.m, args.w)
            out.write(f"dim C_{args.m}^(w={args.w}) = {len(monos)}\n")
            for mono in monos:
                out.write(format_monomial(gs, mono) + "\n")
            return 0

        if args.command == "table":
            return _cmd_table(args, out)

        if args.command == "verify":
            params = _parse_params(args.param)
            sc = _load_source(args, params)
            gs = generator_system(sc, args.basis)
            table = betti_table(gs, args.wmax, params=params)
            diff = verify_table(table, load_expected(args.expected))
            out.write(diff.render())
            return 0 if diff.ok else 1

    except (AlgebraError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
