#!/usr/bin/env python3
"""Benchmark: compiled elimination kernel vs the pure-Python fallback.

Runs the same integer rows through both kernels on a few boundary matrices
large enough for elimination to matter; both must agree on rank, pivots and
fill.  Usage: python benchmarks/bench_rank.py [--quick]
"""

import argparse
import sys
import time

from superhomology import boundary_matrix, catalog_get, generator_system
from superhomology.ranklin import _elim_py, _integer_rows

try:
    from superhomology.ranklin import _elim_cy
except ImportError:
    _elim_cy = None


CASES = [
    # (label, algebra, bindings, degree, weight)
    ("heis3 w=18 m=19", "heis3", {}, 19, 18),
    ("heis3 w=25 m=26", "heis3", {}, 26, 25),
    ("sl2_efh w=16 m=17", "sl2_efh", {}, 17, 16),
    ("g3d3(2,3) w=20 m=21", "g3d3", {"alpha": "2", "beta": "3"}, 21, 20),
    ("gl2 w=5 m=6", "gl2", {}, 6, 5),
    ("gl2 w=5 m=7", "gl2", {}, 7, 5),
]

QUICK_CASES = CASES[:1] + CASES[4:5]


def time_kernel(eliminate, rows, repeats):
    best = None
    result = None
    for _ in range(repeats):
        fresh = [dict(r) for r in rows]
        t0 = time.perf_counter()
        result = eliminate(fresh)
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main(argv=None):
    args = argparse.ArgumentParser(description=__doc__)
    args.add_argument("--quick", action="store_true", help="two small cases only")
    args.add_argument("--repeats", type=int, default=3)
    opts = args.parse_args(argv)

    if _elim_cy is None:
        print("compiled kernel not built; showing the pure-Python path only",
              file=sys.stderr)

    cases = QUICK_CASES if opts.quick else CASES
    header = f"{'case':<22} {'shape':>12} {'nnz':>8} {'rank':>6} " \
             f"{'python':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, name, binds, m, w in cases:
        gs = generator_system(catalog_get(name, binds))
        t0 = time.perf_counter()
        matrix = boundary_matrix(gs, m, w)
        build = time.perf_counter() - t0
        rows = _integer_rows(matrix)
        t_py, res_py = time_kernel(_elim_py.eliminate, rows, opts.repeats)
        if _elim_cy is not None:
            try:
                t_cy, res_cy = time_kernel(_elim_cy.eliminate, rows, opts.repeats)
                assert res_py == res_cy, f"kernels disagree on {label}"
                speedup = f"{t_py / t_cy:7.1f}x"
                cy_text = f"{t_cy:9.3f}s"
            except _elim_cy.NeedsBigint:
                # entries outgrew the int64 cap mid-elimination; production
                # code reruns such matrices on the bigint path
                speedup, cy_text = "-", "(bigint)"
        else:
            speedup, cy_text = "-", "-"
        shape = f"{matrix.rows}x{matrix.cols}"
        print(f"{label:<22} {shape:>12} {matrix.nnz():>8} {res_py[0]:>6} "
              f"{t_py:9.3f}s {cy_text:>10} {speedup:>8}   (build {build:.2f}s)")


if __name__ == "__main__":
    main()
