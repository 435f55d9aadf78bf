#!/usr/bin/env python3
"""Regenerate expected/*.json from the published closed-form tables.

Each generator below transcribes one final table: dimensions, kernel
dimensions and Betti numbers as functions of the weight.  Degrees whose
chain space is empty (the degree w-1 cell at w = 1) are dropped, matching
support-by-enumeration. Run from the repository root:

    python tools/gen_expected.py
"""

import json
import os
from math import comb

OUT_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                       "expected")

# Shared by every 3-dimensional algebra: dims over degrees w-1 .. w+3.
def dims3(w):
    lo, hi = comb(w, 2), comb(w + 2, 2)
    return [lo, 3 * lo + hi, 3 * lo + 3 * hi, lo + 3 * hi, hi]


def row3(w, kernels, betti):
    degrees = list(range(w - 1, w + 4))
    dims = dims3(w)
    cells = [(m, d, k, b) for m, d, k, b in zip(degrees, dims, kernels, betti) if d > 0]
    return {
        "w": w,
        "degrees": [c[0] for c in cells],
        "dims": [c[1] for c in cells],
        "kernels": [c[2] for c in cells],
        "betti": [c[3] for c in cells],
    }


def central_rows(w_max):
    # dim[g,g] = 1 central: Betti (0, w, 3w+1, 3w+2, w+1)
    rows = []
    for w in range(1, w_max + 1):
        lo, hi = comb(w, 2), comb(w + 2, 2)
        rows.append(row3(w,
                         [lo, 2 * lo + hi, lo + 2 * hi + w, -lo + 2 * hi, w + 1],
                         [0, w, 3 * w + 1, 3 * w + 2, w + 1]))
    return rows


def noncentral_rows(w_max):
    # dim[g,g] = 1 not central: Betti (0, 1, 2, 1, 0)
    rows = []
    for w in range(1, w_max + 1):
        lo, hi = comb(w, 2), comb(w + 2, 2)
        rows.append(row3(w,
                         [lo, 2 * lo + hi, 1 + lo + 2 * hi, 1 + hi, 0],
                         [0, 1, 2, 1, 0]))
    return rows


def derived2_rows(w_max, kappa):
    # dim[g,g] = 2 with parameter alpha: kappa = 1 iff alpha = -1
    rows = [{
        "w": 0,
        "degrees": [0, 1, 2, 3],
        "dims": [1, 3, 3, 1],
        "kernels": [1, 3, 1, kappa],
        "betti": [1, 1, kappa, kappa],
    }]
    for w in range(1, w_max + 1):
        lo, hi = comb(w, 2), comb(w + 2, 2)
        rows.append(row3(w,
                         [lo, 2 * lo + hi, lo + 2 * hi, hi + kappa, kappa],
                         [0, 0, kappa, 2 * kappa, kappa]))
    return rows


def derived3_rows(w_max):
    # dim[g,g] = 3 (both real forms, any nonzero parameters): all Betti 0
    rows = []
    for w in range(1, w_max + 1):
        lo, hi = comb(w, 2), comb(w + 2, 2)
        rows.append(row3(w,
                         [lo, 2 * lo + hi, lo + 2 * hi, hi, 0],
                         [0, 0, 0, 0, 0]))
    return rows


def aff1_rows(w_max):
    rows = [{"w": 0, "degrees": [0, 1, 2], "dims": [1, 2, 1],
             "kernels": [1, 2, 0], "betti": [1, 1, 0]}]
    for w in range(1, w_max + 1):
        rows.append({"w": w, "degrees": [w, w + 1, w + 2], "dims": [1, 2, 1],
                     "kernels": [1, 1, 0], "betti": [0, 0, 0]})
    return rows


# gl(2): the experiment table gives Betti only, over the supported degrees.
GL2_ROWS = [
    {"w": 0, "degrees": [0, 1, 2, 3, 4], "betti": [1, 1, 0, 1, 1]},
    {"w": 1, "degrees": [1, 2, 3, 4, 5], "betti": [0, 0, 0, 0, 0]},
    {"w": 2, "degrees": [1, 2, 3, 4, 5, 6], "betti": [0, 2, 2, 0, 2, 2]},
    {"w": 3, "degrees": [1, 2, 3, 4, 5, 6, 7], "betti": [0, 1, 1, 0, 1, 1, 0]},
    {"w": 4, "degrees": [2, 3, 4, 5, 6, 7, 8], "betti": [0, 0, 2, 2, 0, 2, 2]},
    {"w": 5, "degrees": [2, 3, 4, 5, 6, 7, 8, 9], "betti": [0, 1, 2, 1, 1, 2, 1, 0]},
]


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    files = {
        "g3d1_central.json": {"algebra": "heis3", "params": {},
                              "rows": central_rows(15)},
        "g3d1_noncentral.json": {"algebra": "g3d1n", "params": {},
                                 "rows": noncentral_rows(15)},
        "g3d2_kappa1.json": {"algebra": "g3d2", "params": {"alpha": "-1"},
                             "rows": derived2_rows(15, 1)},
        "g3d2_kappa0.json": {"algebra": "g3d2", "params": {},
                             "rows": derived2_rows(15, 0)},
        "a1.json": {"algebra": "sl2_efh", "params": {},
                    "rows": derived3_rows(15)},
        "aff1.json": {"algebra": "aff1", "params": {},
                      "rows": aff1_rows(30)},
        "gl2.json": {"algebra": "gl2", "params": {}, "rows": GL2_ROWS},
    }
    for name, doc in files.items():
        path = os.path.join(OUT_DIR, name)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
        print(f"wrote {path} ({len(doc['rows'])} rows)")


if __name__ == "__main__":
    main()
