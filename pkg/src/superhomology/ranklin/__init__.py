"""Exact rank and kernel dimension of sparse rational matrices.

The elimination kernel exists twice: a compiled extension for speed and a
pure-Python twin used when the extension is unavailable (or when
``SUPERHOMOLOGY_PURE_PY=1`` forces it, e.g. for benchmarking).  Both run the
same fraction-free pivoting; the compiled one works in capped int64 and
falls back per matrix once entries outgrow the cap.

Everything is exact; there is no modular/CRT path (that would be the
natural extension for weights far beyond the tables computed here).
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from ..matrix import RationalMatrix
from . import _elim_py

try:  # pragma: no cover - exercised implicitly by the import
    from . import _elim_cy
except ImportError:  # pragma: no cover
    _elim_cy = None

if os.environ.get("SUPERHOMOLOGY_PURE_PY"):
    _elim_cy = None

BACKEND = "cython" if _elim_cy is not None else "python"


@dataclass
class EliminationReport:
    """What one elimination did: rank, pivots in order, fill-in, wall time."""

    rank: int
    pivots: list[tuple[int, int]] = field(default_factory=list)
    fill_in: int = 0
    elapsed: float = 0.0
    backend: str = BACKEND

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "pivots": [list(p) for p in self.pivots],
            "fill_in": self.fill_in,
            "elapsed": self.elapsed,
            "backend": self.backend,
        }


def _integer_rows(matrix: RationalMatrix) -> list[dict[int, int]]:
    """Clear each row to integers (multiply by the lcm of denominators)."""
    rows: list[dict[int, Fraction]] = matrix.row_lists()
    out: list[dict[int, int]] = []
    for row in rows:
        if not row:
            out.append({})
            continue
        mult = lcm(*(v.denominator for v in row.values()))
        out.append({c: int(v * mult) for c, v in row.items()})
    return out


def rank_report(matrix: RationalMatrix) -> EliminationReport:
    """Exact rank over the rationals with the elimination trace."""
    start = time.perf_counter()
    rows = _integer_rows(matrix)
    backend = BACKEND
    if _elim_cy is not None:
        try:
            r, pivots, fill = _elim_cy.eliminate(rows)
        except _elim_cy.NeedsBigint:
            # eliminate() consumes its rows, so hand the bigint path a fresh set
            rows = _integer_rows(matrix)
            r, pivots, fill = _elim_py.eliminate(rows)
            backend = "python (int64 overflow fallback)"
    else:
        r, pivots, fill = _elim_py.eliminate(rows)
    return EliminationReport(rank=r, pivots=pivots, fill_in=fill,
                             elapsed=time.perf_counter() - start, backend=backend)


def rank(matrix: RationalMatrix) -> int:
    return rank_report(matrix).rank


def kernel_dim(matrix: RationalMatrix) -> int:
    """Nullity: columns minus rank."""
    return matrix.cols - rank(matrix)
