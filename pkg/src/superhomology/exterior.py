"""The graded exterior algebra of a Lie algebra and its multivector bracket.

Two sign regimes live here and must not be confused:

* Inside a fixed level k, elements of the k-fold exterior power of the
  algebra are classical alternating wedges of the z-letters; a basis element
  is a strictly increasing index tuple and reordering a word of z-letters
  costs the sign of the permutation.

* Across levels, a level-k element carries super-degree (grade) k - 1, and
  the chain complex multiplies words of whole generators with the quotient
  rule X ^ Y = -(-1)^{xy} Y ^ X on grades x, y.  Even-grade generators
  square to zero; odd-grade generators commute and may repeat.

The bracket extending [.,.] from letters to multivectors sends a level-p and
a level-q element to level p + q - 1 via the double sum

    sum_{i,j} (-1)^{i+j} [a_i, b_j] ^ a[i] ^ b[j]

over the letters of decomposable arguments (a[i] omits the i-th letter).
It makes the direct sum of all levels a Z-graded Lie superalgebra.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .algebra import AlgebraError, StructureConstants
from .rational import format_rational


class WedgeBasisElement:
    """A canonical basis wedge z_{i1} ^ ... ^ z_{ik} with i1 < ... < ik."""

    __slots__ = ("indices",)

    def __init__(self, indices: Sequence[int]):
        indices = tuple(indices)
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise AlgebraError(f"indices must be strictly increasing: {indices}")
        self.indices = indices

    @property
    def level(self) -> int:
        return len(self.indices)

    @property
    def grade(self) -> int:
        return len(self.indices) - 1

    @property
    def parity(self) -> int:
        return (len(self.indices) - 1) % 2

    def __eq__(self, other):
        return isinstance(other, WedgeBasisElement) and self.indices == other.indices

    def __hash__(self):
        return hash(self.indices)

    def __repr__(self):
        return "z" + "^z".join(str(i) for i in self.indices)


def wedge_basis(sc: StructureConstants, k: int) -> list[WedgeBasisElement]:
    """The C(n, k) canonical basis elements of the level-k exterior power, lex order."""
    n = sc.dim
    if not (1 <= k <= n):
        raise AlgebraError(f"level {k} out of range 1..{n}")
    return [WedgeBasisElement(c) for c in combinations(range(1, n + 1), k)]


def sort_indices(seq: Iterable[int]) -> tuple[int, tuple[int, ...]] | None:
    """Sort a z-letter word ascending; return (permutation sign, tuple) or None on repeat."""
    out = list(seq)
    sign = 1
    # insertion sort counting inversions; words here have <= a few letters
    for i in range(1, len(out)):
        x = out[i]
        j = i - 1
        while j >= 0 and out[j] > x:
            out[j + 1] = out[j]
            sign = -sign
            j -= 1
        out[j + 1] = x
        if j >= 0 and out[j] == x:
            return None
    return sign, tuple(out)


class Multivector:
    """A rational combination of canonical wedges, homogeneous in level."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs=None):
        self.level = level
        self.coeffs: dict[tuple[int, ...], Fraction] = {}
        if coeffs:
            for idx, c in dict(coeffs).items():
                c = Fraction(c)
                if c:
                    if len(idx) != level:
                        raise AlgebraError(f"index tuple {idx} is not level {level}")
                    self.coeffs[tuple(idx)] = c

    @classmethod
    def basis(cls, indices: Sequence[int]) -> "Multivector":
        indices = tuple(indices)
        return cls(len(indices), {indices: Fraction(1)})

    @classmethod
    def letter(cls, i: int) -> "Multivector":
        return cls(1, {(i,): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def scaled(self, c) -> "Multivector":
        c = Fraction(c)
        return Multivector(self.level, {k: v * c for k, v in self.coeffs.items()} if c else {})

    def __add__(self, other: "Multivector") -> "Multivector":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.level != other.level:
            raise AlgebraError("cannot add multivectors of different levels")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, Fraction(0)) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Multivector(self.level, out)

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __eq__(self, other):
        return (isinstance(other, Multivector)
                and self.coeffs == other.coeffs
                and (self.level == other.level or not self.coeffs))

    def wedge(self, other: "Multivector") -> "Multivector":
        """Classical exterior product (both factors are words of z-letters)."""
        out: dict[tuple[int, ...], Fraction] = {}
        for s, cs in self.coeffs.items():
            for t, ct in other.coeffs.items():
                norm = sort_indices(s + t)
                if norm is None:
                    continue
                sign, idx = norm
                v = out.get(idx, Fraction(0)) + sign * cs * ct
                if v:
                    out[idx] = v
                else:
                    out.pop(idx, None)
        return Multivector(self.level + other.level, out)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for idx in sorted(self.coeffs):
            c = self.coeffs[idx]
            name = "z" + "^z".join(map(str, idx))
            parts.append(f"{format_rational(c)}*{name}")
        return " + ".join(parts)


def schouten(sc: StructureConstants, a: Multivector, b: Multivector) -> Multivector:
    """Bracket of two multivectors; level p, q in gives level p + q - 1 out.

    Bilinear extension of the double-sum formula on decomposables; the inner
    [a_i, b_j] is the Lie bracket of the algebra.  Level-0 arguments are not
    part of the bracket's domain.
    """
    if a.level < 1 or b.level < 1:
        raise AlgebraError("bracket needs level >= 1 arguments")
    out = Multivector(a.level + b.level - 1)
    acc: dict[tuple[int, ...], Fraction] = {}
    for s, cs in a.coeffs.items():
        for t, ct in b.coeffs.items():
            cst = cs * ct
            for ipos, zi in enumerate(s):
                rest_s = s[:ipos] + s[ipos + 1:]
                for jpos, zj in enumerate(t):
                    sign = -1 if (ipos + jpos) % 2 else 1  # (-1)^{(i+1)+(j+1)}
                    vec = sc.bracket(zi, zj)
                    if not any(vec):
                        continue
                    rest = rest_s + t[:jpos] + t[jpos + 1:]
                    for k, ck in enumerate(vec):
                        if not ck:
                            continue
                        norm = sort_indices((k + 1,) + rest)
                        if norm is None:
                            continue
                        psign, idx = norm
                        v = acc.get(idx, Fraction(0)) + sign * psign * ck * cst
                        if v:
                            acc[idx] = v
                        else:
                            acc.pop(idx, None)
    out.coeffs = acc
    return out


class Generator:
    """One generator of the superalgebra: a named basis element of some level."""

    __slots__ = ("index", "name", "level", "grade", "expansion")

    def __init__(self, index: int, name: str, level: int, expansion: Multivector):
        self.index = index
        self.name = name
        self.level = level
        self.grade = level - 1
        self.expansion = expansion

    @property
    def parity(self) -> int:
        return self.grade % 2

    def __repr__(self):
        return f"Generator({self.name})"


def _invert(columns: list[dict[int, Fraction]], size: int) -> list[list[Fraction]]:
    """Dense Gauss-Jordan inverse of a small exact matrix given by columns."""
    aug = [[Fraction(0)] * size + [Fraction(0)] * size for _ in range(size)]
    for c, col in enumerate(columns):
        for r, v in col.items():
            aug[r][c] = v
    for r in range(size):
        aug[r][size + r] = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col]), None)
        if pivot is None:
            raise AlgebraError("alias basis is not invertible")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


class GeneratorSystem:
    """All generators of the superalgebra built on a Lie algebra.

    Levels with odd k give even-grade generators, levels with even k give
    odd-grade ones.  The canonical order is: even-grade generators by
    (level, index tuple), then odd-grade generators the same way.  An alias
    basis may replace the canonical basis of a level by an invertible set of
    named combinations (the printed tables use per-case level-2 bases).
    """

    def __init__(self, sc: StructureConstants,
                 level_bases: dict[int, list[tuple[str, Multivector]]] | None = None):
        self.sc = sc
        n = sc.dim
        level_bases = level_bases or {}
        per_level: dict[int, list[tuple[str, Multivector]]] = {}
        for k in range(1, n + 1):
            if k in level_bases:
                basis = list(level_bases[k])
                if len(basis) != comb(n, k):
                    raise AlgebraError(
                        f"alias basis at level {k} has {len(basis)} elements, want {comb(n, k)}")
                for _, mv in basis:
                    if mv.level != k:
                        raise AlgebraError(f"alias element at level {k} has level {mv.level}")
                per_level[k] = basis
            else:
                per_level[k] = [("", Multivector.basis(e.indices))
                                for e in wedge_basis(sc, k)]

        self.generators: list[Generator] = []
        self.level_to_gens: dict[int, list[int]] = {}
        even_count = odd_count = 0
        for parity in (0, 1):
            for k in range(1, n + 1):
                if (k - 1) % 2 != parity:
                    continue
                ids = []
                for name, mv in per_level[k]:
                    idx = len(self.generators)
                    if not name:
                        if parity == 0:
                            even_count += 1
                            name = f"z{even_count}"
                        else:
                            odd_count += 1
                            name = f"u{odd_count}"
                    else:
                        if parity == 0:
                            even_count += 1
                        else:
                            odd_count += 1
                    self.generators.append(Generator(idx, name, k, mv))
                    ids.append(idx)
                self.level_to_gens[k] = ids
        self.even_ids = [g.index for g in self.generators if g.parity == 0]
        self.odd_ids = [g.index for g in self.generators if g.parity == 1]
        self.even_pos = {gid: i for i, gid in enumerate(self.even_ids)}
        self.odd_pos = {gid: i for i, gid in enumerate(self.odd_ids)}
        self.grades = tuple(g.grade for g in self.generators)
        self.count = len(self.generators)

        # Inverse change of basis per level: canonical coords -> generator coords.
        self._expand_inverse: dict[int, list[list[Fraction]]] = {}
        self._canon_index: dict[int, dict[tuple[int, ...], int]] = {}
        for k in range(1, n + 1):
            order = [e.indices for e in wedge_basis(sc, k)]
            self._canon_index[k] = {idx: r for r, idx in enumerate(order)}
            if k in level_bases:
                cols = []
                for gid in self.level_to_gens[k]:
                    mv = self.generators[gid].expansion
                    cols.append({self._canon_index[k][idx]: c for idx, c in mv.coeffs.items()})
                self._expand_inverse[k] = _invert(cols, len(order))
        self._pair_cache: dict[tuple[int, int], tuple[tuple[Fraction, int], ...]] = {}

    @property
    def dim(self) -> int:
        return self.sc.dim

    def generator_named(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise AlgebraError(f"no generator named {name!r}")

    def to_generator_coords(self, mv: Multivector) -> dict[int, Fraction]:
        """Express a multivector in the active basis of its level."""
        if mv.is_zero():
            return {}
        k = mv.level
        if k > self.sc.dim:
            return {}
        gens = self.level_to_gens[k]
        if k not in self._expand_inverse:
            return {gens[self._canon_index[k][idx]]: c for idx, c in mv.coeffs.items()}
        inv = self._expand_inverse[k]
        out: dict[int, Fraction] = {}
        for idx, c in mv.coeffs.items():
            r = self._canon_index[k][idx]
            for pos, gid in enumerate(gens):
                v = inv[pos][r] * c
                if v:
                    out[gid] = out.get(gid, Fraction(0)) + v
        return {g: v for g, v in out.items() if v}

    def pair_bracket(self, gi: int, gj: int) -> tuple[tuple[Fraction, int], ...]:
        """[generator, generator] as a combination of generators, memoized.

        Integral coefficients are stored as int (equal to and cheaper than
        the corresponding Fraction in the boundary inner loop).
        """
        key = (gi, gj)
        cached = self._pair_cache.get(key)
        if cached is not None:
            return cached
        a = self.generators[gi].expansion
        b = self.generators[gj].expansion
        result = schouten(self.sc, a, b)
        if result.level > self.sc.dim:
            coords = {}
        else:
            coords = self.to_generator_coords(result)
        value = tuple(sorted(
            ((c.numerator if c.denominator == 1 else c, g) for g, c in coords.items()),
            key=lambda t: t[1]))
        self._pair_cache[key] = value
        return value


# ---------------------------------------------------------------------------
# Word normalization in the super exterior algebra of the generators.
# ---------------------------------------------------------------------------

def normalize_word(gs: GeneratorSystem, word: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    """Sort a word of generator ids into canonical order with the super sign.

    Each adjacent swap of letters with grades x, y contributes -(-1)^{xy}:
    any swap involving an even-grade letter flips the sign, odd-odd swaps do
    not.  Returns None (the word is zero) when an even-grade letter repeats;
    normalizing an already canonical word returns sign +1.
    """
    out = list(word)
    grades = gs.grades
    sign = 1
    for i in range(1, len(out)):
        x = out[i]
        xg = grades[x]
        j = i - 1
        while j >= 0 and out[j] > x:
            if (xg & 1) == 0 or (grades[out[j]] & 1) == 0:
                sign = -sign
            out[j + 1] = out[j]
            j -= 1
        out[j + 1] = x
    for a, b in zip(out, out[1:]):
        if a == b and (grades[a] & 1) == 0:
            return None
    return sign, tuple(out)


# ---------------------------------------------------------------------------
# Level-2 bases used by the printed multiplication tables.
# ---------------------------------------------------------------------------

def _mv2(pairs: dict[tuple[int, int], Fraction]) -> Multivector:
    return Multivector(2, pairs)


def paper_level2_basis(sc: StructureConstants) -> list[tuple[str, Multivector]]:
    """The per-case 2-vector basis each printed table fixes; keyed by catalog name.

    The scalings for the two-parameter family are read off the bound
    structure constants, so file-loaded copies with the same name work too.
    """
    name = sc.name
    one = Fraction(1)
    if name == "aff1":
        return [("u1", _mv2({(1, 2): one}))]
    if name == "heis3":
        return [("u1", _mv2({(2, 3): one})),
                ("u2", _mv2({(1, 3): -one})),
                ("u3", _mv2({(1, 2): one}))]
    if name == "g3d1n":
        return [("u1", _mv2({(1, 2): one})),
                ("u2", _mv2({(2, 3): one})),
                ("u3", _mv2({(1, 3): -one}))]
    if name == "g3d2":
        return [("u1", _mv2({(1, 2): one})),
                ("u2", _mv2({(1, 3): one})),
                ("u3", _mv2({(2, 3): one}))]
    if name == "g3d3":
        alpha = sc.bracket(2, 3)[0]
        beta = -sc.bracket(1, 3)[1]
        if not alpha or not beta:
            raise AlgebraError("g3d3 printed basis needs nonzero alpha and beta")
        return [("u1", _mv2({(2, 3): 1 / alpha})),
                ("u2", _mv2({(1, 3): Fraction(-1) / beta})),
                ("u3", _mv2({(1, 2): one}))]
    if name == "sl2_efh":
        return [("u1", _mv2({(1, 3): Fraction(1, 2)})),
                ("u2", _mv2({(2, 3): Fraction(-1, 2)})),
                ("u3", _mv2({(1, 2): one}))]
    raise AlgebraError(f"no printed-table basis for algebra {name!r}")


def generator_system(sc: StructureConstants, basis: str = "canonical") -> GeneratorSystem:
    """Build a generator system; ``basis`` is ``canonical`` or ``paper``."""
    if basis == "canonical":
        return GeneratorSystem(sc)
    if basis == "paper":
        return GeneratorSystem(sc, {2: paper_level2_basis(sc)})
    raise AlgebraError(f"unknown basis choice {basis!r} (want canonical or paper)")


# ---------------------------------------------------------------------------
# Pairwise bracket tables in the layout of the printed multiplication tables.
# ---------------------------------------------------------------------------

def bracket_table(sc: StructureConstants, gs: GeneratorSystem) -> dict[tuple[str, str], dict[str, Fraction]]:
    """Complete pairwise table {(row name, col name): {gen name: coeff}}."""
    table = {}
    for gi in gs.generators:
        for gj in gs.generators:
            coords = gs.pair_bracket(gi.index, gj.index)
            table[(gi.name, gj.name)] = {gs.generators[g].name: c for c, g in coords}
    return table


def _entry_text(coords: dict[str, Fraction]) -> str:
    if not coords:
        return "0"
    parts = []
    for name, c in coords.items():
        if c == 1:
            parts.append(name)
        elif c == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{format_rational(c)}·{name}")
    return " + ".join(parts).replace("+ -", "- ")


def render_bracket_table(gs: GeneratorSystem) -> str:
    """Two text matrices: grade-0 rows x all generators, odd rows x (odd + higher even)."""
    table = bracket_table(gs.sc, gs)
    names = [g.name for g in gs.generators]
    zero_rows = [gs.generators[i].name for i in gs.even_ids if gs.generators[i].grade == 0]
    odd_names = [gs.generators[i].name for i in gs.odd_ids]
    high_even = [gs.generators[i].name for i in gs.even_ids if gs.generators[i].grade > 0]

    def block(rows, cols):
        grid = [[""] + cols]
        for r in rows:
            grid.append([r] + [_entry_text(table[(r, c)]) for c in cols])
        widths = [max(len(row[i]) for row in grid) for i in range(len(cols) + 1)]
        lines = []
        for ri, row in enumerate(grid):
            lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
            if ri == 0:
                lines.append("-" * (sum(widths) + 2 * len(widths) - 2))
        return "\n".join(lines)

    out = [block(zero_rows, names)]
    if odd_names:
        out.append("")
        out.append(block(odd_names, odd_names + high_even))
    return "\n".join(out) + "\n"
