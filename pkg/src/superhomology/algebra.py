"""Finite-dimensional Lie algebras given by structure constants.

A Lie algebra on generators z_1..z_n is stored as the exact rational
coefficients c_{ij}^k of [z_i, z_j] = sum_k c_{ij}^k z_k for i < j; the
bracket for j > i is the negation of the stored value.  Generator indices
are 1-based throughout the public surface.

The module also carries the catalog of named algebras used by the homology
tables (2- and 3-dimensional families plus gl(2)), parameter substitution for
families like the one with [z_2, z_3] = alpha * z_2, and the Jacobi-identity
check that guards every construction.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Iterable, Mapping

from .rational import format_rational, parse_rational


class AlgebraError(ValueError):
    """Bad algebra description: parse failure, bad index, unbound parameter."""


class JacobiError(AlgebraError):
    """The bracket violates the Jacobi identity.

    ``violations`` is a list of ((i, j, k), residual) with the residual the
    exact coefficient vector of [[z_i,z_j],z_k] + cyclic.
    """

    def __init__(self, violations):
        self.violations = violations
        triples = ", ".join(str(t) for t, _ in violations[:5])
        more = "" if len(violations) <= 5 else f" (+{len(violations) - 5} more)"
        super().__init__(f"Jacobi identity fails at triples {triples}{more}")


class CatalogError(AlgebraError):
    """Unknown catalog name or invalid parameter binding."""


class StructureConstants:
    """Bracket coefficients of a Lie algebra on a fixed basis.

    ``entries`` maps (i, j) with 1 <= i < j <= dim to a tuple of ``dim``
    Fractions.  Zero brackets are not stored.  Instances are immutable and
    hash-free value objects; use :meth:`bracket` for arbitrary index order.
    """

    __slots__ = ("dim", "entries", "name")

    def __init__(self, dim: int, entries: Mapping[tuple[int, int], Iterable[Fraction]],
                 name: str = ""):
        if dim < 1:
            raise AlgebraError(f"dim must be >= 1, got {dim}")
        self.dim = dim
        self.name = name
        cleaned: dict[tuple[int, int], tuple[Fraction, ...]] = {}
        for (i, j), coeffs in entries.items():
            if not (1 <= i < j <= dim):
                raise AlgebraError(f"bracket pair ({i}, {j}) out of range for dim {dim}")
            vec = tuple(Fraction(c) for c in coeffs)
            if len(vec) != dim:
                raise AlgebraError(f"bracket ({i}, {j}) has {len(vec)} coefficients, want {dim}")
            if any(vec):
                cleaned[(i, j)] = vec
        self.entries = cleaned

    def bracket(self, i: int, j: int) -> tuple[Fraction, ...]:
        """Coefficient vector of [z_i, z_j]; antisymmetry is structural."""
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise AlgebraError(f"generator index out of range: ({i}, {j})")
        if i == j:
            return (Fraction(0),) * self.dim
        if i < j:
            return self.entries.get((i, j), (Fraction(0),) * self.dim)
        vec = self.entries.get((j, i))
        if vec is None:
            return (Fraction(0),) * self.dim
        return tuple(-c for c in vec)

    def __eq__(self, other):
        return (isinstance(other, StructureConstants)
                and self.dim == other.dim and self.entries == other.entries)

    def __repr__(self):
        label = self.name or f"dim{self.dim}"
        return f"StructureConstants({label}, {len(self.entries)} brackets)"

    def to_document(self) -> dict:
        """Serialize to the JSON algebra-description document."""
        brackets = []
        for (i, j) in sorted(self.entries):
            vec = self.entries[(i, j)]
            out = {str(k + 1): format_rational(c) for k, c in enumerate(vec) if c}
            brackets.append({"i": i, "j": j, "out": out})
        return {"name": self.name, "dim": self.dim, "brackets": brackets}


def check_jacobi(sc: StructureConstants) -> list[tuple[tuple[int, int, int], tuple[Fraction, ...]]]:
    """All triples i < j < k where [[z_i,z_j],z_k] + cyclic != 0, with residuals."""
    n = sc.dim
    violations = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                residual = [Fraction(0)] * n
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = sc.bracket(a, b)
                    for t in range(n):
                        if inner[t]:
                            outer = sc.bracket(t + 1, c)
                            for s in range(n):
                                residual[s] += inner[t] * outer[s]
                if any(residual):
                    violations.append(((i, j, k), tuple(residual)))
    return violations


class AlgebraSpec:
    """An algebra description whose coefficients may reference named parameters.

    Coefficient expressions are (coef, param) pairs with ``param`` optional;
    binding the parameters produces a :class:`StructureConstants`.
    """

    def __init__(self, name: str, dim: int, brackets, params=(), constraints=()):
        self.name = name
        self.dim = dim
        # brackets: {(i, j): {k: [(coef, param-or-None), ...]}}
        self.brackets = brackets
        self.params = tuple(params)
        self.constraints = tuple(constraints)  # (param, "nonzero")

    def bind(self, bindings: Mapping[str, Fraction], check: bool = True) -> StructureConstants:
        for p in self.params:
            if p not in bindings:
                raise AlgebraError(f"{self.name}: unbound parameter {p!r}")
        for name in bindings:
            if name not in self.params:
                raise AlgebraError(f"{self.name}: unknown parameter {name!r} "
                                   f"(takes {list(self.params) or 'none'})")
        for (p, kind) in self.constraints:
            if kind == "nonzero" and bindings[p] == 0:
                raise CatalogError(f"{self.name}: parameter {p} must be nonzero")
        entries = {}
        for (i, j), out in self.brackets.items():
            vec = [Fraction(0)] * self.dim
            for k, terms in out.items():
                total = Fraction(0)
                for coef, param in terms:
                    total += coef * (bindings[param] if param else 1)
                vec[k - 1] += total
            entries[(i, j)] = vec
        sc = StructureConstants(self.dim, entries, name=self.name)
        if check:
            violations = check_jacobi(sc)
            if violations:
                raise JacobiError(violations)
        return sc


def _parse_coefficient(value) -> tuple[Fraction, str | None]:
    """One term of a coefficient expression: rational, param, or coef*param."""
    if isinstance(value, dict):
        coef = parse_rational(value.get("coef", "1"))
        param = value.get("param")
        if param is not None and not isinstance(param, str):
            raise AlgebraError(f"bad param reference: {value!r}")
        return coef, param
    s = str(value).strip()
    try:
        return parse_rational(s), None
    except ValueError:
        pass
    if s.startswith("-"):
        return Fraction(-1), s[1:].strip()
    return Fraction(1), s


def parse_algebra_document(doc) -> AlgebraSpec:
    """Parse the JSON algebra-description document into an :class:`AlgebraSpec`."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise AlgebraError(f"algebra document is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise AlgebraError("algebra document must be a JSON object")
    try:
        dim = int(doc["dim"])
    except (KeyError, TypeError, ValueError):
        raise AlgebraError("algebra document needs an integer 'dim'")
    name = str(doc.get("name", ""))
    params = [str(p) for p in doc.get("params", [])]
    constraints = []
    for entry in doc.get("constraints", []):
        p = entry.get("param")
        if p not in params:
            raise AlgebraError(f"constraint references unknown parameter {p!r}")
        if entry.get("nonzero"):
            constraints.append((p, "nonzero"))
    brackets = {}
    for entry in doc.get("brackets", []):
        try:
            i, j = int(entry["i"]), int(entry["j"])
        except (KeyError, TypeError, ValueError):
            raise AlgebraError(f"bad bracket entry: {entry!r}")
        if not (1 <= i < j <= dim):
            raise AlgebraError(f"bracket pair ({i}, {j}) must satisfy 1 <= i < j <= {dim}")
        out = {}
        for k_str, value in entry.get("out", {}).items():
            k = int(k_str)
            if not (1 <= k <= dim):
                raise AlgebraError(f"bracket output index {k} out of range")
            terms = value if isinstance(value, list) else [value]
            parsed = [_parse_coefficient(t) for t in terms]
            for _, param in parsed:
                if param is not None and param not in params:
                    raise AlgebraError(f"coefficient references unbound parameter {param!r}")
            out[k] = parsed
        brackets[(i, j)] = out
    return AlgebraSpec(name, dim, brackets, params, constraints)


def load_algebra(source, bindings: Mapping[str, Fraction] | None = None,
                 check: bool = True) -> StructureConstants:
    """Load an algebra document (dict, JSON text, or path) and bind parameters.

    The result is Jacobi-checked; a violation raises :class:`JacobiError`
    with the offending triples and exact residual vectors.  ``check=False``
    skips the gate so a suspect bracket can still be inspected.
    """
    if hasattr(source, "__fspath__"):
        source = os.fspath(source)
    if isinstance(source, str) and "{" not in source:
        with open(source, "r", encoding="utf-8") as fh:
            source = fh.read()
    spec = parse_algebra_document(source)
    clean = {k: parse_rational(v) if not isinstance(v, Fraction) else v
             for k, v in (bindings or {}).items()}
    return spec.bind(clean, check=check)


# ---------------------------------------------------------------------------
# Catalog: the algebras whose homology tables this package reproduces.
# ---------------------------------------------------------------------------

def _spec(name, dim, brackets, params=(), constraints=()):
    parsed = {}
    for (i, j), out in brackets.items():
        parsed[(i, j)] = {k: [_parse_coefficient(t) for t in (v if isinstance(v, list) else [v])]
                          for k, v in out.items()}
    return AlgebraSpec(name, dim, parsed, params, constraints)


_CATALOG: dict[str, AlgebraSpec] = {}

for _n in range(1, 7):
    _CATALOG[f"abelian{_n}"] = _spec(f"abelian{_n}", _n, {})

_CATALOG["aff1"] = _spec("aff1", 2, {(1, 2): {1: "1"}})
_CATALOG["heis3"] = _spec("heis3", 3, {(1, 2): {3: "1"}})
_CATALOG["g3d1n"] = _spec("g3d1n", 3, {(1, 2): {2: "1"}})
_CATALOG["g3d2"] = _spec(
    "g3d2", 3,
    {(1, 3): {1: "1"}, (2, 3): {2: "alpha"}},
    params=("alpha",), constraints=(("alpha", "nonzero"),))
_CATALOG["g3d3"] = _spec(
    "g3d3", 3,
    {(1, 2): {3: "1"}, (1, 3): {2: {"coef": "-1", "param": "beta"}},
     (2, 3): {1: "alpha"}},
    params=("alpha", "beta"),
    constraints=(("alpha", "nonzero"), ("beta", "nonzero")))
_CATALOG["sl2_efh"] = _spec(
    "sl2_efh", 3,
    {(1, 2): {3: "1"}, (1, 3): {1: "2"}, (2, 3): {2: "-2"}})

# gl(2): basis E11, E12, E21, E22 with [E_ab, E_cd] = d_bc E_ad - d_da E_cb.
_CATALOG["gl2"] = _spec(
    "gl2", 4,
    {(1, 2): {2: "1"}, (1, 3): {3: "-1"},
     (2, 3): {1: "1", 4: "-1"}, (2, 4): {2: "1"}, (3, 4): {3: "-1"}})


def catalog_names() -> list[str]:
    return sorted(_CATALOG)


def catalog_spec(name: str) -> AlgebraSpec:
    try:
        return _CATALOG[name]
    except KeyError:
        raise CatalogError(f"unknown catalog algebra {name!r}; "
                           f"known: {', '.join(catalog_names())}") from None


def catalog_get(name: str, bindings: Mapping[str, Fraction] | None = None) -> StructureConstants:
    """The named catalog algebra with parameters substituted and Jacobi-checked."""
    spec = catalog_spec(name)
    clean = {k: parse_rational(v) if not isinstance(v, Fraction) else v
             for k, v in (bindings or {}).items()}
    try:
        return spec.bind(clean)
    except AlgebraError as exc:
        if isinstance(exc, CatalogError):
            raise
        raise CatalogError(str(exc)) from exc
