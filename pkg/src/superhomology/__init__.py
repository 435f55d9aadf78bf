"""Exact homology of the graded Lie superalgebra on the exterior algebra
of a finite-dimensional Lie algebra.

Typical use::

    from superhomology import catalog_get, generator_system, betti_table

    sc = catalog_get("heis3")
    gs = generator_system(sc)
    table = betti_table(gs, w_max=6)
"""

from .algebra import (AlgebraError, AlgebraSpec, CatalogError, JacobiError,
                      StructureConstants, catalog_get, catalog_names,
                      catalog_spec, check_jacobi, load_algebra,
                      parse_algebra_document)
from .chain import (Chain, SuperMonomial, boundary_matrix, boundary_monomial,
                    chain_basis, chain_dim, format_monomial, induced_bracket,
                    monomial_degree, monomial_weight, normalize_word,
                    support_degrees)
from .exterior import (GeneratorSystem, Multivector, WedgeBasisElement,
                       bracket_table, generator_system, paper_level2_basis,
                       render_bracket_table, schouten, wedge_basis)
from .homology import (BettiRow, BettiTable, TableDiff, betti_row,
                       betti_table, euler_check, load_expected, verify_table)
from .matrix import RationalMatrix
from .rational import Rational, format_rational, parse_rational
from .ranklin import BACKEND, EliminationReport, kernel_dim, rank, rank_report

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "AlgebraSpec", "BACKEND", "BettiRow", "BettiTable",
    "CatalogError", "Chain", "EliminationReport", "GeneratorSystem",
    "JacobiError", "Multivector", "Rational", "RationalMatrix",
    "StructureConstants", "SuperMonomial", "TableDiff", "WedgeBasisElement",
    "betti_row", "betti_table", "boundary_matrix", "boundary_monomial",
    "bracket_table", "catalog_get", "catalog_names", "catalog_spec",
    "chain_basis", "chain_dim", "check_jacobi", "euler_check",
    "format_monomial", "format_rational", "generator_system",
    "induced_bracket", "kernel_dim", "load_algebra", "load_expected",
    "monomial_degree", "monomial_weight", "normalize_word",
    "paper_level2_basis", "parse_algebra_document", "parse_rational", "rank",
    "rank_report", "render_bracket_table", "schouten", "support_degrees",
    "verify_table", "wedge_basis",
]
