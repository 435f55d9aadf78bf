import random
from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from superhomology import (boundary_matrix, catalog_get, generator_system,
                           kernel_dim, rank, rank_report)
from superhomology.matrix import RationalMatrix
from superhomology.ranklin import _elim_py

try:
    from superhomology.ranklin import _elim_cy
except ImportError:
    _elim_cy = None

from oracles import naive_rank


def random_matrix(rng, rows, cols, density=0.3, denominators=True):
    matrix = RationalMatrix(rows, cols)
    for r in range(rows):
        for c in range(cols):
            if rng.random() < density:
                num = rng.randint(-6, 6)
                den = rng.randint(1, 4) if denominators else 1
                matrix.set(r, c, F(num, den))
    return matrix


def test_trivial_ranks():
    assert rank(RationalMatrix(5, 7)) == 0
    assert kernel_dim(RationalMatrix(5, 7)) == 7
    assert rank(RationalMatrix(0, 4)) == 0
    assert rank(RationalMatrix(4, 0)) == 0
    proportional = RationalMatrix(2, 2, [(0, 0, F(1)), (0, 1, F(2)),
                                         (1, 0, F(2)), (1, 1, F(4))])
    assert rank(proportional) == 1


def test_boundary_matrix_ranks_from_final_tables():
    heis = generator_system(catalog_get("heis3"))
    matrix = boundary_matrix(heis, 6, 3)  # top degree w+3 at w=3
    assert rank(matrix) == 6  # C(5,2) - (w+1)
    assert kernel_dim(matrix) == 4  # w+1

    sl2 = generator_system(catalog_get("sl2_efh"))
    assert kernel_dim(boundary_matrix(sl2, 8, 5)) == 0


def test_rank_against_oracle_random():
    rng = random.Random(2718)
    for trial in range(60):
        rows = rng.randint(0, 14)
        cols = rng.randint(0, 14)
        matrix = random_matrix(rng, rows, cols, density=rng.uniform(0.1, 0.9))
        assert rank(matrix) == naive_rank(matrix), trial


def test_rank_transpose_and_scaling_invariance():
    rng = random.Random(31)
    for _ in range(25):
        matrix = random_matrix(rng, rng.randint(1, 10), rng.randint(1, 10))
        r = rank(matrix)
        assert rank(matrix.transpose()) == r
        scaled = RationalMatrix(matrix.rows, matrix.cols)
        scales = [F(rng.choice([1, 2, 3, -1, -5]), rng.choice([1, 2])) for _ in range(matrix.rows)]
        for (i, j), v in matrix.entries.items():
            scaled.set(i, j, v * scales[i])
        assert rank(scaled) == r
        perm = list(range(matrix.rows))
        rng.shuffle(perm)
        swapped = RationalMatrix(matrix.rows, matrix.cols)
        for (i, j), v in matrix.entries.items():
            swapped.set(perm[i], j, v)
        assert rank(swapped) == r


def test_rank_of_product_bound():
    rng = random.Random(77)
    for _ in range(20):
        a = random_matrix(rng, rng.randint(1, 8), rng.randint(1, 8))
        b = random_matrix(rng, a.cols, rng.randint(1, 8))
        assert rank(a.matmul(b)) <= min(rank(a), rank(b))


def test_report_fields():
    gs = generator_system(catalog_get("heis3"))
    matrix = boundary_matrix(gs, 4, 3)
    report = rank_report(matrix)
    assert report.rank <= min(matrix.rows, matrix.cols)
    pivot_rows = [r for r, _ in report.pivots]
    pivot_cols = [c for _, c in report.pivots]
    assert len(set(pivot_rows)) == len(report.pivots)
    assert len(set(pivot_cols)) == len(report.pivots)
    assert report.fill_in >= 0 and report.elapsed >= 0.0
    payload = report.to_dict()
    assert payload["rank"] == report.rank and "backend" in payload


def test_python_and_compiled_kernels_agree():
    if _elim_cy is None:
        return
    rng = random.Random(4242)
    for trial in range(40):
        rows = rng.randint(1, 12)
        cols = rng.randint(1, 12)
        matrix = random_matrix(rng, rows, cols, denominators=False)
        int_rows = [{c: int(v) for (r2, c), v in matrix.entries.items() if r2 == r}
                    for r in range(rows)]
        got_py = _elim_py.eliminate([dict(r) for r in int_rows])
        got_cy = _elim_cy.eliminate([dict(r) for r in int_rows])
        assert got_py == got_cy, trial


def test_bigint_entries_fall_back_correctly():
    huge = 3 ** 80
    matrix = RationalMatrix(3, 3)
    matrix.set(0, 0, F(huge))
    matrix.set(0, 1, F(1))
    matrix.set(1, 0, F(1))
    matrix.set(1, 1, F(huge))
    matrix.set(2, 2, F(huge * huge))
    report = rank_report(matrix)
    assert report.rank == 3
    assert naive_rank(matrix) == 3


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6),
       st.integers())
def test_rank_bounds_random_shapes(rows, cols, seed):
    rng = random.Random(seed)
    matrix = random_matrix(rng, rows, cols, density=0.5)
    r = rank(matrix)
    assert 0 <= r <= min(rows, cols)
    assert kernel_dim(matrix) == cols - r
