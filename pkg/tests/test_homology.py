import copy
import json
import os
from fractions import Fraction as F
from math import comb

import pytest

from superhomology import (betti_row, betti_table, catalog_get, euler_check,
                           generator_system, verify_table)

from conftest import EXPECTED_DIR


@pytest.fixture(scope="module")
def heis3_table():
    gs = generator_system(catalog_get("heis3"))
    return betti_table(gs, 6)


def test_betti_row_examples():
    heis = generator_system(catalog_get("heis3"))
    row = betti_row(heis, 3)
    assert row.degrees == [2, 3, 4, 5, 6]
    assert row.betti == [0, 3, 10, 11, 4]

    g3d1n = generator_system(catalog_get("g3d1n"))
    assert betti_row(g3d1n, 4).betti == [0, 1, 2, 1, 0]

    kappa1 = generator_system(catalog_get("g3d2", {"alpha": "-1"}))
    assert betti_row(kappa1, 5).betti == [0, 0, 1, 2, 1]
    kappa0 = generator_system(catalog_get("g3d2", {"alpha": "2"}))
    assert betti_row(kappa0, 5).betti == [0, 0, 0, 0, 0]

    sl2 = generator_system(catalog_get("sl2_efh"))
    assert betti_row(sl2, 4).betti == [0, 0, 0, 0, 0]

    abelian = generator_system(catalog_get("abelian3"))
    row = betti_row(abelian, 1)
    assert row.betti == row.dims  # zero boundary: Betti = dimensions


def test_case3_kernel_columns_track_kappa():
    # kernel at degree w+2 is C(w+2,2) + kappa, at w+3 it is kappa
    for alpha, kappa in [("-1", 1), ("2", 0), ("1", 0)]:
        gs = generator_system(catalog_get("g3d2", {"alpha": alpha}))
        for w in (2, 4):
            row = betti_row(gs, w)
            assert row.kernels[-2] == comb(w + 2, 2) + kappa
            assert row.kernels[-1] == kappa


def test_weight_zero_rows_reproduce_classical_homology():
    # the alpha family at weight 0, with and without the alpha = -1 jump
    for alpha, kappa in [("-1", 1), ("3", 0)]:
        gs = generator_system(catalog_get("g3d2", {"alpha": alpha}))
        row = betti_row(gs, 0)
        assert row.degrees == [0, 1, 2, 3]
        assert row.dims == [1, 3, 3, 1]
        assert row.kernels == [1, 3, 1, kappa]
        assert row.betti == [1, 1, kappa, kappa]
    # heis3 at weight 0: the classical Betti numbers 1, 2, 2, 1
    row = betti_row(generator_system(catalog_get("heis3")), 0)
    assert row.betti == [1, 2, 2, 1]


def test_aff1_table():
    gs = generator_system(catalog_get("aff1"))
    table = betti_table(gs, 3)
    assert table.row(0).betti == [1, 1, 0]
    for w in (1, 2, 3):
        row = table.row(w)
        assert row.degrees == [w, w + 1, w + 2]
        assert row.dims == [1, 2, 1]
        assert row.kernels == [1, 1, 0]
        assert row.betti == [0, 0, 0]


def test_gl2_low_weights():
    gs = generator_system(catalog_get("gl2"))
    assert betti_row(gs, 0).betti == [1, 1, 0, 1, 1]
    assert betti_row(gs, 2).betti == [0, 2, 2, 0, 2, 2]


def test_row_invariants_validate(heis3_table):
    for row in heis3_table.rows:
        row.validate()


def test_euler_check_examples():
    assert euler_check(generator_system(catalog_get("heis3")), 7) == 0
    assert euler_check(generator_system(catalog_get("abelian4")), 0) == 0
    assert euler_check(generator_system(catalog_get("gl2")), 5) == 0


def test_euler_zero_for_all_catalog_up_to_w20():
    from superhomology import catalog_names
    for name in catalog_names():
        binds = {}
        if name == "g3d2":
            binds = {"alpha": "4"}
        elif name == "g3d3":
            binds = {"alpha": "2", "beta": "-3"}
        gs = generator_system(catalog_get(name, binds))
        for w in range(0, 21):
            assert euler_check(gs, w) == 0, (name, w)


def test_betti_alternating_sum_vanishes(heis3_table):
    for row in heis3_table.rows:
        assert sum((-1) ** m * b for m, b in zip(row.degrees, row.betti)) == 0


def test_closed_forms_hold_beyond_the_published_range():
    heis = generator_system(catalog_get("heis3"))
    for w in (18, 20):
        row = betti_row(heis, w)
        assert row.betti == [0, w, 3 * w + 1, 3 * w + 2, w + 1]
    aff = generator_system(catalog_get("aff1"))
    assert betti_row(aff, 40).betti == [0, 0, 0]


def test_betti_invariant_under_random_alias_bases():
    import random

    from superhomology import GeneratorSystem, Multivector, wedge_basis

    rng = random.Random(424242)

    def random_invertible_basis(sc, level):
        elements = [e.indices for e in wedge_basis(sc, level)]
        size = len(elements)
        perm = list(range(size))
        rng.shuffle(perm)
        basis = []
        for i in range(size):
            # unit triangular in a shuffled order: always invertible
            coeffs = {elements[perm[i]]: F(rng.choice([1, -1, 2, F(1, 2), F(-2, 3)]))}
            for j in range(i):
                if rng.random() < 0.5:
                    coeffs[elements[perm[j]]] = F(rng.randint(-2, 2), rng.randint(1, 2))
            basis.append((f"b{i + 1}", Multivector(level, coeffs)))
        return basis

    for name, binds in [("heis3", {}), ("sl2_efh", {})]:
        sc = catalog_get(name, binds)
        reference = betti_table(generator_system(sc), 4)
        for level in (1, 2, 3):
            gs = GeneratorSystem(sc, {level: random_invertible_basis(sc, level)})
            table = betti_table(gs, 4)
            assert [r.to_dict() for r in table.rows] == \
                [r.to_dict() for r in reference.rows], (name, level)


def test_basis_independence_of_betti():
    for name, binds in [("heis3", {}), ("g3d1n", {}), ("g3d2", {"alpha": "-1"}),
                        ("g3d3", {"alpha": "2", "beta": "3"}), ("sl2_efh", {})]:
        sc = catalog_get(name, binds)
        canonical = betti_table(generator_system(sc, "canonical"), 4)
        alias = betti_table(generator_system(sc, "paper"), 4)
        assert [r.to_dict() for r in canonical.rows] == [r.to_dict() for r in alias.rows]


def test_parameter_stability_of_derived3_family():
    tables = []
    for alpha, beta in [(F(1), F(1)), (F(-1), F(1)), (F(2), F(3))]:
        gs = generator_system(catalog_get("g3d3", {"alpha": alpha, "beta": beta}))
        tables.append(betti_table(gs, 6))
    first = [r.to_dict() for r in tables[0].rows]
    for other in tables[1:]:
        assert [r.to_dict() for r in other.rows] == first


def test_verify_table_against_shipped_expected(heis3_table):
    with open(os.path.join(EXPECTED_DIR, "g3d1_central.json"), encoding="utf-8") as fh:
        expected = json.load(fh)
    diff = verify_table(heis3_table, expected)
    assert diff.ok, diff.render()
    assert diff.rows_checked == 6 and diff.rows_skipped == 9


def test_verify_table_detects_single_fault(heis3_table):
    with open(os.path.join(EXPECTED_DIR, "g3d1_central.json"), encoding="utf-8") as fh:
        expected = json.load(fh)
    expected = copy.deepcopy(expected)
    expected["rows"][2]["betti"][1] += 1
    diff = verify_table(heis3_table, expected)
    assert len(diff.mismatches) == 1
    entry = diff.mismatches[0]
    assert entry["w"] == 3 and entry["field"] == "betti"
    assert "mismatching" in diff.render()


def test_verify_table_partial_schema(heis3_table):
    expected = {"rows": [{"w": 2, "degrees": [1, 2, 3, 4, 5],
                          "betti": [0, 2, 7, 8, 3]}]}
    diff = verify_table(heis3_table, expected)
    assert diff.ok
    assert diff.cells_checked == 5  # dims and kernels were not provided


def test_verify_table_malformed_documents(heis3_table):
    with pytest.raises(ValueError):
        verify_table(heis3_table, {"rows": [{"degrees": [1]}]})
    with pytest.raises(ValueError):
        verify_table(heis3_table, {"rows": [{"w": 1, "betti": [0]}]})
    with pytest.raises(ValueError):
        verify_table(heis3_table, {"rows": [{"w": 1, "degrees": [1, 2], "betti": [0]}]})
    with pytest.raises(ValueError):
        verify_table(heis3_table, {})


def test_json_round_trip_through_expected_schema(heis3_table):
    doc = json.loads(heis3_table.to_json())
    diff = verify_table(heis3_table, doc)
    assert diff.ok and diff.rows_checked == len(heis3_table.rows)


def test_renderings(heis3_table):
    csv = heis3_table.to_csv()
    assert csv.splitlines()[0] == "w,degree,space_dim,kernel_dim,betti"
    assert "3,4,39,26,10" in csv
    md = heis3_table.to_markdown()
    assert "### weight w = 3" in md
    assert "| Betti | 0 | 3 | 10 | 11 | 4 |" in md


def test_empty_weight_rows_render_without_error():
    gs = generator_system(catalog_get("abelian1"))
    table = betti_table(gs, 2)  # weights 1, 2 have no chain spaces at dim 1
    assert table.row(1).degrees == []
    assert "(empty complex)" in table.to_markdown()
    table.row(1).validate()


def test_threaded_and_serial_tables_agree(monkeypatch):
    sc = catalog_get("g3d1n")
    serial = betti_table(generator_system(sc), 5)
    monkeypatch.setenv("SUPERHOMOLOGY_THREADS", "4")
    threaded = betti_table(generator_system(sc), 5)
    assert [r.to_dict() for r in serial.rows] == [r.to_dict() for r in threaded.rows]
    # degrees within one row may also run on a pool
    gs = generator_system(sc)
    assert betti_row(gs, 5, max_workers=4) == betti_row(gs, 5)
