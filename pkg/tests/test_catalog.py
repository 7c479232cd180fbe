import pytest

from hamcolor import catalog, recipes, analysis


def test_plan_settled_case():
    res = catalog.plan(3, 8, 1)
    assert res.lb.value == 4
    assert res.ub.n == 4
    assert res.status == ""


def test_plan_gap_case():
    res = catalog.plan(3, 10, 8)
    assert res.lb.value == 7
    assert res.ub.n == 8
    assert res.status == "-?-"


def test_plan_open_case():
    res = catalog.plan(6, 7, 5)
    assert res.ub is None
    assert res.status == "???"


def test_plan_inadmissible_returns_none():
    assert catalog.plan(3, 4, 1) is None


def test_plan_canonicalizes():
    a = catalog.plan(3, 1, 8)
    b = catalog.plan(3, 8, 1)
    assert (a.b, a.c) == (b.b, b.c) == (8, 1)


def test_plan_recipes_build_and_verify():
    # every column entry carries a recipe that actually builds the claimed (b,c)
    res = catalog.plan(3, 7, 2)
    for name, ent in res.columns.items():
        if ent is None:
            continue
        col = recipes.build(ent.recipe)
        assert col.shape.n == ent.n
        from hamcolor.coloring import parameters
        assert parameters(col) == (7, 2)
        assert analysis.verify(col, col.quotient, samples=2000).ok


def test_construction_columns():
    assert catalog.construction_columns(3) == ["*", "P", "F"]
    assert catalog.construction_columns(4) == ["*", "q", "P", "F", "S"]
    assert catalog.construction_columns(6) == ["*", "q", "P", "S"]


def test_build_table_screens_and_sorts():
    rows = catalog.build_table(3, 9)
    pairs = [(r.b, r.c) for r in rows]
    # groups by b+c, then b'+c' ascending, then c descending
    assert pairs == [(2, 1), (4, 2), (6, 3), (5, 4), (7, 2), (8, 1)]


def test_build_table_deterministic():
    r1 = catalog.format_table(catalog.build_table(4, 16), "tsv")
    r2 = catalog.format_table(catalog.build_table(4, 16), "tsv")
    assert r1 == r2


def test_compare_with_reference_flags_mismatch():
    rows = catalog.build_table(3, 9)
    ref = catalog.format_table(rows, "tsv").replace("\t4\t", "\t9\t", 1)
    diffs = catalog.compare_with_reference(rows, ref)
    assert diffs
