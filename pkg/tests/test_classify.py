import json

import pytest

from landau.catalog import IncompleteCatalogError
from landau.classify import (classify_kpp, classify_one_class, classify_two_coprime,
                             emit_table, group_count)


def test_one_class_index_2(cat56):
    rows = classify_one_class(cat56, 2, exhaustive=True)
    assert group_count(rows) == 3
    assert len(rows) == 7
    summary = sorted((r.group_label, r.subgroup_label, r.class_sizes) for r in rows)
    assert summary == [
        ("D_8", "C_2 x C_2", (2,)),
        ("D_8", "C_2 x C_2", (2,)),
        ("D_8", "C_4", (2,)),
        ("Q_8", "C_4", (2,)),
        ("Q_8", "C_4", (2,)),
        ("Q_8", "C_4", (2,)),
        ("S_3", "C_3", (2,)),
    ]
    assert all(r.subgroup_order * 2 == r.group_order for r in rows)
    assert all(passed for r in rows for _, passed in r.verifications)


def test_one_class_index_3(cat56):
    rows = classify_one_class(cat56, 3, exhaustive=True)
    assert [(r.group_label, r.class_sizes) for r in rows] == \
        [("A_4", (3,)), ("SL(2,3)", (6,))]


def test_one_class_index_5_empty(cat56):
    assert classify_one_class(cat56, 5, exhaustive=False) == []


def test_one_class_exhaustive_needs_coverage(cat56):
    # Index 5 needs completeness to 179; the fixture stops at 56.
    with pytest.raises(IncompleteCatalogError):
        classify_one_class(cat56, 5, exhaustive=True)


def test_two_coprime_index_1(cat56):
    rows = classify_two_coprime(cat56, 1, exhaustive=True)
    assert [(r.group_label, r.class_sizes) for r in rows] == [("S_3", (2, 3))]


def test_two_coprime_index_2(cat56):
    rows = classify_two_coprime(cat56, 2, exhaustive=True)
    assert group_count(rows) == 3
    assert sorted({r.group_order for r in rows}) == [12, 20, 24]
    for r in rows:
        assert r.central_part_order == 1
        assert all(passed for _, passed in r.verifications)


def test_rows_sorted_and_parallelism_invariant(cat56):
    serial = classify_one_class(cat56, 2, jobs=1)
    parallel = classify_one_class(cat56, 2, jobs=3)
    assert emit_table(serial, "csv") == emit_table(parallel, "csv")
    keys = [r.sort_key() for r in serial]
    assert keys == sorted(keys)


def test_kpp_exhaustive_small(cat12):
    rows = classify_kpp(cat12, 3, exhaustive=True)
    assert [(r.k, r.group_label) for r in rows] == \
        [(1, "1"), (2, "C_2"), (3, "C_3"), (3, "S_3")]


def test_kpp_exhaustive_needs_coverage(cat12):
    # Level 4 requires completeness to 4 * 6^2 = 144.
    with pytest.raises(IncompleteCatalogError):
        classify_kpp(cat12, 4, exhaustive=True)


def test_kpp_level_4_membership(cat56):
    rows = classify_kpp(cat56, 4, exhaustive=False)
    level4 = sorted((r.group_order, r.group_label) for r in rows if r.k == 4)
    assert level4 == [(4, "C_2 x C_2"), (4, "C_4"), (6, "C_6"),
                      (10, "D_10"), (12, "A_4")]


def test_subgroups_abelian_except_quaternion(cat56):
    seen_q8 = False
    for n in (2, 3, 4, 6, 7):
        for row in classify_one_class(cat56, n, exhaustive=False):
            label = row.subgroup_label
            if label == "Q_8":
                seen_q8 = True
                continue
            # abelian labels are (products of) cyclic factors
            assert all(part.startswith("C_") for part in label.split(" x ")), label
    assert seen_q8


def test_emit_table_formats(cat56):
    rows = classify_one_class(cat56, 2)
    csv_text = emit_table(rows, "csv")
    assert csv_text.count("\n") == 8  # header + 7 rows
    md_text = emit_table(rows, "md")
    assert md_text.count("\n") == 9  # header + rule + 7 rows
    records = json.loads(emit_table(rows, "json"))
    assert len(records) == 7
    assert records[0]["group_order"] == 6


def test_emit_table_empty_is_header_only():
    assert emit_table([], "csv").count("\n") == 1


def test_emit_table_to_destination(tmp_path, cat56):
    rows = classify_one_class(cat56, 2)
    out = tmp_path / "rows.csv"
    text = emit_table(rows, "csv", destination=out)
    assert out.read_text(encoding="utf-8") == text


def test_emit_table_rejects_unknown_format():
    with pytest.raises(ValueError):
        emit_table([], "xml")
