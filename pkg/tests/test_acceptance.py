"""Acceptance gate: one test per criterion, each printing PASS/FAIL.

Every expected value here is either a published table column, a quantity
recomputed by an independent oracle, or a direct consequence of a
definition; tolerances are exact equality plus a wall-clock budget.
"""

import time
from fractions import Fraction

import pytest

from landau.bounds import gamma_kpp, iterative_kpp_bound, theoremA_bounds, thm311_bound, thm322_bound
from landau.classify import classify_kpp, classify_one_class, classify_two_coprime, group_count
from landau.fracsolve import candidate_orders_two_coprime, unit_fraction_solutions
from landau.verify import verify_catalog

ONE_CLASS_COLUMNS = {2: (32, 18), 3: (108, 48), 4: (256, 100),
                     5: (500, 180), 6: (864, 294), 7: (1372, 448)}
TWO_CLASS_COLUMNS = {2: (1728, 42), 3: (13122, 156), 4: (55296, 420),
                     5: (168750, 930), 6: (419904, 1806), 7: (907578, 3192),
                     8: (1769472, 5256), 9: (3188646, 8190), 10: (5400000, 12210),
                     11: (8696754, 17556), 13: (20049822, 33306),
                     17: (76672278, 93942)}


class _Criterion:
    def __init__(self, number, name, budget):
        self.number, self.name, self.budget = number, name, budget

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        status = "PASS" if exc_type is None and elapsed < self.budget else "FAIL"
        print(f"ACCEPTANCE {self.number} ({self.name}): {status} "
              f"[{elapsed:.2f}s / budget {self.budget:.0f}s]")
        if exc_type is None and elapsed >= self.budget:
            pytest.fail(f"criterion {self.number} exceeded {self.budget}s "
                        f"({elapsed:.2f}s)")
        return False


def test_criterion_1_bound_columns():
    with _Criterion(1, "bounds golden columns", 1.0):
        for n, (general, specific) in ONE_CLASS_COLUMNS.items():
            assert theoremA_bounds(n, 1).bound_G == general
            assert thm311_bound(n).bound_G == specific
        for n, (general, specific) in TWO_CLASS_COLUMNS.items():
            assert theoremA_bounds(n, 2).bound_G == general
            assert thm322_bound(n).bound_G == specific


def test_criterion_2_gamma_suite():
    with _Criterion(2, "gamma recursion and level cap", 1.0):
        assert [gamma_kpp(k) for k in range(1, 6)] == [1, 2, 12, 576, 1658880]
        # gamma_kpp internally cross-checks recursion against the closed product
        assert iterative_kpp_bound(5, 12) == 720


def test_criterion_3_one_class_classification(cat56):
    with _Criterion(3, "one-class classification", 60.0):
        rows = classify_one_class(cat56, 2, exhaustive=True)
        assert group_count(rows) == 3 and len(rows) == 7
        observed = sorted((r.group_order, r.subgroup_order, r.class_sizes)
                          for r in rows)
        assert observed == [(6, 3, (2,))] + [(8, 4, (2,))] * 6
        labels = sorted((r.group_label, r.subgroup_label) for r in rows)
        assert labels == [("D_8", "C_2 x C_2"), ("D_8", "C_2 x C_2"),
                          ("D_8", "C_4"), ("Q_8", "C_4"), ("Q_8", "C_4"),
                          ("Q_8", "C_4"), ("S_3", "C_3")]

        rows3 = classify_one_class(cat56, 3, exhaustive=True)
        assert [(r.group_label, r.class_sizes) for r in rows3] == \
            [("A_4", (3,)), ("SL(2,3)", (6,))]

        assert classify_one_class(cat56, 5, exhaustive=False) == []


def test_criterion_4_two_coprime_classification(cat56):
    with _Criterion(4, "two-coprime classification", 60.0):
        rows1 = classify_two_coprime(cat56, 1, exhaustive=True)
        assert [(r.group_label, r.class_sizes) for r in rows1] == [("S_3", (2, 3))]

        rows2 = classify_two_coprime(cat56, 2, exhaustive=True)
        assert group_count(rows2) == 3
        assert {r.group_order for r in rows2} <= {12, 20, 24}


def test_criterion_5_kpp_classification(cat12, cat56):
    with _Criterion(5, "prime-power class count levels", 30.0):
        rows = classify_kpp(cat12, 3, exhaustive=True)
        assert [(r.k, r.group_label) for r in rows] == \
            [(1, "1"), (2, "C_2"), (3, "C_3"), (3, "S_3")]

        level4 = sorted((r.group_order, r.group_label)
                        for r in classify_kpp(cat56, 4, exhaustive=False)
                        if r.k == 4)
        assert level4 == [(4, "C_2 x C_2"), (4, "C_4"), (6, "C_6"),
                          (10, "D_10"), (12, "A_4")]


def test_criterion_6_property_suites(cat56):
    with _Criterion(6, "whole-catalog property suite", 120.0):
        violations = verify_catalog(cat56)
        assert violations == []


def test_criterion_7_fracsolve_oracle():
    with _Criterion(7, "unit-fraction oracle equivalence", 5.0):
        def naive(n, parts):
            out = []

            def rec(remaining, k, lo, prefix):
                if k == 0:
                    if remaining == 0:
                        out.append(prefix)
                    return
                x = lo
                while Fraction(1, x) * k >= remaining:
                    if Fraction(1, x) < remaining or \
                            (k == 1 and Fraction(1, x) == remaining):
                        rec(remaining - Fraction(1, x), k - 1, x, prefix + (x,))
                    x += 1

            rec(Fraction(1, n), parts, 1, ())
            return out

        for n in range(1, 7):
            for parts in range(1, 4):
                got = [s.parts for s in unit_fraction_solutions(n, parts)]
                assert got == naive(n, parts)

        assert [c.c for c in candidate_orders_two_coprime(2)] == [12, 20, 24]
