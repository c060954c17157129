import pytest

from landau.bounds import (DomainError, BoundReport, cor49_bounds, gamma_kpp,
                           iterative_kpp_bound, lemma21_bounds, theoremA_bounds,
                           thm311_bound, thm322_bound, thm322_intervals)

# Golden columns: index -> (general bound with one class, one-class bound).
ONE_CLASS_TABLE = {
    2: (32, 18),
    3: (108, 48),
    4: (256, 100),
    5: (500, 180),
    6: (864, 294),
    7: (1372, 448),
}

# Golden columns: index -> (general bound with two classes, two-coprime bound).
TWO_CLASS_TABLE = {
    2: (1728, 42),
    3: (13122, 156),
    4: (55296, 420),
    5: (168750, 930),
    6: (419904, 1806),
    7: (907578, 3192),
    8: (1769472, 5256),
    9: (3188646, 8190),
    10: (5400000, 12210),
    11: (8696754, 17556),
    13: (20049822, 33306),
    17: (76672278, 93942),
}


@pytest.mark.parametrize("n,expected", sorted(ONE_CLASS_TABLE.items()))
def test_one_class_bound_columns(n, expected):
    general, specific = expected
    assert theoremA_bounds(n, 1).bound_G == general
    assert thm311_bound(n).bound_G == specific


@pytest.mark.parametrize("n,expected", sorted(TWO_CLASS_TABLE.items()))
def test_two_class_bound_columns(n, expected):
    general, specific = expected
    assert theoremA_bounds(n, 2).bound_G == general
    assert thm322_bound(n).bound_G == specific


def test_general_bound_closed_forms():
    # s = 1 collapses to 4n^3 and s = 2 to 54n^5.
    for n in range(1, 10):
        assert theoremA_bounds(n, 1).bound_G == 4 * n ** 3
        assert theoremA_bounds(n, 2).bound_G == 54 * n ** 5


def test_strictness_flags():
    assert theoremA_bounds(2, 1).strict
    assert thm311_bound(2).strict
    assert not thm322_bound(2).strict


def test_bound_N_is_bound_G_over_n():
    r = thm311_bound(6)
    assert r.bound_N == r.bound_G // 6


def test_lemma21_part_caps():
    # Two parts at index 2: n_1 <= 2*2, n_2 <= 2^2 * 2.
    assert lemma21_bounds(2, 1) == [4, 8]
    caps = lemma21_bounds(2, 2)
    assert caps[0] == 6
    assert len(caps) == 3
    assert all(a <= b for a, b in zip(caps, caps[1:]))


def test_thm322_intervals():
    n1_range, n2_range = thm322_intervals(2)
    assert n1_range == (3, 5)
    assert n2_range is None
    _, (lo, hi) = thm322_intervals(2, 3)
    assert (lo, hi) == (7, 11)
    with pytest.raises(DomainError):
        thm322_intervals(2, 6)


def test_gamma_values():
    assert [gamma_kpp(k) for k in range(1, 6)] == [1, 2, 12, 576, 1658880]


def test_gamma_matches_closed_product():
    for k in range(1, 8):
        closed = 1
        for i in range(k):
            closed *= (k - i) ** (2 ** i)
        assert gamma_kpp(k) == closed


def test_cor49_scales_subgroup_bound_by_index():
    r = cor49_bounds(2, 2)
    assert r.bound_N == gamma_kpp(4)
    assert r.bound_G == 2 * gamma_kpp(4)


def test_iterative_kpp_bound():
    assert iterative_kpp_bound(5, 12) == 720
    assert iterative_kpp_bound(1, 1) == 1


def test_domain_errors():
    for bad in (0, -1, 1.5, "2"):
        with pytest.raises(DomainError):
            theoremA_bounds(bad, 1)
        with pytest.raises(DomainError):
            thm311_bound(bad)
    with pytest.raises(DomainError):
        gamma_kpp(0)


def test_report_is_frozen():
    r = thm311_bound(2)
    assert isinstance(r, BoundReport)
    with pytest.raises(Exception):
        r.bound_G = 0
