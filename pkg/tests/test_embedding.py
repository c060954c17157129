from fractions import Fraction

import pytest

from landau import named
from landau.embedding import (NormalEmbedding, NotASubgroupError, NotNormalError,
                              check_thm44, class_counts, embed, k_and_kpp,
                              splitting_count, splitting_count_oracle)
from landau.group import NotAMemberError
from landau.perm import Permutation


def klein_in_alternating_4():
    a4 = named.alternating(4)
    v = a4.generated_subgroup([Permutation.from_cycles([(1, 2), (3, 4)], 4),
                               Permutation.from_cycles([(1, 3), (2, 4)], 4)])
    return a4, v


def test_rejects_non_subgroup():
    # C_4's elements are not contained in S_3 (different degree entirely).
    with pytest.raises(NotASubgroupError):
        NormalEmbedding(named.symmetric(3), named.cyclic(4))


def test_rejects_non_normal_subgroup():
    s3 = named.symmetric(3)
    flip = s3.generated_subgroup([Permutation.from_cycles([(1, 2)], 3)])
    with pytest.raises(NotNormalError):
        NormalEmbedding(s3, flip)


def test_class_decomposition_of_cyclic_in_symmetric_3():
    s3 = named.symmetric(3)
    c3 = s3.generated_subgroup([Permutation.from_cycles([(1, 2, 3)], 3)])
    e = embed(s3, c3)
    assert e.index == 2
    assert e.central_part_order == 1
    assert e.noncentral_sizes == (2,)


def test_class_decomposition_of_klein_in_alternating_4():
    a4, v = klein_in_alternating_4()
    e = NormalEmbedding(a4, v)
    assert e.index == 3
    assert e.central_part_order == 1
    assert e.noncentral_sizes == (3,)


def test_splitting_count_formula_and_oracle():
    a4, v = klein_in_alternating_4()
    e = NormalEmbedding(a4, v)
    x = Permutation.from_cycles([(1, 2), (3, 4)], 4)
    # V is abelian, so the size-3 ambient class splits into 3 singletons.
    assert splitting_count(e, x) == 3
    assert splitting_count_oracle(e, x) == 3

    s3 = named.symmetric(3)
    c3 = s3.generated_subgroup([Permutation.from_cycles([(1, 2, 3)], 3)])
    e2 = NormalEmbedding(s3, c3)
    x2 = Permutation.from_cycles([(1, 2, 3)], 3)
    assert splitting_count(e2, x2) == 2
    assert splitting_count_oracle(e2, x2) == 2


def test_splitting_count_agrees_with_oracle_everywhere():
    g = named.symmetric(4)
    for sub in g.normal_subgroups:
        e = NormalEmbedding(g, sub)
        for c in e.g_classes_in_N:
            assert splitting_count(e, c.representative) == \
                splitting_count_oracle(e, c.representative)


def test_splitting_count_rejects_outside_elements():
    a4, v = klein_in_alternating_4()
    e = NormalEmbedding(a4, v)
    with pytest.raises(NotAMemberError):
        splitting_count(e, Permutation.from_cycles([(1, 2, 3)], 4))


def test_class_counts_and_kpp():
    s3 = named.symmetric(3)
    assert k_and_kpp(s3) == (3, 3)  # element orders 1, 2, 3 all prime powers
    c6 = named.cyclic(6)
    assert k_and_kpp(c6) == (6, 4)  # two elements of order 6 excluded

    a4, v = klein_in_alternating_4()
    e = NormalEmbedding(a4, v)
    assert class_counts(e) == (2, 2, 1)


def test_class_count_inequalities():
    g = named.symmetric(4)
    for sub in g.normal_subgroups:
        e = NormalEmbedding(g, sub)
        assert check_thm44(e)
        k_g, kpp_g, _ = class_counts(e)
        k_n, kpp_n = k_and_kpp(sub)
        assert Fraction(k_g) >= Fraction(k_n, e.index)
        assert Fraction(kpp_g) >= Fraction(kpp_n, e.index)
