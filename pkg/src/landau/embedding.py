"""G-class structure inside a normal subgroup.

The central object is the embedding of a normal subgroup N in its
ambient group G together with the G-classes that partition N; the class
equation |N| = |Z(G) cap N| + sum of non-central class sizes is checked
at construction time.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from .group import FiniteGroup, NotAMemberError


class NotASubgroupError(ValueError):
    pass


class NotNormalError(ValueError):
    pass


class NormalEmbedding:
    """A pair (G, N) with N normal in G, with N's G-class decomposition."""

    def __init__(self, ambient: FiniteGroup, subgroup: FiniteGroup):
        if not subgroup.elements <= ambient.elements:
            raise NotASubgroupError("N is not contained in G")
        if ambient.order % subgroup.order:
            raise NotASubgroupError("|N| does not divide |G|")
        if not ambient.is_normal(subgroup):
            raise NotNormalError("N is not normal in G")
        self.ambient = ambient
        self.subgroup = subgroup
        self.index = ambient.order // subgroup.order
        self.g_classes_in_N = [
            c for c in ambient.conjugacy_classes if c.elements <= subgroup.elements
        ]
        covered = sum(c.size for c in self.g_classes_in_N)
        if covered != subgroup.order:
            raise NotNormalError("G-classes do not partition N")
        self.central_part_order = sum(
            c.size for c in self.g_classes_in_N if c.is_central
        )
        noncentral = sum(c.size for c in self.g_classes_in_N if not c.is_central)
        assert subgroup.order == self.central_part_order + noncentral

    @cached_property
    def noncentral_classes(self):
        return [c for c in self.g_classes_in_N if not c.is_central]

    @cached_property
    def noncentral_sizes(self):
        return tuple(c.size for c in self.noncentral_classes)

    def __repr__(self):
        return (f"NormalEmbedding(|G|={self.ambient.order}, |N|={self.subgroup.order}, "
                f"index={self.index}, noncentral={self.noncentral_sizes})")


def embed(g: FiniteGroup, n: FiniteGroup) -> NormalEmbedding:
    return NormalEmbedding(g, n)


def splitting_count(e: NormalEmbedding, x) -> int:
    """Number of N-classes into which x^G splits: |G : N*C_G(x)|.

    N normal makes N*C_G(x) a subgroup, so its order is
    |N||C_G(x)| / |N cap C_G(x)|.
    """
    if x not in e.subgroup.elements:
        raise NotAMemberError("x is not in the normal subgroup")
    cent = e.ambient.centralizer(x)
    meet = len(cent.elements & e.subgroup.elements)
    product_order = e.subgroup.order * cent.order // meet
    return e.ambient.order // product_order


def splitting_count_oracle(e: NormalEmbedding, x) -> int:
    """Literal count of distinct N-classes contained in x^G."""
    if x not in e.subgroup.elements:
        raise NotAMemberError("x is not in the normal subgroup")
    g_class = e.ambient.class_of(x).elements
    remaining = set(g_class)
    count = 0
    while remaining:
        y = remaining.pop()
        n_class = {h * y * h.inverse() for h in e.subgroup.elements}
        remaining -= n_class
        count += 1
    return count


def class_counts(e: NormalEmbedding) -> tuple[int, int, int]:
    """(k_G(N), kpp_G(N), number of non-central G-classes in N).

    Prime-power order includes order 1, so the identity class always
    counts toward kpp.
    """
    k = len(e.g_classes_in_N)
    kpp = sum(1 for c in e.g_classes_in_N if c.is_prime_power_order)
    s = len(e.noncentral_classes)
    return k, kpp, s


def k_and_kpp(group: FiniteGroup) -> tuple[int, int]:
    """(k(G), kpp(G)) for a group viewed over its own classes."""
    classes = group.conjugacy_classes
    return len(classes), sum(1 for c in classes if c.is_prime_power_order)


def check_thm44(e: NormalEmbedding) -> bool:
    """k_G(N) >= k(N)/n and kpp_G(N) >= kpp(N)/n, compared exactly.

    Both inequalities are theorems; a False return signals a bug in the
    class machinery, which is exactly what the property suite hunts for.
    """
    k_g, kpp_g, _ = class_counts(e)
    k_n, kpp_n = k_and_kpp(e.subgroup)
    n = e.index
    return (Fraction(k_g) >= Fraction(k_n, n)
            and Fraction(kpp_g) >= Fraction(kpp_n, n))
