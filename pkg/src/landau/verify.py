"""Whole-catalog property suite.

Runs every identity and structure theorem the toolkit relies on against
every catalog entry and every normal subgroup, plus the classifier
cross-checks.  Returns a list of violation strings; a non-empty list
means a bug somewhere in the tower.
"""

from __future__ import annotations

import math

from .bounds import theoremA_bounds, thm311_bound, thm322_bound, thm322_intervals
from .catalog import Catalog
from .classgraph import verify_one_vertex, verify_two_vertex_edgeless
from .classify import classify_one_class, classify_two_coprime
from .embedding import (NormalEmbedding, check_thm44, splitting_count,
                        splitting_count_oracle)
from .fracsolve import candidate_orders_one_class, candidate_orders_two_coprime
from . import named


def verify_catalog(catalog: Catalog, progress=None) -> list[str]:
    violations = []
    for entry in catalog.entries:
        if progress:
            progress(f"checking ({entry.order}, {entry.catalog_id}) {entry.label}")
        tag = f"({entry.order},{entry.catalog_id})"
        group = entry.realize()
        violations.extend(_check_group(tag, group))
        for sub in group.normal_subgroups:
            violations.extend(_check_embedding(tag, group, sub))
    violations.extend(_check_classified_pairs(catalog))
    violations.extend(_check_direct_product_invariance())
    return violations


def _check_group(tag, group):
    out = []
    classes = group.conjugacy_classes
    if sum(c.size for c in classes) != group.order:
        out.append(f"{tag}: class sizes do not sum to |G|")
    for c in classes:
        cent = group.centralizer(c.representative)
        if c.size * cent.order != group.order:
            out.append(f"{tag}: orbit-stabilizer fails for class of size {c.size}")
    central_union = {c.representative for c in classes if c.size == 1}
    if central_union != set(group.center.elements):
        out.append(f"{tag}: center differs from union of size-1 classes")
    return out


def _check_embedding(tag, group, sub):
    out = []
    stag = f"{tag} N of order {sub.order}"
    try:
        e = NormalEmbedding(group, sub)
    except ValueError as exc:
        return [f"{stag}: embedding rejected: {exc}"]
    covered = sum(c.size for c in e.g_classes_in_N)
    if covered != sub.order:
        out.append(f"{stag}: class equation fails")
    for c in e.g_classes_in_N:
        k = splitting_count(e, c.representative)
        if k != splitting_count_oracle(e, c.representative):
            out.append(f"{stag}: splitting count mismatch on class size {c.size}")
        if e.index % k:
            out.append(f"{stag}: splitting count {k} does not divide index {e.index}")
    if not check_thm44(e):
        out.append(f"{stag}: class-count inequality k_G(N) >= k(N)/n fails")
    sizes = e.noncentral_sizes
    if len(sizes) == 1 and not verify_one_vertex(e).ok:
        out.append(f"{stag}: one-vertex structure theorem fails")
    if len(sizes) == 2 and math.gcd(*sizes) == 1:
        if e.central_part_order != 1:
            out.append(f"{stag}: Z(G) cap N != 1 with two coprime classes")
        if not verify_two_vertex_edgeless(e).ok:
            out.append(f"{stag}: two-vertex structure theorem fails")
    return out


def _check_classified_pairs(catalog):
    out = []
    max_one = 1
    while thm311_bound(max_one + 1).bound_G - 1 <= catalog.complete_up_to:
        max_one += 1
    max_two = 0
    while thm322_bound(max_two + 1).bound_G <= catalog.complete_up_to:
        max_two += 1
    for n in range(1, max_one + 1):
        candidates = {c.c for c in candidate_orders_one_class(n)}
        for row in classify_one_class(catalog, n, exhaustive=True):
            rtag = f"one-class n={n} ({row.group_order},{row.catalog_id})"
            if row.group_order not in candidates:
                out.append(f"{rtag}: order missing from candidate list")
            if row.group_order >= theoremA_bounds(n, 1).bound_G:
                out.append(f"{rtag}: violates the general strict bound")
            if row.group_order >= thm311_bound(n).bound_G:
                out.append(f"{rtag}: violates the one-class bound")
            for name, passed in row.verifications:
                if not passed:
                    out.append(f"{rtag}: {name} failed")
    for n in range(1, max_two + 1):
        candidates = {c.c for c in candidate_orders_two_coprime(n)}
        for row in classify_two_coprime(catalog, n, exhaustive=True):
            rtag = f"two-coprime n={n} ({row.group_order},{row.catalog_id})"
            if row.group_order not in candidates:
                out.append(f"{rtag}: order missing from candidate list")
            if row.group_order >= theoremA_bounds(n, 2).bound_G:
                out.append(f"{rtag}: violates the general strict bound")
            if row.group_order > thm322_bound(n).bound_G:
                out.append(f"{rtag}: violates the two-coprime bound")
            n1, n2 = sorted(row.group_order // s for s in row.class_sizes)
            n1_range, _ = thm322_intervals(n)
            if not n1_range[0] <= n1 <= n1_range[1]:
                out.append(f"{rtag}: smaller centralizer order {n1} outside interval")
            else:
                _, n2_range = thm322_intervals(n, n1)
                if not n2_range[0] <= n2 <= n2_range[1]:
                    out.append(f"{rtag}: larger centralizer order {n2} outside interval")
            for name, passed in row.verifications:
                if not passed:
                    out.append(f"{rtag}: {name} failed")
    return out


def _check_direct_product_invariance():
    """For G = N x A with A abelian, N's G-classes are N's own classes."""
    out = []
    factors = {"S_3": named.symmetric(3), "Q_8": named.quaternion(8)}
    abelians = {"C_2": 2, "C_3": 3, "C_5": 5}
    for fname, base in factors.items():
        base_sizes = sorted(c.size for c in base.conjugacy_classes)
        for aname, m in abelians.items():
            product = named.direct_product(base, named.cyclic(m))
            lifted = product.generated_subgroup([
                g for g in product.small_generating_set
                if all(g(i) == i for i in range(base.degree + 1, product.degree + 1))
            ])
            if lifted.order != base.order:
                lifted = product.generated_subgroup([
                    named.Permutation(list(g.images)
                                      + list(range(base.degree + 1, product.degree + 1)))
                    for g in base.small_generating_set
                ])
            e = NormalEmbedding(product, lifted)
            g_sizes = sorted(c.size for c in e.g_classes_in_N)
            if g_sizes != base_sizes:
                out.append(
                    f"{fname} x {aname}: G-class sizes {g_sizes} != N-class sizes {base_sizes}"
                )
    return out
