"""Best-effort structure names for small groups.

Labels are display strings only; classification counts never depend on
them.  Recognition order: abelian invariants, a handful of well-known
groups by class-structure signature, dihedral / generalized quaternion
shape, direct-product splitting, and a cyclic-complement semidirect
form.  Anything else gets an opaque placeholder.
"""

from __future__ import annotations

from .group import FiniteGroup

# (order, class size multiset) signatures for groups recognized by name.
_SIGNATURES = {
    (6, (1, 2, 3)): "S_3",
    (12, (1, 3, 4, 4)): "A_4",
    (24, (1, 3, 6, 6, 8)): "S_4",
    (24, (1, 1, 4, 4, 4, 4, 6)): "SL(2,3)",
    (60, (1, 12, 12, 15, 20)): "A_5",
    (120, (1, 10, 15, 20, 20, 24, 30)): "S_5",
}


def structure_label(group: FiniteGroup) -> str:
    if group.order == 1:
        return "1"
    if group.is_abelian:
        parts = sorted(group.abelian_invariants, reverse=True)
        return " x ".join(f"C_{d}" for d in parts)
    name = _SIGNATURES.get((group.order, group.class_sizes))
    if name:
        return name
    if _is_dihedral(group):
        return f"D_{group.order}"
    if _is_generalized_quaternion(group):
        return f"Q_{group.order}"
    split = _direct_split(group)
    if split:
        a, b = split
        return f"{structure_label(a)} x {structure_label(b)}"
    semi = _cyclic_complement_split(group)
    if semi:
        kernel, q = semi
        return f"{structure_label(kernel)} : C_{q}"
    return f"grp({group.order})"


def _is_dihedral(group):
    m = group.order // 2
    if group.order % 2 or m < 3:
        return False
    rotations = [x for x in group.sorted_elements if x.order == m]
    if not rotations:
        return False
    r = rotations[0]
    cyc = group.generated_subgroup([r])
    r_inv = r.inverse()
    for s in group.sorted_elements:
        if s.order == 2 and s not in cyc.elements and s * r * s.inverse() == r_inv:
            return True
    return False


def _is_generalized_quaternion(group):
    n = group.order
    if n < 8 or n & (n - 1):
        return False
    involutions = sum(1 for x in group.elements if x.order == 2)
    if involutions != 1:
        return False
    return any(x.order == n // 2 for x in group.elements)


def _direct_split(group):
    normals = group.normal_subgroups
    proper = [s for s in normals if 1 < s.order < group.order]
    for a in proper:
        for b in reversed(proper):
            if a.order * b.order != group.order:
                continue
            if len(a.elements & b.elements) == 1:
                return a, b
    return None


def _cyclic_complement_split(group):
    normals = [s for s in group.normal_subgroups if 1 < s.order < group.order]
    for kernel in reversed(normals):
        q = group.order // kernel.order
        for y in group.sorted_elements:
            if y.order != q:
                continue
            cyc = group.generated_subgroup([y])
            if len(cyc.elements & kernel.elements) == 1:
                return kernel, q
    return None
