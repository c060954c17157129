"""Fully enumerated finite permutation groups.

Every group is stored with its complete element set (closure of the
generators), which keeps all structural questions -- centers, classes,
normal subgroups, derived series -- answerable by direct enumeration.
The hard order cap keeps accidental huge closures from running away.
"""

from __future__ import annotations

import math
from functools import cached_property

from .perm import Permutation

DEFAULT_ORDER_CAP = 10_000


class ClosureCapExceededError(RuntimeError):
    """Generated group grew past the configured order cap."""


class NotAMemberError(ValueError):
    """Element does not belong to the group."""


def _closure_set(generators, degree, cap):
    identity = Permutation.identity(degree)
    elements = {identity}
    frontier = [identity]
    gens = list(generators)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
                    if len(elements) > cap:
                        raise ClosureCapExceededError(
                            f"closure exceeded cap of {cap} elements"
                        )
        frontier = nxt
    return elements


def is_prime_power(m):
    """True for 1 and for p^k with p prime, k >= 1."""
    if m == 1:
        return True
    p = _smallest_prime_factor(m)
    while m % p == 0:
        m //= p
    return m == 1


def _smallest_prime_factor(m):
    if m % 2 == 0:
        return 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return f
        f += 2
    return m


def prime_factors(m):
    """Sorted distinct prime divisors of m."""
    out = []
    while m > 1:
        p = _smallest_prime_factor(m)
        out.append(p)
        while m % p == 0:
            m //= p
    return out


class ConjClassRecord:
    """One G-conjugacy class: representative, size, element order."""

    __slots__ = ("representative", "size", "element_order", "elements")

    def __init__(self, representative, elements):
        self.representative = representative
        self.elements = frozenset(elements)
        self.size = len(self.elements)
        self.element_order = representative.order

    @property
    def is_central(self):
        return self.size == 1

    @property
    def is_prime_power_order(self):
        return is_prime_power(self.element_order)

    def __repr__(self):
        return (
            f"ConjClassRecord(size={self.size}, order={self.element_order}, "
            f"rep={self.representative!r})"
        )


class FiniteGroup:
    """A finite group of permutations, fully enumerated.

    Immutable after construction; all derived data is cached lazily.
    """

    def __init__(self, generators, degree, label=None, cap=DEFAULT_ORDER_CAP,
                 _elements=None):
        self.degree = degree
        self.generators = tuple(generators)
        for g in self.generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != {degree}")
        if _elements is None:
            _elements = _closure_set(self.generators, degree, cap)
        self.elements = frozenset(_elements)
        self.order = len(self.elements)
        self.label = label

    @classmethod
    def from_elements(cls, elements, degree, label=None):
        """Wrap an already closed element set (no closure re-run)."""
        group = cls((), degree, label=label, _elements=frozenset(elements))
        return group

    def __contains__(self, x):
        return x in self.elements

    def __len__(self):
        return self.order

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        name = self.label or "group"
        return f"<{name}: order {self.order}, degree {self.degree}>"

    @cached_property
    def identity(self):
        return Permutation.identity(self.degree)

    @cached_property
    def sorted_elements(self):
        """Deterministic element ordering (lexicographic on image tuples)."""
        return sorted(self.elements)

    @cached_property
    def small_generating_set(self):
        """Greedy minimal generating sequence in element order."""
        if self.order == 1:
            return ()
        gens = []
        current = {self.identity}
        for x in self.sorted_elements:
            if x in current:
                continue
            gens.append(x)
            current = _closure_set(gens, self.degree, self.order)
            if len(current) == self.order:
                break
        return tuple(gens)

    def subgroup(self, elements, label=None):
        """Subgroup from a subset already known to be closed."""
        elements = frozenset(elements)
        sub = FiniteGroup.from_elements(elements, self.degree, label=label)
        sub.generators = sub.small_generating_set
        return sub

    def generated_subgroup(self, seed, label=None):
        """Subgroup generated by the given elements of the group."""
        elements = _closure_set(seed, self.degree, self.order)
        return self.subgroup(elements, label=label)

    @cached_property
    def is_abelian(self):
        gens = self.small_generating_set
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    @cached_property
    def center(self):
        gens = self.small_generating_set
        central = [x for x in self.sorted_elements
                   if all(x * g == g * x for g in gens)]
        return self.subgroup(central, label="center")

    def centralizer(self, x):
        if x not in self.elements:
            raise NotAMemberError(f"{x!r} is not in the group")
        members = [y for y in self.sorted_elements if x * y == y * x]
        return self.subgroup(members)

    @cached_property
    def conjugacy_classes(self):
        """Classes sorted by (size, minimal representative)."""
        gens = self.small_generating_set
        unseen = set(self.elements)
        classes = []
        for x in self.sorted_elements:
            if x not in unseen:
                continue
            orbit = {x}
            frontier = [x]
            while frontier:
                nxt = []
                for y in frontier:
                    for g in gens:
                        z = g * y * g.inverse()
                        if z not in orbit:
                            orbit.add(z)
                            nxt.append(z)
                frontier = nxt
            unseen -= orbit
            classes.append(ConjClassRecord(min(orbit), orbit))
        classes.sort(key=lambda c: (c.size, c.representative.images))
        return classes

    def class_of(self, x):
        if x not in self.elements:
            raise NotAMemberError(f"{x!r} is not in the group")
        for record in self.conjugacy_classes:
            if x in record.elements:
                return record
        raise AssertionError("classes do not partition the group")

    @cached_property
    def class_sizes(self):
        return tuple(c.size for c in self.conjugacy_classes)

    def is_normal(self, sub):
        """Whether the subgroup (given as FiniteGroup) is normal in self."""
        if not sub.elements <= self.elements:
            return False
        return all(
            g * x * g.inverse() in sub.elements
            for g in self.small_generating_set
            for x in sub.small_generating_set
        )

    @cached_property
    def normal_subgroups(self):
        """All normal subgroups, each exactly once, sorted by order.

        Every normal subgroup is generated by the conjugacy classes it
        contains, so the full list is the join-closure of the normal
        closures of single classes.
        """
        atoms = []
        seen = set()
        for record in self.conjugacy_classes:
            closure = _closure_set(record.elements, self.degree, self.order)
            frozen = frozenset(closure)
            if frozen not in seen:
                seen.add(frozen)
                atoms.append(frozen)
        found = {frozenset([self.identity])}
        frontier = list(found)
        while frontier:
            nxt = []
            for known in frontier:
                for atom in atoms:
                    if atom <= known:
                        continue
                    join = frozenset(
                        _closure_set(known | atom, self.degree, self.order)
                    )
                    if join not in found:
                        found.add(join)
                        nxt.append(join)
            frontier = nxt
        subs = [self.subgroup(members) for members in found]
        subs.sort(key=lambda s: (s.order, sorted(p.images for p in s.elements)))
        return subs

    @cached_property
    def derived_subgroup(self):
        gens = self.small_generating_set
        commutators = {
            a * b * a.inverse() * b.inverse()
            for a in self.elements
            for b in gens
        }
        return self.generated_subgroup(commutators, label="derived")

    @cached_property
    def is_solvable(self):
        current = self
        while current.order > 1:
            nxt = current.derived_subgroup
            if nxt.order == current.order:
                return False
            current = nxt
        return True

    @cached_property
    def element_order_histogram(self):
        counts = {}
        for x in self.elements:
            counts[x.order] = counts.get(x.order, 0) + 1
        return tuple(sorted(counts.items()))

    @cached_property
    def exponent(self):
        return math.lcm(*(x.order for x in self.elements))

    @cached_property
    def abelian_invariants(self):
        """Invariant factors (d_1 | d_2 | ...) of an abelian group.

        Derived from the element-order counting function, which pins the
        primary decomposition exactly.
        """
        if not self.is_abelian:
            raise ValueError("abelian invariants need an abelian group")
        if self.order == 1:
            return ()
        primary = {}
        for p in prime_factors(self.order):
            # c_i = log_p #{x : x^(p^i) = 1} pins the partition of the
            # p-primary component: (c_i - c_{i-1}) counts parts >= i.
            p_part = self._p_part_order(p)
            logs = [0]
            while p ** logs[-1] != p_part:
                q = p ** len(logs)
                count = sum(1 for x in self.elements if q % x.order == 0)
                logs.append(round(math.log(count, p)))
            steps = [logs[i] - logs[i - 1] for i in range(1, len(logs))]
            rank = steps[0]
            parts = [sum(1 for s in steps if s > r) for r in range(rank)]
            primary[p] = sorted(p ** e for e in parts)
        # Merge primary parts into invariant factors, largest last.
        ranks = max(len(v) for v in primary.values())
        invariants = []
        for i in range(1, ranks + 1):
            d = 1
            for p, factors in primary.items():
                if len(factors) >= i:
                    d *= factors[-i]
            invariants.append(d)
        return tuple(sorted(invariants))

    def _p_part_order(self, p):
        m = self.order
        q = 1
        while m % p == 0:
            m //= p
            q *= p
        return q


def closure(generators, degree, label=None, cap=DEFAULT_ORDER_CAP):
    """Group generated by the given permutations on {1..degree}."""
    return FiniteGroup(generators, degree, label=label, cap=cap)
