"""Permutations on {1..degree} represented as image tuples."""

from __future__ import annotations

import math
from functools import cached_property


class InvalidPermutationError(ValueError):
    """Image list is not a bijection on {1..degree}."""


class Permutation:
    """An element of Sym({1..degree}).

    ``images[i-1]`` is the image of point ``i``.  Composition is
    left-to-right in function application order: ``(p * q)(i) = p(q(i))``.
    """

    __slots__ = ("images", "__dict__")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise InvalidPermutationError(f"not a bijection on 1..{n}: {images}")
        self.images = images

    @property
    def degree(self):
        return len(self.images)

    @classmethod
    def identity(cls, degree):
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, cycles, degree):
        """Build from disjoint (or not) cycles of 1-based points.

        Non-disjoint cycles are applied right-to-left, matching composition.
        """
        result = cls.identity(degree)
        for cycle in reversed(list(cycles)):
            images = list(range(1, degree + 1))
            for a, b in zip(cycle, cycle[1:]):
                if not (1 <= a <= degree):
                    raise InvalidPermutationError(f"point {a} out of range 1..{degree}")
                images[a - 1] = b
            if cycle:
                if not (1 <= cycle[-1] <= degree):
                    raise InvalidPermutationError(
                        f"point {cycle[-1]} out of range 1..{degree}"
                    )
                images[cycle[-1] - 1] = cycle[0]
            result = cls(images) * result
        return result

    def __call__(self, point):
        return self.images[point - 1]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        mine = self.images
        return Permutation(mine[j - 1] for j in other.images)

    def inverse(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def conjugate_by(self, g):
        """g * self * g^-1."""
        return g * self * g.inverse()

    def cycles(self, include_fixed=False):
        """Disjoint cycle decomposition, each cycle led by its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            point = self.images[start - 1]
            while point != start:
                cycle.append(point)
                seen[point - 1] = True
                point = self.images[point - 1]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    @cached_property
    def order(self):
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images, start=1))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __le__(self, other):
        return self.images <= other.images

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return f"Perm(id, deg={self.degree})"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
