"""Unit-fraction decompositions of 1/n and candidate-order generation.

All arithmetic is exact rational; the outputs drive the catalog scans,
so over-approximation is fine but a missed solution never is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bounds import DomainError, lemma21_bounds, thm311_bound, thm322_bound, thm322_intervals


@dataclass(frozen=True)
class FractionSolution:
    """Nondecreasing parts with sum of reciprocals exactly 1/n."""

    n: int
    parts: tuple[int, ...]

    def __post_init__(self):
        total = sum(Fraction(1, p) for p in self.parts)
        if total != Fraction(1, self.n):
            raise ValueError(f"parts {self.parts} do not sum to 1/{self.n}")


@dataclass(frozen=True)
class CandidateOrder:
    """A candidate |G| with the class-equation witnesses that admit it."""

    c: int
    witnesses: tuple[tuple[int, ...], ...]


def unit_fraction_solutions(n: int, parts: int) -> list[FractionSolution]:
    """All nondecreasing tuples (n_1..n_parts) with sum 1/n_i = 1/n.

    Emitted exactly once each, in lexicographic order.  The per-index
    caps of the bounding lemma are applied on top of the natural search
    limits; every solution provably satisfies them.
    """
    if n < 1 or parts < 1:
        raise DomainError("n and parts must be >= 1")
    caps = lemma21_bounds(n, parts - 1) if parts > 1 else [n]
    out: list[FractionSolution] = []

    def descend(remaining: Fraction, k: int, lo: int, prefix: tuple[int, ...]):
        if k == parts - 1:
            if remaining.numerator == 1 and remaining.denominator >= lo \
                    and remaining.denominator <= caps[k]:
                out.append(FractionSolution(n, prefix + (remaining.denominator,)))
            return
        left = parts - k
        # need 1/x < remaining (strict: later parts are positive) and
        # remaining <= left/x (nondecreasing tail).
        start = max(lo, remaining.denominator // remaining.numerator + 1)
        stop = min(caps[k], (left * remaining.denominator) // remaining.numerator)
        for x in range(start, stop + 1):
            descend(remaining - Fraction(1, x), k + 1, x, prefix + (x,))

    descend(Fraction(1, n), 0, 1, ())
    return out


def _divisors(c):
    small, large = [], []
    f = 1
    while f * f <= c:
        if c % f == 0:
            small.append(f)
            if f != c // f:
                large.append(c // f)
        f += 1
    return small + large[::-1]


def candidate_orders_one_class(n: int) -> list[CandidateOrder]:
    """Orders that can carry an index-n normal subgroup with one
    non-central class, by integral satisfiability of the class equation.

    For |G| = c: |N| = c/n must split as z + d with z = |Z(G) cap N|
    dividing |N|, d = |x^G| > 1 dividing c, the smaller of the two
    unit-fraction denominators at most 2n, and z*d < c (the strict
    product bound on |G|).
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    bound = thm311_bound(n).bound_G
    found: dict[int, list[tuple[int, int]]] = {}
    for c in range(n, bound + 1, n):
        m = c // n
        for d in _divisors(c):
            if d <= 1 or d >= m:
                continue
            z = m - d
            if m % z:
                continue
            if min(c // z, c // d) > 2 * n:
                continue
            if z * d >= c:
                continue
            found.setdefault(c, []).append((z, d))
    return [CandidateOrder(c, tuple(w)) for c, w in sorted(found.items())]


def candidate_orders_two_coprime(n: int) -> list[CandidateOrder]:
    """Orders admitting two non-central classes of coprime sizes at index n.

    The class equation with trivial central part reads
    1/n = 1/|G| + 1/n_1 + 1/n_2, so |G| is determined exactly by the
    centralizer orders (n_1, n_2); both intervals come from the
    two-coprime-class theorem.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    bound = thm322_bound(n).bound_G
    found: dict[int, list[tuple[int, int]]] = {}
    for n1 in range(n + 1, 3 * n):
        _, (lo, hi) = thm322_intervals(n, n1)
        for n2 in range(max(lo, n1 + 1), hi + 1):
            rest = Fraction(1, n) - Fraction(1, n1) - Fraction(1, n2)
            if rest <= 0 or rest.numerator != 1:
                continue
            c = rest.denominator
            if c > bound or c % n or c % n1 or c % n2:
                continue
            s1, s2 = c // n1, c // n2
            if s1 <= 1 or s2 <= 1 or math.gcd(s1, s2) != 1:
                continue
            found.setdefault(c, []).append((n1, n2))
    return [CandidateOrder(c, tuple(w)) for c, w in sorted(found.items())]
