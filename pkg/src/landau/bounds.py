"""Exact integer evaluation of the order bounds used by the classifier.

Everything here is arbitrary-precision: the general bound grows like
n^(2^s) and overflows machine words almost immediately.
"""

from __future__ import annotations

from dataclasses import dataclass


class DomainError(ValueError):
    """Bound parameters outside their domain (need positive integers)."""


@dataclass(frozen=True)
class BoundReport:
    """An evaluated order bound: |G| and |N| limits for given parameters."""

    source: str
    parameters: dict
    bound_G: int
    bound_N: int
    strict: bool


def _check_positive(**params):
    for name, value in params.items():
        if not isinstance(value, int) or value < 1:
            raise DomainError(f"{name} must be a positive integer, got {value!r}")


def lemma21_bounds(n: int, s: int) -> list[int]:
    """Per-index bounds b_1..b_{s+1} for nondecreasing unit-fraction parts.

    If 1/n = 1/n_1 + ... + 1/n_{s+1} with n_1 <= ... <= n_{s+1}, then
    n_k <= b_k for every k.
    """
    _check_positive(n=n, s=s)
    bounds = [n * (s + 1)]
    for k in range(2, s + 2):
        value = n ** (2 ** (k - 1)) * (s + 2 - k)
        for i in range(k - 1):
            value *= (s + 1 - i) ** (2 ** (k - 2 - i))
        bounds.append(value)
    return bounds


def theoremA_bounds(n: int, s: int) -> BoundReport:
    """General strict bound on |G| for index n and s non-central classes."""
    _check_positive(n=n, s=s)
    value = n ** (2 ** s + 1) * (s + 1)
    for i in range(s):
        value *= (s + 1 - i) ** (2 ** (s - 1 - i))
    return BoundReport(
        source="theorem-A",
        parameters={"n": n, "s": s},
        bound_G=value,
        bound_N=value // n,
        strict=True,
    )


def thm311_bound(n: int) -> BoundReport:
    """Strict bound n(n+1)^2 for the single non-central class case."""
    _check_positive(n=n)
    value = n * (n + 1) ** 2
    return BoundReport(
        source="one-class",
        parameters={"n": n},
        bound_G=value,
        bound_N=value // n,
        strict=True,
    )


def thm322_intervals(n: int, n1: int | None = None):
    """Centralizer-order intervals for the two-coprime-class case.

    Returns (n1_range, n2_range) as inclusive integer pairs; the n2 range
    is computed for the given n1 and is None when n1 is not supplied.
    Floors coincide with truncation since all quantities are positive.
    """
    _check_positive(n=n)
    n1_range = (n + 1, 3 * n - 1)
    if n1 is None:
        return n1_range, None
    if not n1_range[0] <= n1 <= n1_range[1]:
        raise DomainError(f"n1={n1} outside [{n1_range[0]}, {n1_range[1]}]")
    lo = (n * n1) // (n1 - n) + 1
    hi = (2 * n1 * n) // (n1 - n) - 1
    return n1_range, (lo, hi)


def thm322_bound(n: int) -> BoundReport:
    """Non-strict bound n(n+1)(n^2+n+1) for two coprime non-central classes."""
    _check_positive(n=n)
    value = n * (n + 1) * (n * n + n + 1)
    return BoundReport(
        source="two-coprime",
        parameters={"n": n},
        bound_G=value,
        bound_N=value // n,
        strict=False,
    )


def gamma_kpp(k: int) -> int:
    """gamma(k): solvable-group order bound from the prime-power class count.

    gamma(1) = 1 and gamma(k) = k * gamma(k-1)^2; the recursion is
    cross-checked against the closed product prod (k-i)^(2^i).
    """
    _check_positive(k=k)
    rec = 1
    for j in range(2, k + 1):
        rec = j * rec * rec
    closed = 1
    for i in range(k):
        closed *= (k - i) ** (2 ** i)
    if rec != closed:
        raise AssertionError(f"gamma recursion/product disagree at k={k}")
    return rec


def cor49_bounds(n: int, k: int) -> BoundReport:
    """Bounds for solvable G with index-n normal subgroup and kpp count k."""
    _check_positive(n=n, k=k)
    bound_n = gamma_kpp(n * k)
    return BoundReport(
        source="kpp-solvable",
        parameters={"n": n, "k": k},
        bound_G=n * bound_n,
        bound_N=bound_n,
        strict=False,
    )


def iterative_kpp_bound(k: int, max_order_below: int) -> int:
    """Level-k order cap given the largest order already classified below k.

    A minimal normal subgroup has at most k * |G/N| prime-power-order
    classes and is abelian of prime-power order, so
    |G| <= k * max_order_below^2.
    """
    _check_positive(k=k, max_order_below=max_order_below)
    return k * max_order_below * max_order_below
