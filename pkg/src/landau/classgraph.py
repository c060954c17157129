"""The common-divisor graph on non-central G-classes in N, and the
structure checks for its one-vertex and two-vertex-edgeless shapes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .embedding import NormalEmbedding
from .group import is_prime_power, prime_factors


class WrongGraphShapeError(ValueError):
    """Graph does not have the vertex/edge shape the check requires."""


@dataclass(frozen=True)
class ClassGraph:
    """Vertices are non-central G-classes in N; edges join classes whose
    sizes share a prime divisor."""

    owner: NormalEmbedding
    vertices: tuple  # ConjClassRecord, ascending (size, element order)
    edges: tuple[tuple[int, int], ...]

    @property
    def vertex_count(self):
        return len(self.vertices)

    @property
    def edge_count(self):
        return len(self.edges)


@dataclass(frozen=True)
class StructureReport:
    """Outcome of one structure theorem applied to an embedding."""

    ok: bool
    branch: str | None
    checks: tuple[tuple[str, bool, str], ...] = field(default_factory=tuple)

    def failures(self):
        return [c for c in self.checks if not c[1]]


def build_gamma(e: NormalEmbedding) -> ClassGraph:
    vertices = sorted(e.noncentral_classes,
                      key=lambda c: (c.size, c.element_order, c.representative.images))
    edges = tuple(
        (i, j)
        for i in range(len(vertices))
        for j in range(i + 1, len(vertices))
        if math.gcd(vertices[i].size, vertices[j].size) > 1
    )
    return ClassGraph(owner=e, vertices=tuple(vertices), edges=edges)


def _central_part(e):
    return e.ambient.center.elements & e.subgroup.elements


def verify_one_vertex(e: NormalEmbedding) -> StructureReport:
    """One vertex forces N to be a p-group with N/(N cap Z(G))
    elementary abelian; verified without building the quotient."""
    if len(e.noncentral_classes) != 1:
        raise WrongGraphShapeError(
            f"expected 1 non-central class, found {len(e.noncentral_classes)}"
        )
    n_order = e.subgroup.order
    primes = prime_factors(n_order)
    checks = []
    checks.append((
        "N is a p-group",
        is_prime_power(n_order) and n_order > 1,
        f"|N| = {n_order}",
    ))
    if len(primes) == 1:
        p = primes[0]
        central = _central_part(e)
        elements = e.subgroup.elements
        power_ok = all(_power(x, p) in central for x in elements)
        checks.append((
            "p-th powers land in N cap Z(G)",
            power_ok,
            f"p = {p}",
        ))
        comm_ok = all(
            x * y * x.inverse() * y.inverse() in central
            for x in elements for y in e.subgroup.small_generating_set
        )
        checks.append((
            "N/(N cap Z(G)) is abelian",
            comm_ok,
            "all commutators of N lie in N cap Z(G)",
        ))
    ok = all(passed for _, passed, _ in checks)
    return StructureReport(ok=ok, branch="p-group" if ok else None,
                           checks=tuple(checks))


def _power(x, k):
    result = x
    for _ in range(k - 1):
        result = result * x
    return result


def check_thm313(g, n) -> StructureReport:
    """One non-central class inside a p-group ambient forces p = 2,
    N abelian, |N| = 2^a with a <= (k+1)/2, and |Z(G) cap N| = |x^G| = 2^(a-1)."""
    if not is_prime_power(g.order) or g.order == 1:
        raise WrongGraphShapeError("ambient group is not a nontrivial p-group")
    e = NormalEmbedding(g, n)
    if len(e.noncentral_classes) != 1:
        raise WrongGraphShapeError(
            f"expected 1 non-central class, found {len(e.noncentral_classes)}"
        )
    p = prime_factors(g.order)[0]
    k = g.order.bit_length() - 1 if p == 2 else _log(g.order, p)
    a = _log(n.order, p) if is_prime_power(n.order) else None
    class_size = e.noncentral_classes[0].size
    central = len(_central_part(e))
    checks = [
        ("p = 2", p == 2, f"p = {p}"),
        ("N abelian", n.is_abelian, ""),
        ("a <= (k+1)/2", a is not None and 2 * a <= k + 1, f"a = {a}, k = {k}"),
        (
            "|Z(G) cap N| = |x^G| = 2^(a-1)",
            a is not None and central == class_size == 2 ** (a - 1),
            f"central part {central}, class size {class_size}",
        ),
    ]
    ok = all(passed for _, passed, _ in checks)
    return StructureReport(ok=ok, branch="p-group" if ok else None, checks=tuple(checks))


def _log(m, p):
    e = 0
    while m > 1:
        if m % p:
            return None
        m //= p
        e += 1
    return e


def verify_two_vertex_edgeless(e: NormalEmbedding) -> StructureReport:
    """Two coprime non-central classes force Z(G) cap N = 1 and N either
    a 2-group or a Frobenius group K : H with elementary abelian p-kernel
    and cyclic complement of prime order q."""
    sizes = e.noncentral_sizes
    if len(sizes) != 2:
        raise WrongGraphShapeError(f"expected 2 non-central classes, found {len(sizes)}")
    if math.gcd(*sizes) != 1:
        raise WrongGraphShapeError(f"class sizes {sizes} are not coprime")
    checks = []
    central = _central_part(e)
    checks.append(("Z(G) cap N = 1", len(central) == 1, f"|Z(G) cap N| = {len(central)}"))

    n_group = e.subgroup
    branch = None
    if is_prime_power(n_group.order) and n_group.order % 2 == 0:
        branch = "2-group"
        checks.append(("N is a 2-group", True, f"|N| = {n_group.order}"))
    else:
        found = _frobenius_decomposition(n_group)
        if found is None:
            checks.append(("Frobenius decomposition exists", False, ""))
        else:
            p, m, q, kernel, complement = found
            branch = "frobenius"
            checks.append((
                "kernel elementary abelian of order p^m",
                True,
                f"p = {p}, |K| = {p ** m}",
            ))
            checks.append((
                "complement cyclic of prime order q != p",
                True,
                f"q = {q}",
            ))
            fpf = all(
                h * x * h.inverse() != x
                for h in complement if not h.is_identity()
                for x in kernel if not x.is_identity()
            )
            checks.append(("complement acts fixed-point-freely", fpf, ""))
            checks.append((
                "|N| = p^m * q",
                n_group.order == p ** m * q,
                f"|N| = {n_group.order}",
            ))
    ok = branch is not None and all(passed for _, passed, _ in checks)
    return StructureReport(ok=ok, branch=branch, checks=tuple(checks))


def _frobenius_decomposition(n_group):
    """Split N = K : H with K elementary abelian Sylow p and H = <h> of
    prime order q, if N has that exact shape."""
    primes = prime_factors(n_group.order)
    if len(primes) != 2:
        return None
    for p in primes:
        q = next(r for r in primes if r != p)
        if _log(n_group.order // _p_part(n_group.order, p), q) != 1:
            continue
        m = _log(_p_part(n_group.order, p), p)
        kernel_elements = [x for x in n_group.elements
                           if x.is_identity() or x.order == p]
        if len(kernel_elements) != p ** m:
            continue
        kernel = n_group.generated_subgroup(kernel_elements)
        if kernel.order != p ** m or not kernel.is_abelian:
            continue
        if not n_group.is_normal(kernel):
            continue
        h = next((x for x in n_group.sorted_elements if x.order == q), None)
        if h is None:
            continue
        complement = n_group.generated_subgroup([h])
        return p, m, q, kernel.sorted_elements, complement.sorted_elements
    return None


def _p_part(m, p):
    q = 1
    while m % p == 0:
        m //= p
        q *= p
    return q
