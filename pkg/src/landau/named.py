"""Constructors for the named groups used throughout the classification tables."""

from __future__ import annotations

from .group import FiniteGroup, _smallest_prime_factor, closure
from .perm import Permutation


class UnsupportedSpecError(ValueError):
    """Requested named group is outside the supported constructions."""


def cyclic(m, label=None):
    if m < 1:
        raise UnsupportedSpecError("cyclic order must be >= 1")
    if m == 1:
        return closure([], 1, label=label or "C_1")
    gen = Permutation.from_cycles([tuple(range(1, m + 1))], m)
    return closure([gen], m, label=label or f"C_{m}")


def dihedral(order, label=None):
    """Dihedral group of the given (even) order; D_4 is the Klein group."""
    if order < 2 or order % 2:
        raise UnsupportedSpecError("dihedral order must be even and >= 2")
    m = order // 2
    if m == 1:
        return cyclic(2, label=label or "C_2")
    if m == 2:
        a = Permutation.from_cycles([(1, 2)], 4)
        b = Permutation.from_cycles([(3, 4)], 4)
        return closure([a, b], 4, label=label or "C_2 x C_2")
    rot = Permutation.from_cycles([tuple(range(1, m + 1))], m)
    refl = Permutation([1] + list(range(m, 1, -1)))
    return closure([rot, refl], m, label=label or f"D_{order}")


_QUAT_UNITS = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

_QUAT_SIGN_TABLE = {
    ("i", "i"): ("-1",), ("j", "j"): ("-1",), ("k", "k"): ("-1",),
    ("i", "j"): ("k",), ("j", "i"): ("-k",),
    ("j", "k"): ("i",), ("k", "j"): ("-i",),
    ("k", "i"): ("j",), ("i", "k"): ("-j",),
}


def _quat_mult(a, b):
    sign = 1
    if a.startswith("-"):
        sign, a = -sign, a[1:]
    if b.startswith("-"):
        sign, b = -sign, b[1:]
    if a == "1":
        base = b
    elif b == "1":
        base = a
    else:
        base = _QUAT_SIGN_TABLE[(a, b)][0]
        if base.startswith("-"):
            sign, base = -sign, base[1:]
    return base if sign == 1 else "-" + base


def quaternion(order, label=None):
    """The quaternion group Q_8 via its regular representation."""
    if order != 8:
        raise UnsupportedSpecError("only quaternion(8) is supported")
    index = {u: n for n, u in enumerate(_QUAT_UNITS, start=1)}
    gens = []
    for g in ("i", "j"):
        gens.append(Permutation(index[_quat_mult(g, u)] for u in _QUAT_UNITS))
    return closure(gens, 8, label=label or "Q_8")


def symmetric(m, label=None):
    if not 1 <= m <= 6:
        raise UnsupportedSpecError("symmetric(m) supports 1 <= m <= 6")
    if m == 1:
        return closure([], 1, label=label or "S_1")
    gens = [Permutation.from_cycles([(1, 2)], m)]
    if m > 2:
        gens.append(Permutation.from_cycles([tuple(range(1, m + 1))], m))
    return closure(gens, m, label=label or f"S_{m}")


def alternating(m, label=None):
    if not 1 <= m <= 6:
        raise UnsupportedSpecError("alternating(m) supports 1 <= m <= 6")
    if m <= 2:
        return closure([], max(m, 1), label=label or f"A_{m}")
    gens = [Permutation.from_cycles([(1, 2, k)], m) for k in range(3, m + 1)]
    return closure(gens, m, label=label or f"A_{m}")


def direct_product(a, b, label=None):
    """Direct product acting on the disjoint union of the factors' points."""
    degree = a.degree + b.degree
    gens = []
    for g in (a.small_generating_set or a.generators):
        gens.append(Permutation(list(g.images) + list(range(a.degree + 1, degree + 1))))
    for g in (b.small_generating_set or b.generators):
        gens.append(Permutation(list(range(1, a.degree + 1))
                                + [i + a.degree for i in g.images]))
    if label is None and a.label and b.label:
        label = f"{a.label} x {b.label}"
    return closure(gens, degree, label=label)


def _mult_order(e, p):
    value, k = e % p, 1
    while value != 1:
        value = value * e % p
        k += 1
        if k > p:
            raise UnsupportedSpecError("exponent has no multiplicative order")
    return k


def semidirect_cyclic(p, q, action_exponent, label=None):
    """C_p : C_q with the C_q generator acting as x -> x^e on C_p.

    Faithfully represented on the p residues; requires e to have
    multiplicative order exactly q modulo the prime p.
    """
    if p < 2 or _smallest_prime_factor(p) != p:
        raise UnsupportedSpecError("p must be prime")
    e = action_exponent % p
    if e == 0:
        raise UnsupportedSpecError("action exponent must be invertible mod p")
    if _mult_order(e, p) != q:
        raise UnsupportedSpecError(
            f"exponent {action_exponent} has order {_mult_order(e, p)} mod {p}, not {q}"
        )
    # Point i (1..p) stands for the residue i mod p.
    shift = Permutation((i % p) + 1 for i in range(1, p + 1))
    act = Permutation(((i % p) * e - 1) % p + 1 for i in range(1, p + 1))
    return closure([shift, act], p, label=label or f"C_{p} : C_{q}")


def sl23(label=None):
    """SL(2,3) acting on the eight nonzero vectors of F_3^2."""
    vectors = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    index = {v: n for n, v in enumerate(vectors, start=1)}

    def matrix_perm(m):
        images = []
        for (x, y) in vectors:
            images.append(index[((m[0][0] * x + m[0][1] * y) % 3,
                                 (m[1][0] * x + m[1][1] * y) % 3)])
        return Permutation(images)

    s = matrix_perm([[0, 2], [1, 0]])
    t = matrix_perm([[1, 1], [0, 1]])
    return closure([s, t], 8, label=label or "SL(2,3)")


_CONSTRUCTORS = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "quaternion": quaternion,
    "symmetric": symmetric,
    "alternating": alternating,
    "semidirect_cyclic": semidirect_cyclic,
    "sl23": sl23,
}


def construct_named(name, *params):
    """Dispatch on a construction name; direct_product takes nested specs.

    Nested specs are (name, *params) tuples, e.g.
    ``construct_named("direct_product", ("cyclic", 3), ("symmetric", 3))``.
    """
    if name == "direct_product":
        if len(params) != 2:
            raise UnsupportedSpecError("direct_product takes two factor specs")
        factors = []
        for spec in params:
            if isinstance(spec, FiniteGroup):
                factors.append(spec)
            else:
                factors.append(construct_named(spec[0], *spec[1:]))
        return direct_product(*factors)
    try:
        builder = _CONSTRUCTORS[name]
    except KeyError:
        raise UnsupportedSpecError(f"unknown construction {name!r}") from None
    return builder(*params)
