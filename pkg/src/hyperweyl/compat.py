"""Compatibility of level-2 permutations, checked in S([n]^3)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainMismatch, UnsupportedLevel
from .hyper import HyperPerm, tensor_images
from .perm import inverse_images


def _check_pair(u: HyperPerm, v: HyperPerm):
    if u.t != 2 or v.t != 2:
        raise UnsupportedLevel("compatibility is defined for level 2 only")
    if u.n != v.n:
        raise DomainMismatch(f"alphabets {u.n} and {v.n} differ")


def compatible_tables(u: Sequence[int], v: Sequence[int], n: int) -> bool:
    """(v⊗1)(1⊗u) == (1⊗u)(v⊗1) on all of [n]^3, with 0-based tables."""
    nn = n * n
    usplit = [divmod(w, n) for w in u]
    for x in range(n):
        xo = x * n
        for y in range(n):
            vxy = v[xo + y]
            x2 = vxy // n
            y2o = (vxy % n) * n
            yo = y * n
            for z in range(n):
                y1, z1 = usplit[yo + z]
                if v[xo + y1] * n + z1 != x2 * nn + u[y2o + z]:
                    return False
    return True


def compatible(u: HyperPerm, v: HyperPerm) -> bool:
    """True iff u is compatible with v."""
    _check_pair(u, v)
    return compatible_tables(u.images, v.images, u.n)


def bicompatible(u: HyperPerm, v: HyperPerm) -> bool:
    return compatible(u, v) and compatible(v, u)


@dataclass(frozen=True)
class FirstFailure:
    i: int
    j: int

    def __bool__(self) -> bool:
        return False


class _Ok:
    def __bool__(self) -> bool:
        return True

    def __repr__(self) -> str:
        return "Ok"


Ok = _Ok()


def bicompatible_set(perms: Sequence[HyperPerm]):
    """Ok if every ordered pair (i, j), i == j included, is compatible.

    Otherwise FirstFailure(i, j) meaning perms[i] is not compatible with perms[j].
    """
    for u in perms:
        _check_pair(u, perms[0])
    n = perms[0].n if perms else 2
    tables = [p.images for p in perms]
    for i, a in enumerate(tables):
        for j, b in enumerate(tables):
            if not compatible_tables(a, b, n):
                return FirstFailure(i, j)
    return Ok


def cocycle_compose(u: HyperPerm, v: HyperPerm) -> HyperPerm:
    """(u⊗1)(1⊗u)(v⊗1)(1⊗u)⁻¹ in S([n]^3), the level-3 index of λ_u ∘ λ_v."""
    _check_pair(u, v)
    return HyperPerm.from_images(cocycle_table(u.images, v.images, u.n), u.n, 3, check=False)


def cocycle_table(u: Sequence[int], v: Sequence[int], n: int) -> tuple[int, ...]:
    ident = range(n)
    u1 = tensor_images(u, ident)
    one_u = tensor_images(ident, u)
    v1 = tensor_images(v, ident)
    one_uinv = inverse_images(one_u)
    return tuple(u1[one_u[v1[one_uinv[x]]]] for x in range(n ** 3))


def lambda_product(u: Sequence[int], v: Sequence[int], n: int) -> tuple[int, ...] | None:
    """Level-2 table w with λ_u ∘ λ_v = λ_w when the cocycle is of the form w⊗1.

    Returns None if the level-3 composite moves the last coordinate or
    depends on it.
    """
    w3 = cocycle_table(u, v, n)
    out = []
    for xy in range(n * n):
        base = w3[xy * n]
        if base % n:
            return None
        for z in range(1, n):
            if w3[xy * n + z] != base + z:
                return None
        out.append(base // n)
    return tuple(out)


def compat_sides(u: HyperPerm, v: HyperPerm, point: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """((v⊗1)(1⊗u)(p), (1⊗u)(v⊗1)(p)) for a point p of [n]^3."""
    _check_pair(u, v)
    x, y, z = point
    a, b = u((y, z))
    lhs = v((x, a)) + (b,)
    c, d = v((x, y))
    rhs = (c,) + u((d, z))
    return lhs, rhs
