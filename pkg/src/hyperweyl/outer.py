"""Outer equivalence of level-2 permutations: u ~ (z⊗1) u (1⊗z⁻¹), z in S_n."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from .errors import UnsupportedLevel
from .groups import GroupClosure
from .hyper import HyperPerm, tensor_images
from .perm import Perm, inverse_images

Key = tuple[int, ...]


@lru_cache(maxsize=None)
def _conjugators(n: int) -> tuple[tuple[Key, Key], ...]:
    """Pairs (z⊗1, 1⊗z⁻¹) for every z in S_n."""
    ident = tuple(range(n))
    out = []
    for z in permutations(range(n)):
        out.append((tensor_images(z, ident), tensor_images(ident, inverse_images(z))))
    return tuple(out)


def conjugate(u: HyperPerm, z: Perm) -> HyperPerm:
    """(z⊗1) u (1⊗z⁻¹)."""
    n = u.n
    zl = tensor_images(z.images, range(n))
    zr = tensor_images(range(n), inverse_images(z.images))
    return HyperPerm.from_images([zl[u.images[x]] for x in zr], n, 2, check=False)


def _orbit(images: Key, n: int) -> set[Key]:
    return {tuple(zl[images[x]] for x in zr) for zl, zr in _conjugators(n)}


def canon_key(images: Key, n: int) -> Key:
    return min(tuple(zl[images[x]] for x in zr) for zl, zr in _conjugators(n))


@dataclass(frozen=True)
class OuterClass:
    canonical: HyperPerm
    orbit_size: int

    @property
    def key(self) -> Key:
        return self.canonical.images


def canon(u: HyperPerm) -> OuterClass:
    if u.t != 2:
        raise UnsupportedLevel("outer classes are defined at level 2")
    orbit = _orbit(u.images, u.n)
    return OuterClass(HyperPerm.from_images(min(orbit), u.n, 2, check=False), len(orbit))


def is_inner(u: HyperPerm) -> Perm | None:
    """p with u = p ⊗ p⁻¹, read off from the first column, else None."""
    if u.t != 2:
        raise UnsupportedLevel("inner test is defined at level 2")
    n = u.n
    imgs = u.images
    p = [imgs[x * n] // n for x in range(n)]
    if sorted(p) != list(range(n)):
        return None
    if tensor_images(p, inverse_images(p)) != imgs:
        return None
    return Perm(p, check=False)


def pi_image(G: GroupClosure | Iterable[Key], n: int | None = None) -> frozenset[Key]:
    """Set of canonical outer-class keys of the elements of G."""
    if isinstance(G, GroupClosure):
        n = G.n
        els = G.elements
    else:
        els = list(G)
    return frozenset(canon_key(e, n) for e in els)


def pi_sorted(G: GroupClosure) -> list[Key]:
    return sorted(pi_image(G))


def pi_equal(G: GroupClosure, H: GroupClosure) -> bool:
    return pi_image(G) == pi_image(H)


def kernel_trivial(G: GroupClosure) -> bool:
    return len(pi_image(G)) == G.order


def inner_elements(G: GroupClosure) -> list[Key]:
    n = G.n
    return [e for e in G.elements if is_inner(HyperPerm.from_images(e, n, 2, check=False)) is not None]


def canon_many(perms: Sequence[HyperPerm]) -> list[OuterClass]:
    return [canon(u) for u in perms]
