"""Permutations of the hypercube [n]^t.

Points are 1-based tuples externally and big-endian mixed-radix indices
internally, so ``u ⊗ 1`` acts blockwise on consecutive runs of indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import DomainError, DomainMismatch, UnsupportedLevel
from .perm import Perm, cycles_of, format_cycles, parse_cycles


@dataclass(frozen=True)
class HyperDomain:
    n: int
    t: int

    def __post_init__(self):
        if self.n < 2 or self.t < 1:
            raise DomainError(f"invalid hypercube n={self.n}, t={self.t}")

    @property
    def size(self) -> int:
        return self.n ** self.t

    def encode(self, point: Sequence[int]) -> int:
        return encode(point, self.n, self.t)

    def decode(self, index: int) -> tuple[int, ...]:
        return decode(index, self.n, self.t)

    def points(self):
        from itertools import product
        return product(range(1, self.n + 1), repeat=self.t)


def encode(point: Sequence[int], n: int, t: int | None = None) -> int:
    if t is not None and len(point) != t:
        raise DomainError(f"expected {t} coordinates, got {len(point)}")
    x = 0
    for c in point:
        if not 1 <= c <= n:
            raise DomainError(f"coordinate {c} outside 1..{n}")
        x = x * n + (c - 1)
    return x


def decode(index: int, n: int, t: int) -> tuple[int, ...]:
    if not 0 <= index < n ** t:
        raise DomainError(f"index {index} outside hypercube of size {n ** t}")
    out = []
    for _ in range(t):
        index, r = divmod(index, n)
        out.append(r + 1)
    return tuple(reversed(out))


class HyperPerm:
    """A permutation of [n]^t; ``u * v`` applies v first."""

    __slots__ = ("domain", "perm")

    def __init__(self, domain: HyperDomain, perm: Perm):
        if perm.degree != domain.size:
            raise DomainMismatch(f"degree {perm.degree} does not match [{domain.n}]^{domain.t}")
        self.domain = domain
        self.perm = perm

    # constructors
    @classmethod
    def from_images(cls, images: Iterable[int], n: int, t: int, check: bool = True) -> "HyperPerm":
        return cls(HyperDomain(n, t), Perm(images, check=check))

    @classmethod
    def identity(cls, n: int, t: int) -> "HyperPerm":
        return cls(HyperDomain(n, t), Perm.identity(n ** t))

    @classmethod
    def parse(cls, text: str, n: int, t: int = 2) -> "HyperPerm":
        return cls(HyperDomain(n, t), parse_cycles(text, n, t))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[Sequence[int]]], n: int, t: int = 2) -> "HyperPerm":
        """Cycles given as sequences of 1-based point tuples (ints when t=1)."""
        pts = [[encode((p,) if t == 1 and isinstance(p, int) else p, n, t) for p in c] for c in cycles]
        return cls(HyperDomain(n, t), Perm.from_cycles(pts, n ** t))

    @classmethod
    def from_function(cls, f: Callable[[tuple[int, ...]], Sequence[int]], n: int, t: int) -> "HyperPerm":
        dom = HyperDomain(n, t)
        return cls(dom, Perm(encode(f(p), n, t) for p in dom.points()))

    @classmethod
    def from_perm(cls, p: Perm) -> "HyperPerm":
        return cls(HyperDomain(p.degree, 1), p)

    # accessors
    @property
    def n(self) -> int:
        return self.domain.n

    @property
    def t(self) -> int:
        return self.domain.t

    @property
    def images(self) -> tuple[int, ...]:
        return self.perm.images

    def __call__(self, point: Sequence[int]) -> tuple[int, ...]:
        return decode(self.perm.images[encode(point, self.n, self.t)], self.n, self.t)

    def __mul__(self, other: "HyperPerm") -> "HyperPerm":
        if self.domain != other.domain:
            raise DomainMismatch(f"{self.domain} vs {other.domain}")
        return HyperPerm(self.domain, self.perm * other.perm)

    def __pow__(self, e: int) -> "HyperPerm":
        return HyperPerm(self.domain, self.perm ** e)

    def __eq__(self, other) -> bool:
        return isinstance(other, HyperPerm) and self.domain == other.domain and self.perm == other.perm

    def __hash__(self) -> int:
        return hash((self.domain, self.perm))

    def __lt__(self, other: "HyperPerm") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"HyperPerm(n={self.n}, t={self.t}, {self.cycles_str()})"

    def __str__(self) -> str:
        return self.cycles_str()

    def inverse(self) -> "HyperPerm":
        return HyperPerm(self.domain, self.perm.inverse())

    def is_identity(self) -> bool:
        return self.perm.is_identity()

    def cycles_str(self) -> str:
        return format_cycles(self.perm, self.n, self.t)

    def cycles(self) -> list[tuple[tuple[int, ...], ...]]:
        return [tuple(decode(x, self.n, self.t) for x in c) for c in cycles_of(self.images)]

    def cycle_type(self) -> tuple[int, ...]:
        return self.perm.cycle_type()

    def order(self) -> int:
        return self.perm.order()


# --- tensor structure ----------------------------------------------------

def tensor_images(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Image table of a ⊗ b on the product domain, big-endian."""
    m = len(b)
    return tuple(x * m + y for x in a for y in b)


def tensor(u: HyperPerm, v: HyperPerm) -> HyperPerm:
    if u.n != v.n:
        raise DomainMismatch(f"alphabets {u.n} and {v.n} differ")
    return HyperPerm.from_images(tensor_images(u.images, v.images), u.n, u.t + v.t, check=False)


def embed_left(u: HyperPerm, k: int) -> HyperPerm:
    """u ⊗ 1^k."""
    if k == 0:
        return u
    return tensor(u, HyperPerm.identity(u.n, k))


def embed_right(u: HyperPerm, k: int) -> HyperPerm:
    """1^k ⊗ u."""
    if k == 0:
        return u
    return tensor(HyperPerm.identity(u.n, k), u)


def level_one(p: Perm) -> HyperPerm:
    return HyperPerm.from_perm(p)


def antitranspose(u: HyperPerm) -> HyperPerm:
    if u.t != 2:
        raise UnsupportedLevel(f"antitransposition needs t=2, got t={u.t}")
    n = u.n

    def f(p):
        x, y = p
        a, b = u((n + 1 - y, n + 1 - x))
        return (n + 1 - b, n + 1 - a)

    return HyperPerm.from_function(f, n, 2)

