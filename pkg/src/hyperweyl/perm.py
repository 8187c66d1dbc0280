"""Permutations of {0, ..., d-1} with cycle-notation I/O.

Composition is right to left: ``(p * q)(x) == p(q(x))``.  Points are
0-based internally; the text format is 1-based.
"""
from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import DomainError, DomainMismatch, NotDisjoint, ParseError


class Perm:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check and sorted(images) != list(range(len(images))):
            raise DomainError("image table is not a bijection")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        """Build from 0-based cycles; raises NotDisjoint on a repeated point."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < degree:
                    raise DomainError(f"point {x} outside 0..{degree - 1}")
                if x in seen:
                    raise NotDisjoint(f"point {x} occurs twice")
                seen.add(x)
            for a, b in zip(cyc, cyc[1:] + type(cyc)(cyc[:1])):
                images[a] = b
        return cls(images, check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __pow__(self, e: int) -> "Perm":
        if e < 0:
            return self.inverse() ** (-e)
        out = Perm.identity(self.degree)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Perm({format_cycles(self)})"

    def inverse(self) -> "Perm":
        return Perm(inverse_images(self.images), check=False)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, sorted."""
        return cycles_of(self.images)

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return math.lcm(*self.cycle_type()) if self.cycles() else 1


def inverse_images(images: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(images)
    for i, x in enumerate(images):
        inv[x] = i
    return tuple(inv)


def cycles_of(images: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(images)
    out = []
    for start in range(len(images)):
        if seen[start] or images[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = images[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = images[x]
        out.append(tuple(cyc))
    return out


def compose(p: Perm, q: Perm) -> Perm:
    if p.degree != q.degree:
        raise DomainMismatch(f"degrees {p.degree} and {q.degree} differ")
    pi = p.images
    return Perm([pi[x] for x in q.images], check=False)


def cycle_type(p: Perm) -> tuple[int, ...]:
    return p.cycle_type()


# --- text format ---------------------------------------------------------

def _point_str(x: int, n: int, t: int) -> str:
    if t == 1:
        return str(x + 1)
    digits = []
    for _ in range(t):
        x, r = divmod(x, n)
        digits.append(r + 1)
    return "(" + ",".join(map(str, reversed(digits))) + ")"


def format_cycles(p: Perm, n: int | None = None, t: int = 1) -> str:
    """Canonical cycle string; the identity prints as ``()``."""
    if n is None:
        n = p.degree
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + ",".join(_point_str(x, n, t) for x in c) + ")" for c in cyc)


class _Parser:
    def __init__(self, text: str, n: int, t: int):
        self.text = text
        self.pos = 0
        self.n = n
        self.t = t

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            got = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise ParseError(f"expected {ch!r}, got {got!r}", self._offset())
        self.pos += 1

    def _offset(self) -> int:
        return len(self.text[: self.pos].encode())

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected integer", self._offset())
        value = int(self.text[start:self.pos])
        if not 1 <= value <= self.n:
            self.pos = start
            raise DomainError(f"coordinate {value} outside 1..{self.n} (offset {self._offset()})")
        return value - 1

    def point(self) -> int:
        if self.t == 1:
            return self.integer()
        self.expect("(")
        x = self.integer()
        for _ in range(self.t - 1):
            self.expect(",")
            x = x * self.n + self.integer()
        self.expect(")")
        return x

    def cycle(self) -> list[int]:
        self.expect("(")
        if self.peek() == ")":
            self.pos += 1
            return []
        pts = [self.point()]
        while self.peek() == ",":
            self.pos += 1
            pts.append(self.point())
        self.expect(")")
        return pts

    def parse(self) -> list[list[int]]:
        cycles = []
        while True:
            ch = self.peek()
            if ch == "":
                return cycles
            if ch == "," and cycles:
                self.pos += 1
                continue
            cycles.append(self.cycle())


def parse_cycles(text: str, n: int, t: int = 1) -> Perm:
    """Parse 1-based cycle notation over [n]^t into a Perm of degree n**t."""
    cycles = _Parser(text, n, t).parse()
    return Perm.from_cycles([c for c in cycles if c], n ** t)
