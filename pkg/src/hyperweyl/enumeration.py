"""Censuses of rank-1 stable permutations of [n]^2 by cycle type, and
closed-formula counts checked against structured brute force."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from itertools import combinations
from math import comb, prod
from typing import Iterator, Sequence

from .compat import compatible_tables
from .config import node_budget
from .errors import CrosscheckFailed, InvalidParams, ResourceExceeded
from .families import cycles, row_block, perm_n
from .hyper import HyperPerm
from .outer import canon
from .stability import is_rank_one


def candidate_count(n: int, c: int) -> int:
    """Number of sets of c disjoint transpositions of [n]^2."""
    m = n * n
    if 2 * c > m:
        return 0
    return comb(m, 2 * c) * prod(range(2 * c - 1, 0, -2))


def _pair_sets(m: int, c: int) -> Iterator[list[tuple[int, int]]]:
    """Sets of c disjoint pairs of range(m), pairs ordered by their smaller point."""
    used = [False] * m
    chosen: list[tuple[int, int]] = []

    def rec(start: int):
        if len(chosen) == c:
            yield list(chosen)
            return
        for a in range(start, m):
            if used[a]:
                continue
            used[a] = True
            for b in range(a + 1, m):
                if used[b]:
                    continue
                used[b] = True
                chosen.append((a, b))
                yield from rec(a + 1)
                chosen.pop()
                used[b] = False
            used[a] = False

    yield from rec(0)


def _check_ctype(ctype: Sequence[int]) -> int:
    ctype = tuple(ctype)
    if not ctype or any(x != 2 for x in ctype):
        raise InvalidParams("only products of disjoint transpositions are enumerated, e.g. (2,2)")
    return len(ctype)


@dataclass
class Census:
    n: int
    ctype: tuple[int, ...]
    candidates: int
    perms: list[HyperPerm]

    @property
    def count(self) -> int:
        return len(self.perms)


def enumerate_rank1(n: int, ctype: Sequence[int], budget: int | None = None) -> Census:
    """All rank-1 stable permutations of [n]^2 with the given cycle type.

    Output order is lexicographic in the sorted list of transpositions
    (points encoded big-endian, 0-based).
    """
    c = _check_ctype(ctype)
    total = candidate_count(n, c)
    limit = node_budget() if budget is None else budget
    if total > limit:
        raise ResourceExceeded(f"{total} candidates exceed the budget {limit}")
    m = n * n
    base = list(range(m))
    out = []
    for pairs in _pair_sets(m, c):
        img = base[:]
        for a, b in pairs:
            img[a], img[b] = b, a
        if compatible_tables(img, img, n):
            out.append(HyperPerm.from_images(img, n, 2, check=False))
    return Census(n, tuple(ctype), total, out)


def is_row_preserving(u: HyperPerm) -> bool:
    return all(u(p)[0] == p[0] for p in u.domain.points())


def is_col_preserving(u: HyperPerm) -> bool:
    return all(u(p)[1] == p[1] for p in u.domain.points())


def kind(u: HyperPerm) -> str:
    if is_row_preserving(u):
        return "horizontal"
    if is_col_preserving(u):
        return "vertical"
    return "other"


def census_csv(census: Census) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["cycles", "is_row_preserving", "is_col_preserving", "outer_canonical"])
    for u in census.perms:
        w.writerow([u.cycles_str(), int(is_row_preserving(u)), int(is_col_preserving(u)),
                    canon(u).canonical.cycles_str()])
    return buf.getvalue()


# --- closed formulas --------------------------------------------------------

def row_family_formula(n: int, k: int) -> int:
    return comb(n, k) * (comb(n - k, 2) + comb(k, 2))


def two_disjoint_formula(n: int) -> int:
    return comb(n, 2) * (comb(n - 2, 2) ** 2 + 1)


def row_family_brute(n: int, k: int) -> int:
    """Rank-1 members of {∏_{a∈A} ((a,i),(a,j)) : |A| = k, i < j}."""
    hits = 0
    for A in combinations(range(1, n + 1), k):
        for i, j in combinations(range(1, n + 1), 2):
            hits += is_rank_one(row_block(A, perm_n(n, (i, j))))
    return hits


def two_disjoint_brute(n: int) -> int:
    """Rank-1 members of {((a1,i1),(a1,j1))((a2,i2),(a2,j2)) : a1 ≠ a2}."""
    found = set()
    pairs = list(combinations(range(1, n + 1), 2))
    for a1, a2 in combinations(range(1, n + 1), 2):
        for i1, j1 in pairs:
            for i2, j2 in pairs:
                u = cycles(n, ((a1, i1), (a1, j1)), ((a2, i2), (a2, j2)))
                if is_rank_one(u):
                    found.add(u.images)
    return len(found)


def count_row_family(n: int, k: int, crosscheck: bool = False) -> int:
    if not 2 <= k <= n:
        raise InvalidParams("need 2 <= k <= n")
    value = row_family_formula(n, k)
    if crosscheck:
        brute = row_family_brute(n, k)
        if brute != value:
            raise CrosscheckFailed(value, brute)
    return value


def count_two_disjoint(n: int, crosscheck: bool = False) -> int:
    if n < 2:
        raise InvalidParams("need n >= 2")
    value = two_disjoint_formula(n)
    if crosscheck:
        brute = two_disjoint_brute(n)
        if brute != value:
            raise CrosscheckFailed(value, brute)
    return value
