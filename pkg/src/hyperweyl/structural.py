"""Closed-form compatibility criteria for structured permutations of [n]^2.

Each predicate decides compatibility against one structured partner without
touching [n]^3; they are cross-checked against ``compat.compatible``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .families import col_block, cycles, row_block, u_sigma, v_sigma
from .hyper import HyperPerm
from .perm import Perm


def leaves_invariant(v: HyperPerm, points: Iterable[tuple[int, int]]) -> bool:
    pts = set(points)
    return all(v(p) in pts for p in pts)


def row_cycles(n: int, rows: Iterable[int], bs: Sequence[int]) -> HyperPerm:
    """∏ over rows a of the cycle ((a,b1),...,(a,bs))."""
    return cycles(n, *[tuple((a, b) for b in bs) for a in sorted(rows)])


def col_cycles(n: int, cols: Iterable[int], bs: Sequence[int]) -> HyperPerm:
    """∏ over columns a of the cycle ((b1,a),...,(bs,a))."""
    return cycles(n, *[tuple((b, a) for b in bs) for a in sorted(cols)])


def row_two_cycles(n: int, rows: Iterable[int], es: Sequence[int], fs: Sequence[int]) -> HyperPerm:
    """∏ over rows a of ((a,e1),...,(a,es)) ((a,f1),...,(a,fs))."""
    cyc = []
    for a in sorted(rows):
        cyc.append(tuple((a, e) for e in es))
        cyc.append(tuple((a, f) for f in fs))
    return cycles(n, *cyc)


def row_block_partner(v: HyperPerm, rows: Iterable[int]) -> bool:
    """row_block(rows, σ) is compatible with v, for σ ≠ 1: v keeps [n] × rows."""
    n = v.n
    return leaves_invariant(v, [(x, a) for x in range(1, n + 1) for a in rows])


def col_block_partner(v: HyperPerm, cols: Iterable[int]) -> bool:
    """v is compatible with col_block(cols, σ), σ ≠ 1: v keeps cols × [n]."""
    n = v.n
    return leaves_invariant(v, [(a, y) for a in cols for y in range(1, n + 1)])


def row_cycles_partner(v: HyperPerm, bs: Sequence[int]):
    """v is compatible with row_cycles(rows, bs) (rows nonempty).

    Returns the witness (σ, t) with v(b_i, x) = (b_{i+t(x)}, σ(x)), or None.
    """
    n, s = v.n, len(bs)
    pos = {b: q for q, b in enumerate(bs)}
    sigma, shift = [], []
    for x in range(1, n + 1):
        r, y = v((bs[0], x))
        if r not in pos:
            return None
        t = pos[r]
        if any(v((bs[q], x)) != (bs[(q + t) % s], y) for q in range(s)):
            return None
        sigma.append(y)
        shift.append(t)
    if sorted(sigma) != list(range(1, n + 1)):
        return None
    return sigma, shift


def col_cycles_partner(v: HyperPerm, bs: Sequence[int]):
    """col_cycles(cols, bs) is compatible with v (cols nonempty).

    Returns the witness (σ, t) with v(x, b_i) = (σ(x), b_{i+t(x)}), or None.
    """
    n, s = v.n, len(bs)
    pos = {b: q for q, b in enumerate(bs)}
    sigma, shift = [], []
    for x in range(1, n + 1):
        y, c = v((x, bs[0]))
        if c not in pos:
            return None
        t = pos[c]
        if any(v((x, bs[q])) != (y, bs[(q + t) % s]) for q in range(s)):
            return None
        sigma.append(y)
        shift.append(t)
    if sorted(sigma) != list(range(1, n + 1)):
        return None
    return sigma, shift


def row_two_cycles_partner(v: HyperPerm, es: Sequence[int], fs: Sequence[int]):
    """v is compatible with row_two_cycles(rows, es, fs) (rows nonempty).

    Witness: σ on {e,f} × [n] and t with v(α_i, x) = (σ₁(α,x)_{i+t}, σ₂(α,x)).
    """
    n, s = v.n, len(es)
    labels = {"e": tuple(es), "f": tuple(fs)}
    where = {}
    for lab, seq in labels.items():
        for q, b in enumerate(seq):
            where[b] = (lab, q)
    sigma, shift = {}, {}
    for lab, seq in labels.items():
        for x in range(1, n + 1):
            r, y = v((seq[0], x))
            if r not in where:
                return None
            lab2, t = where[r]
            target = labels[lab2]
            if any(v((seq[q], x)) != (target[(q + t) % s], y) for q in range(s)):
                return None
            sigma[(lab, x)] = (lab2, y)
            shift[(lab, x)] = t
    if len(set(sigma.values())) != len(sigma):
        return None
    return sigma, shift


def commute(sigma: Perm, tau: Perm) -> bool:
    """Decides compatible(u_σ, v_τ) through στ = τσ."""
    return sigma * tau == tau * sigma


COUNTEREXAMPLES_N8 = (
    # (u cycles, v cycles, point)
    ((((1, 5), (4, 5)), ((3, 5), (6, 5))), (((2, 3), (2, 4)), ((2, 6), (2, 8))), (2, 3, 5)),
    ((((2, 3), (6, 3)), ((4, 3), (5, 3))), (((3, 1), (3, 6)), ((3, 2), (3, 5))), (3, 2, 3)),
)


def counterexample_sides() -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Both sides of the compatibility identity at the two n = 8 witness points."""
    from .compat import compat_sides
    return [compat_sides(cycles(8, *uc), cycles(8, *vc), p) for uc, vc, p in COUNTEREXAMPLES_N8]


def _subsets(n: int) -> list[tuple[int, ...]]:
    return [s for k in range(1, n + 1) for s in combinations(range(1, n + 1), k)]


def _cycle_orders(n: int, lo: int = 2) -> list[tuple[int, ...]]:
    """Every cycle on at least lo points of [n], listed once (smallest point first)."""
    out = []
    for k in range(lo, n + 1):
        for pts in combinations(range(1, n + 1), k):
            for rest in permutations(pts[1:]):
                out.append((pts[0],) + rest)
    return out


def _pair_splits(n: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    out = []
    for a, b, c, d in combinations(range(1, n + 1), 4):
        out += [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))]
    return out


def _fill(n: int, fixed: dict, rng: random.Random) -> HyperPerm:
    """Extend a partial injective map on points to a random permutation of [n]^2."""
    pts = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]
    free_src = [p for p in pts if p not in fixed]
    free_dst = [p for p in pts if p not in set(fixed.values())]
    rng.shuffle(free_dst)
    table = dict(fixed)
    table.update(zip(free_src, free_dst))
    return HyperPerm.from_function(lambda p: table[p], n, 2)


def _plant_block(n, rng, transpose):
    A = rng.choice(_subsets(n))
    block = [(a, x) if transpose else (x, a) for x in range(1, n + 1) for a in A]
    img = block[:]
    rng.shuffle(img)
    return _fill(n, dict(zip(block, img)), rng)


def _plant_cycles(n, rng, transpose):
    bs = rng.choice(_cycle_orders(n))
    s = len(bs)
    sigma = rng.sample(range(1, n + 1), n)
    fixed = {}
    for x in range(1, n + 1):
        t = rng.randrange(s)
        for q in range(s):
            src, dst = (bs[q], x), (bs[(q + t) % s], sigma[x - 1])
            if transpose:
                src, dst = src[::-1], dst[::-1]
            fixed[src] = dst
    return _fill(n, fixed, rng)


def _plant_two_cycles(n, rng):
    es, fs = rng.choice(_pair_splits(n))
    s = len(es)
    labels = {"e": es, "f": fs}
    src = [(lab, x) for lab in labels for x in range(1, n + 1)]
    dst = src[:]
    rng.shuffle(dst)
    fixed = {}
    for (lab, x), (lab2, y) in zip(src, dst):
        t = rng.randrange(s)
        for q in range(s):
            fixed[(labels[lab][q], x)] = (labels[lab2][(q + t) % s], y)
    return _fill(n, fixed, rng)


@dataclass
class CrossCheck:
    name: str
    checks: int = 0
    positives: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def _record(rep: CrossCheck, oracle: bool, closed: bool, witness):
    rep.checks += 1
    rep.positives += oracle
    if oracle != closed and len(rep.disagreements) < 10:
        rep.disagreements.append(witness)


def crossvalidate(n: int = 4, n_random: int = 500, n_planted: int = 100, seed: int = 0) -> list[CrossCheck]:
    """Compare every closed-form criterion with the level-3 oracle.

    Structured partners range over all admissible parameters; the other side
    is drawn from n_random uniform permutations plus n_planted permutations
    built to satisfy the criterion for some parameter choice.
    """
    from .compat import compatible

    rng = random.Random(seed)
    pts = n * n
    rand = [HyperPerm.from_images(rng.sample(range(pts), pts), n, 2) for _ in range(n_random)]
    pools = {
        "row_block": rand + [_plant_block(n, rng, False) for _ in range(n_planted)],
        "col_block": rand + [_plant_block(n, rng, True) for _ in range(n_planted)],
        "row_cycles": rand + [_plant_cycles(n, rng, False) for _ in range(n_planted)],
        "col_cycles": rand + [_plant_cycles(n, rng, True) for _ in range(n_planted)],
        "row_two_cycles": rand + [_plant_two_cycles(n, rng) for _ in range(n_planted)],
    }
    nontrivial = [Perm(p) for p in permutations(range(n)) if list(p) != list(range(n))]
    reports = []

    rep = CrossCheck("row_block")
    for A in _subsets(n):
        for s in nontrivial:
            u = row_block(A, s)
            for v in pools["row_block"]:
                _record(rep, compatible(u, v), row_block_partner(v, A), (A, s.images, v.images))
    reports.append(rep)

    rep = CrossCheck("col_block")
    for A in _subsets(n):
        for s in nontrivial:
            u = col_block(A, s)
            for v in pools["col_block"]:
                _record(rep, compatible(v, u), col_block_partner(v, A), (A, s.images, v.images))
    reports.append(rep)

    rep = CrossCheck("row_cycles")
    for A in _subsets(n):
        for bs in _cycle_orders(n):
            u = row_cycles(n, A, bs)
            for v in pools["row_cycles"]:
                _record(rep, compatible(v, u), row_cycles_partner(v, bs) is not None, (A, bs, v.images))
    reports.append(rep)

    rep = CrossCheck("col_cycles")
    for A in _subsets(n):
        for bs in _cycle_orders(n):
            u = col_cycles(n, A, bs)
            for v in pools["col_cycles"]:
                _record(rep, compatible(u, v), col_cycles_partner(v, bs) is not None, (A, bs, v.images))
    reports.append(rep)

    rep = CrossCheck("row_two_cycles")
    for A in _subsets(n):
        for es, fs in _pair_splits(n):
            u = row_two_cycles(n, A, es, fs)
            for v in pools["row_two_cycles"]:
                _record(rep, compatible(v, u), row_two_cycles_partner(v, es, fs) is not None,
                        (A, es, fs, v.images))
    reports.append(rep)

    rep = CrossCheck("column_vs_row_commute")
    for i in range(1, n + 1):
        fixing = [Perm(p) for p in permutations(range(n)) if p[i - 1] == i - 1]
        for s in fixing:
            for t in fixing:
                _record(rep, compatible(u_sigma(i, s), v_sigma(i, t)), commute(s, t), (i, s.images, t.images))
    reports.append(rep)
    return reports
