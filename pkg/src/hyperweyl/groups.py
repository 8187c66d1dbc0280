"""Finite permutation groups: closure, fingerprints, model groups, isomorphism.

Two multiplication laws are supported.  ``compose`` is ordinary composition
of image tables.  ``lambda`` multiplies level-2 tables u, v into the w with
λ_u ∘ λ_v = λ_w, which is how the endomorphisms indexed by S([n]^2) compose
when the generators are not all mutually bicompatible.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import config
from .compat import lambda_product
from .errors import CapExceeded, HyperWeylError, UnknownModel
from .hyper import HyperPerm
from .perm import Perm, inverse_images

Key = tuple[int, ...]


class NotLevelTwo(HyperWeylError, ValueError):
    """A λ-product left level 2."""


def _key(g) -> Key:
    if isinstance(g, (HyperPerm, Perm)):
        return g.images
    return tuple(g)


class GroupClosure:
    """A finite group given by its elements (image tables) and generators."""

    def __init__(self, elements: Sequence[Key], generators: Sequence[Key],
                 law: str = "compose", n: int | None = None, t: int | None = None):
        self.elements = list(elements)
        self.generators = list(generators)
        self.law = law
        self.n = n
        self.t = t
        self.index = {e: i for i, e in enumerate(self.elements)}
        self._table: list[list[int]] | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return _key(g) in self.index

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return len(self.elements[0])

    @property
    def identity_index(self) -> int:
        return self.index[tuple(range(self.degree))]

    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    def perms(self) -> list[HyperPerm]:
        n, t = self.n, self.t
        if n is None:
            return [HyperPerm.from_perm(Perm(e, check=False)) for e in self.elements]
        return [HyperPerm.from_images(e, n, t, check=False) for e in self.elements]

    def mul(self, a: Key, b: Key) -> Key:
        return _multiply(a, b, self.law, self.n)

    def table(self) -> list[list[int]]:
        """Cayley table: table[i][j] is the index of elements[i] * elements[j]."""
        if self._table is None:
            idx = self.index
            els = self.elements
            if self.law == "compose":
                self._table = [[idx[tuple(a[x] for x in b)] for b in els] for a in els]
            else:
                self._table = [[idx[self.mul(a, b)] for b in els] for a in els]
        return self._table


def _multiply(a: Key, b: Key, law: str, n: int | None) -> Key:
    if law == "compose":
        return tuple(a[x] for x in b)
    w = lambda_product(a, b, n)
    if w is None:
        raise NotLevelTwo("λ-product does not reduce to level 2")
    return w


def closure(gens: Iterable, cap: int = 100_000, law: str = "compose",
            n: int | None = None, t: int | None = None, degree: int | None = None) -> GroupClosure:
    """Subgroup generated by gens, by breadth-first right multiplication."""
    gens = list(gens)
    if gens and isinstance(gens[0], HyperPerm):
        n = n or gens[0].n
        t = t or gens[0].t
    keys = [_key(g) for g in gens]
    if keys:
        degree = len(keys[0])
    elif degree is None:
        degree = n ** t if n and t else 1
    if law == "lambda" and (n is None or degree != n * n):
        raise ValueError("the lambda law needs level-2 tables and n")
    e = tuple(range(degree))
    seen = {e: None}
    frontier = [e]
    while frontier:
        nxt = []
        for a in frontier:
            for s in keys:
                b = _multiply(a, s, law, n)
                if b not in seen:
                    seen[b] = None
                    if len(seen) > cap:
                        raise CapExceeded(cap)
                    nxt.append(b)
        frontier = nxt
    return GroupClosure(list(seen), keys, law, n, t)


def lambda_closure(gens: Sequence[HyperPerm], cap: int = 100_000) -> GroupClosure:
    return closure(gens, cap, law="lambda")


# --- table-level helpers --------------------------------------------------

def _inverses(tab: list[list[int]], e: int) -> list[int]:
    inv = [0] * len(tab)
    for i, row in enumerate(tab):
        inv[i] = row.index(e)
    return inv


def _orders(tab: list[list[int]], e: int) -> list[int]:
    out = []
    for i in range(len(tab)):
        x, k = i, 1
        while x != e:
            x = tab[x][i]
            k += 1
        out.append(k)
    return out


def _subgroup(tab: list[list[int]], gens: Iterable[int], e: int) -> set[int]:
    gens = list(gens)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tab[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _classes(tab: list[list[int]], inv: list[int]) -> list[set[int]]:
    n = len(tab)
    seen = [False] * n
    classes = []
    for x in range(n):
        if seen[x]:
            continue
        cls = {tab[tab[g][x]][inv[g]] for g in range(n)}
        for y in cls:
            seen[y] = True
        classes.append(cls)
    return classes


def _abelian_invariants(orders: list[int]) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of an abelian group from its element orders."""
    size = len(orders)
    if size == 1:
        return ()
    exps_by_prime = {}
    m = size
    p = 2
    primes = []
    while m > 1:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1
    for p in primes:
        s = [0]
        k = 1
        while True:
            cnt = sum(1 for o in orders if (p ** k) % o == 0)
            s.append(_exact_log(cnt, p))
            if s[-1] == s[-2]:
                break
            k += 1
        r = [s[q] - s[q - 1] for q in range(1, len(s))] + [0]
        exps = []
        for q in range(len(r) - 1):
            exps += [q + 1] * (r[q] - r[q + 1])
        exps_by_prime[p] = sorted(exps, reverse=True)
    width = max(len(v) for v in exps_by_prime.values())
    factors = []
    for q in range(width):
        d = 1
        for p, exps in exps_by_prime.items():
            if q < len(exps):
                d *= p ** exps[q]
        factors.append(d)
    return tuple(sorted(factors))


def _exact_log(x: int, p: int) -> int:
    k = 0
    while x > 1:
        x, r = divmod(x, p)
        if r:
            raise ValueError("not a prime power")
        k += 1
    return k


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    element_order_histogram: tuple[tuple[int, int], ...]
    center_order: int
    conjugacy_class_count: int
    abelianization: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "element_order_histogram": {str(k): v for k, v in self.element_order_histogram},
            "center_order": self.center_order,
            "conjugacy_class_count": self.conjugacy_class_count,
            "abelianization": list(self.abelianization),
        }


def _fingerprint_table(tab: list[list[int]], e: int) -> GroupFingerprint:
    n = len(tab)
    inv = _inverses(tab, e)
    orders = _orders(tab, e)
    center = sum(1 for x in range(n) if all(tab[x][y] == tab[y][x] for y in range(n)))
    classes = _classes(tab, inv)
    comms = {tab[tab[inv[a]][inv[b]]][tab[a][b]] for a in range(n) for b in range(n)}
    D = _subgroup(tab, comms, e)
    rep = [min(tab[g][d] for d in D) for g in range(n)]
    reps = sorted(set(rep))
    q_orders = []
    for r in reps:
        x, k = r, 1
        while rep[x] != rep[e]:
            x = tab[x][r]
            k += 1
        q_orders.append(k)
    return GroupFingerprint(
        order=n,
        element_order_histogram=tuple(sorted(Counter(orders).items())),
        center_order=center,
        conjugacy_class_count=len(classes),
        abelianization=_abelian_invariants(q_orders),
    )


def fingerprint(G: GroupClosure) -> GroupFingerprint:
    return _fingerprint_table(G.table(), G.identity_index)


# --- reference models -----------------------------------------------------

def _perm(degree: int, *cycs: Sequence[int]) -> Key:
    return Perm.from_cycles([list(c) for c in cycs], degree).images


def _model_gens(name: str) -> list[Key]:
    if name == "S4":
        return [_perm(4, (0, 1)), _perm(4, (1, 2)), _perm(4, (2, 3))]
    if name == "S3xS3":
        return [_perm(6, (0, 1)), _perm(6, (1, 2)), _perm(6, (3, 4)), _perm(6, (4, 5))]
    if name == "Z2xZ2xS4":
        return [_perm(8, (0, 1)), _perm(8, (1, 2)), _perm(8, (2, 3)), _perm(8, (4, 5)), _perm(8, (6, 7))]
    if name == "Z2^3xD8":
        return [_perm(10, (0, 1, 2, 3)), _perm(10, (0, 2)),
                _perm(10, (4, 5)), _perm(10, (6, 7)), _perm(10, (8, 9))]
    if name == "Z2^6:Z2":
        # six independent swaps; the extra involution exchanges them in three pairs
        flips = [_perm(12, (2 * q, 2 * q + 1)) for q in range(6)]
        return flips + [_perm(12, (0, 2), (1, 3), (4, 6), (5, 7), (8, 10), (9, 11))]
    if name == "Z2x(Z2^4:Z2)":
        flips = [_perm(10, (2 * q, 2 * q + 1)) for q in range(4)]
        return flips + [_perm(10, (0, 2), (1, 3), (4, 6), (5, 7)), _perm(10, (8, 9))]
    if name == "Z3^3:Z2":
        rot = [_perm(9, (3 * q, 3 * q + 1, 3 * q + 2)) for q in range(3)]
        return rot + [_perm(9, (1, 2), (4, 5), (7, 8))]
    if name == "Z3^3":
        return [_perm(9, (3 * q, 3 * q + 1, 3 * q + 2)) for q in range(3)]
    if name == "D8":
        return [_perm(4, (0, 1, 2, 3)), _perm(4, (0, 2))]
    raise UnknownModel(name)


MODEL_ALIASES = {
    "(Z2^6)xZ2": "Z2^6:Z2", "(Z_2^6)⋊Z_2": "Z2^6:Z2", "Z2^6⋊Z2": "Z2^6:Z2",
    "Z_2×Z_2×S_4": "Z2xZ2xS4", "S4xZ2xZ2": "Z2xZ2xS4",
    "Z_2^3×D_8": "Z2^3xD8", "D8xZ2^3": "Z2^3xD8",
    "Z_2×((Z_2^4)⋊Z_2)": "Z2x(Z2^4:Z2)",
    "(Z_3^3)⋊Z_2": "Z3^3:Z2", "Z3^3⋊Z2": "Z3^3:Z2",
    "S_3×S_3": "S3xS3", "S_4": "S4",
}
TABLE1_MODELS = ("Z2^6:Z2", "Z2xZ2xS4", "Z2^3xD8", "Z2x(Z2^4:Z2)", "Z3^3:Z2", "S3xS3", "S4")


def model_group(name: str) -> GroupClosure:
    name = MODEL_ALIASES.get(name, name)
    return closure(_model_gens(name))


# --- isomorphism ----------------------------------------------------------

@dataclass
class IsoResult:
    status: str  # "Yes", "No" or "Unknown"
    mapping: dict[int, int] | None = None
    reason: str = ""
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.status == "Yes"


def _element_invariants(tab, e):
    inv = _inverses(tab, e)
    orders = _orders(tab, e)
    size = {}
    for cls in _classes(tab, inv):
        for x in cls:
            size[x] = len(cls)
    roots = Counter(tab[x][x] for x in range(len(tab)))
    return [(orders[x], size[x], roots[x]) for x in range(len(tab))]


def _generating_sequence(tab, e, cand_count):
    n = len(tab)
    gens: list[int] = []
    sub = {e}
    while len(sub) < n:
        best = None
        for g in range(n):
            if g in sub:
                continue
            grown = _subgroup(tab, gens + [g], e)
            score = (len(grown), -cand_count(g))
            if best is None or score > best[0]:
                best = (score, g, grown)
        gens.append(best[1])
        sub = best[2]
    return gens


def isomorphic(G: GroupClosure, H: GroupClosure, budget: int | None = None) -> IsoResult:
    """Fingerprint comparison, then a backtracking search for an explicit isomorphism."""
    budget = config.node_budget() if budget is None else budget
    fg, fh = fingerprint(G), fingerprint(H)
    if fg != fh:
        for name in ("order", "element_order_histogram", "center_order",
                     "conjugacy_class_count", "abelianization"):
            if getattr(fg, name) != getattr(fh, name):
                return IsoResult("No", reason=f"{name} differs: {getattr(fg, name)} vs {getattr(fh, name)}")
    A, B = G.table(), H.table()
    ea, eb = G.identity_index, H.identity_index
    ia, ib = _element_invariants(A, ea), _element_invariants(B, eb)
    if Counter(ia) != Counter(ib):
        return IsoResult("No", reason="element invariant multisets differ")
    by_inv: dict[tuple, list[int]] = {}
    for y, key in enumerate(ib):
        by_inv.setdefault(key, []).append(y)
    gens = _generating_sequence(A, ea, lambda g: len(by_inv[ia[g]]))
    cands = [by_inv[ia[g]] for g in gens]
    size = len(A)
    nodes = 0

    def extend(images: list[int]):
        f = [-1] * size
        rev = [-1] * size
        f[ea], rev[eb] = eb, ea
        frontier = [ea]
        k = len(images)
        while frontier:
            nxt = []
            for x in frontier:
                y = f[x]
                for q in range(k):
                    x2 = A[x][gens[q]]
                    y2 = B[y][images[q]]
                    if f[x2] == -1:
                        if rev[y2] != -1:
                            return None
                        f[x2], rev[y2] = y2, x2
                        nxt.append(x2)
                    elif f[x2] != y2:
                        return None
            frontier = nxt
        return f

    def search(images: list[int]):
        nonlocal nodes
        level = len(images)
        if level == len(gens):
            return extend(images)
        for h in cands[level]:
            nodes += 1
            if nodes > budget:
                raise _Budget
            f = extend(images + [h])
            if f is None:
                continue
            res = search(images + [h])
            if res is not None:
                return res
        return None

    try:
        f = search([])
    except _Budget:
        return IsoResult("Unknown", reason="node budget exhausted", nodes=nodes)
    if f is None or -1 in f:
        return IsoResult("No", reason="exhaustive search found no isomorphism", nodes=nodes)
    return IsoResult("Yes", mapping=dict(enumerate(f)), nodes=nodes)


class _Budget(Exception):
    pass


# --- subgroup enumeration -------------------------------------------------

def subgroups_of_order(G: GroupClosure, m: int, cap: int = 512) -> list[GroupClosure]:
    """All subgroups of order m.

    Starts from the cyclic subgroups and repeatedly joins one more element,
    keeping only subgroups whose order divides m.  At the fixed point every
    subgroup of order dividing m has been reached, since each one is the top
    of a chain of such joins.
    """
    if G.order > cap:
        raise CapExceeded(cap)
    if G.order % m:
        return []
    tab = G.table()
    e = G.identity_index
    found: set[frozenset] = set()
    frontier = []
    for g in range(G.order):
        s = frozenset(_subgroup(tab, [g], e))
        if m % len(s) == 0 and s not in found:
            found.add(s)
            frontier.append(s)
    while frontier:
        nxt = []
        for s in frontier:
            if len(s) == m:
                continue
            base = _gens_of(s, tab, e)
            for g in range(G.order):
                if g in s:
                    continue
                t = frozenset(_subgroup(tab, base + [g], e))
                if m % len(t) == 0 and t not in found:
                    found.add(t)
                    nxt.append(t)
        frontier = nxt
    out = []
    for s in sorted((s for s in found if len(s) == m), key=lambda s: sorted(s)):
        els = [G.elements[i] for i in sorted(s)]
        out.append(GroupClosure(els, _small_generating_set(els, G), G.law, G.n, G.t))
    return out


def _gens_of(s: frozenset, tab, e) -> list[int]:
    gens: list[int] = []
    sub = {e}
    for x in sorted(s):
        if x not in sub:
            gens.append(x)
            sub = _subgroup(tab, gens, e)
            if len(sub) == len(s):
                break
    return gens


def _small_generating_set(els: list[Key], G: GroupClosure) -> list[Key]:
    idx = [G.index[x] for x in els]
    gens = _gens_of(frozenset(idx), G.table(), G.identity_index)
    return [G.elements[i] for i in gens]


def is_subgroup_closed(elements: Iterable[Key], law: str = "compose", n: int | None = None) -> bool:
    els = set(elements)
    return all(_multiply(a, b, law, n) in els for a in els for b in els)
