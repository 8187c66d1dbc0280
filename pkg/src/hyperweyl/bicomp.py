"""Row/column graphs of bicompatible subgroups, structural lemma checks, and
verification of the list of bicompatible subgroups of S([4]^2) isomorphic to S4."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .compat import FirstFailure, bicompatible_set
from .errors import NotBicompatible, NotDisjoint, ParseError
from .families import cycles, left, named_BOG, named_K, named_T, pairs4, perm_n, right
from .groups import GroupClosure, closure, isomorphic, model_group, subgroups_of_order
from .hyper import HyperPerm
from .outer import pi_image
from .stability import is_rank_one

EXHAUSTIVE_LIMIT = 200

Edge = frozenset


def _components(n: int, edges: Iterable[Edge]) -> list[frozenset[int]]:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        a, b = tuple(e)
        parent[find(a)] = find(b)
    comps: dict[int, set[int]] = {}
    for x in range(1, n + 1):
        comps.setdefault(find(x), set()).add(x)
    return sorted((frozenset(c) for c in comps.values()), key=min)


@dataclass(frozen=True)
class RowColGraphs:
    n: int
    edges_R: frozenset
    edges_C: frozenset
    exhaustive: bool = True

    def components_R(self) -> list[frozenset[int]]:
        return _components(self.n, self.edges_R)

    def components_C(self) -> list[frozenset[int]]:
        return _components(self.n, self.edges_C)

    def sorted_edges(self, which: str = "R") -> list[tuple[int, int]]:
        edges = self.edges_R if which == "R" else self.edges_C
        return sorted(tuple(sorted(e)) for e in edges)


def _as_perms(V) -> list[HyperPerm]:
    if isinstance(V, GroupClosure):
        return V.perms()
    return list(V)


def check_bicompatible(V) -> bool:
    """Raise NotBicompatible unless all ordered pairs are compatible.

    Every element is checked when |V| <= 200, otherwise the generators only.
    Returns True when the check was exhaustive.
    """
    if isinstance(V, GroupClosure) and V.order > EXHAUSTIVE_LIMIT:
        els = [HyperPerm.from_images(g, V.n, 2, check=False) for g in V.generators]
        exhaustive = False
    else:
        els = _as_perms(V)
        exhaustive = True
    res = bicompatible_set(els)
    if isinstance(res, FirstFailure):
        raise NotBicompatible(res.i, res.j)
    return exhaustive


def edges_of(perms: Sequence[HyperPerm]) -> tuple[frozenset, frozenset]:
    er, ec = set(), set()
    for v in perms:
        n = v.n
        for a in range(1, n + 1):
            for x in range(1, n + 1):
                b, y = v((a, x))
                if b != a:
                    er.add(Edge((a, b)))
                if y != x:
                    ec.add(Edge((x, y)))
    return frozenset(er), frozenset(ec)


def row_col_graphs(V, check: bool = True) -> RowColGraphs:
    perms = _as_perms(V)
    exhaustive = check_bicompatible(V) if check else True
    er, ec = edges_of(perms)
    return RowColGraphs(perms[0].n, er, ec, exhaustive)


# --- structural lemmas ----------------------------------------------------

@dataclass
class LemmaResult:
    name: str
    applicable: bool = False
    checked: int = 0
    counterexample: tuple | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


@dataclass
class LemmaReport:
    graphs: RowColGraphs
    results: list[LemmaResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def by_name(self) -> dict[str, LemmaResult]:
        return {r.name: r for r in self.results}

    def as_dict(self) -> dict:
        return {
            "edges_R": self.graphs.sorted_edges("R"),
            "edges_C": self.graphs.sorted_edges("C"),
            "lemmas": {r.name: {"applicable": r.applicable, "checked": r.checked,
                                "passed": r.passed, "counterexample": r.counterexample}
                       for r in self.results},
        }


def _fail(res: LemmaResult, witness):
    if res.counterexample is None:
        res.counterexample = witness


def _same_component(comps, a, b) -> bool:
    return any(a in c and b in c for c in comps)


def _is_complete(n, edges) -> bool:
    return len(edges) == n * (n - 1) // 2


def _lemma_same_line(perms, n, comps, transpose: bool) -> LemmaResult:
    # rows: a, b joined in G_R => v(c,a), v(c,b) share a row; columns dually
    res = LemmaResult("samecol" if transpose else "samerow")
    for comp in comps:
        for a, b in combinations(sorted(comp), 2):
            res.applicable = True
            for c in range(1, n + 1):
                for q, v in enumerate(perms):
                    res.checked += 1
                    if transpose:
                        if v((a, c))[1] != v((b, c))[1]:
                            _fail(res, (q, a, b, c))
                    elif v((c, a))[0] != v((c, b))[0]:
                        _fail(res, (q, a, b, c))
    return res


def _lemma_common_component(perms, n, comps_r, comps_c) -> LemmaResult:
    res = LemmaResult("conn_comp_of_both")
    for A in set(comps_r) & set(comps_c):
        res.applicable = True
        a = min(A)
        for q, v in enumerate(perms):
            sigma = {x: v((x, a))[0] for x in A}
            tau = {y: v((a, y))[1] for y in A}
            res.checked += 1
            if set(sigma.values()) != A or set(tau.values()) != A:
                _fail(res, (q, sorted(A)))
                continue
            for x in A:
                for y in A:
                    if v((x, y)) != (sigma[x], tau[y]):
                        _fail(res, (q, x, y))
    return res


def _lemma_isolated(n, edges_r, edges_c, comps_r, comps_c) -> LemmaResult:
    res = LemmaResult("isoconn")
    iso_r = {x for x in range(1, n + 1) if not any(x in e for e in edges_r)}
    iso_c = {x for x in range(1, n + 1) if not any(x in e for e in edges_c)}
    for t in iso_r:
        res.applicable = True
        comp = next(c for c in comps_c if t in c)
        res.checked += 1
        if not comp <= iso_r:
            _fail(res, ("R", t, sorted(comp)))
    for t in iso_c:
        res.applicable = True
        comp = next(c for c in comps_r if t in c)
        res.checked += 1
        if not comp <= iso_c:
            _fail(res, ("C", t, sorted(comp)))
    return res


def _lemma_connected_complete(n, edges_r, edges_c) -> LemmaResult:
    res = LemmaResult("connected_complete")
    for tag, edges in (("R", edges_r), ("C", edges_c)):
        if len(_components(n, edges)) == 1:
            res.applicable = True
            res.checked += 1
            if not _is_complete(n, edges):
                _fail(res, (tag,))
    return res


def _line_map(v: HyperPerm, n: int, transpose: bool):
    """σ_v read off rows (or τ_v off columns); None if not well defined."""
    out = []
    for a in range(1, n + 1):
        imgs = {v((b, a))[1] if transpose else v((a, b))[0] for b in range(1, n + 1)}
        if len(imgs) != 1:
            return None
        out.append(imgs.pop())
    return tuple(out)


def _lemma_homomorphism(perms, n, edges_r, edges_c) -> LemmaResult:
    res = LemmaResult("homsigma")
    index = {v.images: q for q, v in enumerate(perms)}
    for transpose, edges in ((False, edges_r), (True, edges_c)):
        if not _is_complete(n, edges):
            continue
        res.applicable = True
        maps = [_line_map(v, n, transpose) for v in perms]
        if any(m is None for m in maps):
            _fail(res, ("undefined", transpose))
            continue
        for p, u in enumerate(perms):
            for q, w in enumerate(perms):
                res.checked += 1
                uw = index[(u * w).images]
                mu, mw = maps[p], maps[q]
                if maps[uw] != tuple(mu[mw[x] - 1] for x in range(n)):
                    _fail(res, (transpose, p, q))
    return res


def _lemma_fixed_line(perms, n, comps_r, comps_c) -> LemmaResult:
    res = LemmaResult("change_col")
    for comp in comps_r:
        for a, b in combinations(sorted(comp), 2):
            res.applicable = True
            for c in range(1, n + 1):
                for q, v in enumerate(perms):
                    res.checked += 1
                    if (v((c, a))[1] == a) != (v((c, b))[1] == b):
                        _fail(res, ("R", q, a, b, c))
    for comp in comps_c:
        for a, b in combinations(sorted(comp), 2):
            res.applicable = True
            for c in range(1, n + 1):
                for q, v in enumerate(perms):
                    res.checked += 1
                    if (v((a, c))[0] == a) != (v((b, c))[0] == b):
                        _fail(res, ("C", q, a, b, c))
    return res


def check_structural_lemmas(V) -> LemmaReport:
    perms = _as_perms(V)
    graphs = row_col_graphs(V)
    n = graphs.n
    comps_r, comps_c = graphs.components_R(), graphs.components_C()
    # singleton components carry no pairs; drop them for the pairwise lemmas
    pair_r = [c for c in comps_r if len(c) > 1]
    pair_c = [c for c in comps_c if len(c) > 1]
    report = LemmaReport(graphs)
    report.results = [
        _lemma_same_line(perms, n, pair_r, False),
        _lemma_same_line(perms, n, pair_c, True),
        _lemma_common_component(perms, n, comps_r, comps_c),
        _lemma_isolated(n, graphs.edges_R, graphs.edges_C, comps_r, comps_c),
        _lemma_connected_complete(n, graphs.edges_R, graphs.edges_C),
        _lemma_homomorphism(perms, n, graphs.edges_R, graphs.edges_C),
        _lemma_fixed_line(perms, n, pair_r, pair_c),
    ]
    rank = LemmaResult("rank_one", applicable=True)
    for q, v in enumerate(perms):
        rank.checked += 1
        if not is_rank_one(v):
            _fail(rank, (q,))
    report.results.append(rank)
    return report


# --- the S4 classification at n = 4 ----------------------------------------

# The 24 elements of the case with E_R = {{x,y},{z,t}} and E_C = {{x,t},{z,y}},
# transcribed as printed; "L:" and "R:" mark p⊗1 and 1⊗p.
B2B_LISTING = (
    ("alpha1", "()"),
    ("alpha1", "((y,x),(y,t))((y,y),(y,z))((z,x),(z,t))((z,y),(z,z))"),
    ("alpha2", "((x,z),(y,z))((x,t),(y,t))((t,z),(z,z))((t,t),(z,t))"),
    ("alpha2", "((y,x),(x,t),(y,t))((y,y),(x,z),(y,z))((z,x),(t,t),(z,t))((z,y),(t,z),(z,z))"),
    ("alpha3", "((x,z),(y,y))((x,t),(y,x))((z,x),(t,t))((z,y),(t,z))"),
    ("alpha3", "((y,x),(y,t),(x,t))((y,y),(y,z),(x,z))((z,x),(z,t),(t,t))((z,y),(z,z),(t,z))"),
    ("beta1", "((y,x),(y,t),(x,t),(x,x))((y,y),(y,z),(x,z),(x,y))((z,x),(z,t),(t,t),(t,x))((z,y),(z,z),(t,z),(t,y))"),
    ("beta1", "((y,x),(y,t),(x,x))((y,y),(y,z),(x,y))((z,x),(z,t),(t,x))((z,y),(z,t),(t,x))"),
    ("beta2", "L:(x,y)(z,t)"),
    ("beta2", "((y,x),(x,x))((y,y),(x,y))((z,x),(t,x))((z,y),(t,y))"),
    ("beta3", "((y,x),(x,t),(x,x))((y,y),(x,z),(x,y))((z,x),(t,t),(t,x))((t,y),(z,y),(t,z))"),
    ("beta3", "((y,x),(x,t),(y,t),(x,x))((y,y),(x,z),(y,z),(x,y))((z,x),(t,t),(z,t),(t,x))((z,y),(t,z),(z,z),(t,y))"),
    ("gamma", "R:(x,t)(y,z)"),
    ("gamma", "((x,x),(x,t))((x,y),(x,z))((t,x),(t,t))((t,y),(t,z))"),
    ("gamma", "((x,x),(x,t),(y,t),(y,x))((x,y),(x,z),(y,z),(y,y))((t,x),(t,t),(z,t),(z,x))((t,y),(t,z),(z,z),(z,y))"),
    ("gamma", "((x,x),(x,t),(y,t))((x,y),(x,z),(y,z))((t,x),(t,t),(z,t))((t,y),(t,z),(z,z))"),
    ("gamma", "((x,x),(x,t),(y,x),(y,t))((x,y),(x,z),(y,y),(y,z))((t,x),(t,t),(z,x),(z,t))((t,y),(t,z),(z,y),(z,z))"),
    ("gamma", "((x,x),(x,t),(y,x))((x,y),(x,z),(y,y))((t,x),(t,t),(z,x))((t,y),(t,z),(z,y))"),
    ("delta", "((x,x),(y,t))((x,y),(y,z))((t,x),(z,t))((t,y),(z,z))"),
    ("delta", "((x,x),(y,t))((x,y),(y,z))((x,z),(y,y))((x,t),(y,x))((t,x),(z,t))((t,y),(z,z))((t,z),(z,y))((t,t),(z,x))"),
    ("delta", "((x,x),(y,t),(x,t))((x,y),(y,z),(x,z))((t,x),(z,t),(t,t))((t,y),(z,z),(t,z))"),
    ("delta", "((x,x),(y,t),(x,t),(y,x))((x,y),(y,z),(x,z),(y,y))((t,x),(z,t),(t,t),(z,x))((t,y),(z,z),(t,z),(z,y))"),
    ("delta", "((x,x),(y,t),(y,x))((x,y),(y,z),(y,y))((t,x),(z,t),(z,x))((t,y),(z,z),(z,y))"),
    ("delta", "((x,x),(y,t),(y,x),(x,t))((x,y),(y,z),(y,y),(x,z))((t,x),(z,t),(z,x),(t,t))((t,y),(z,z),(z,y),(t,z))"),
)
B2B_LABELS = {"x": 1, "y": 2, "z": 3, "t": 4}


def parse_listing_entry(text: str, labels: dict[str, int] = B2B_LABELS) -> HyperPerm:
    """Substitute point labels and parse; raises ParseError/NotDisjoint on malformed entries."""
    text = text.translate(str.maketrans({k: str(v) for k, v in labels.items()}))
    if text.startswith(("L:", "R:")):
        body = text[2:].strip("()")
        cyc = [tuple(int(c) for c in part.split(",")) for part in body.split(")(")]
        p = perm_n(4, *cyc)
        return left(p) if text[0] == "L" else right(p)
    return HyperPerm.parse(text, 4, 2)


@dataclass
class ListingCheck:
    total: int
    members: list[int]
    malformed: list[int]
    non_members: list[int]
    missing_from_listing: int


def check_listing(G: GroupClosure, listing=B2B_LISTING) -> ListingCheck:
    members, malformed, outside, seen = [], [], [], set()
    for q, (_, text) in enumerate(listing):
        try:
            u = parse_listing_entry(text)
        except (ParseError, NotDisjoint):
            malformed.append(q)
            continue
        if u.images in G:
            members.append(q)
            seen.add(u.images)
        else:
            outside.append(q)
    return ListingCheck(len(listing), members, malformed, outside, G.order - len(seen))


@dataclass
class ClassificationReport:
    groups: list[tuple[str, GroupClosure]]
    raw_order24_counts: dict[str, int]
    s4_counts: dict[str, int]
    all_bicompatible: bool
    all_s4: bool
    pairwise_distinct: bool
    t_pi_distinct: bool
    t24_graphs: RowColGraphs
    listing: ListingCheck
    failures: list[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.groups)

    @property
    def passed(self) -> bool:
        return (self.total == 32 and self.all_bicompatible and self.all_s4
                and self.pairwise_distinct and self.t_pi_distinct
                and all(c == 4 for c in self.s4_counts.values()))

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "labels": [label for label, _ in self.groups],
            "order24_subgroups_per_container": self.raw_order24_counts,
            "s4_subgroups_per_container": self.s4_counts,
            "all_bicompatible": self.all_bicompatible,
            "all_isomorphic_to_S4": self.all_s4,
            "pairwise_distinct": self.pairwise_distinct,
            "T_pi_images_distinct": self.t_pi_distinct,
            "T_24_edges_R": self.t24_graphs.sorted_edges("R"),
            "T_24_edges_C": self.t24_graphs.sorted_edges("C"),
            "listing": {"total": self.listing.total, "members": len(self.listing.members),
                        "malformed": self.listing.malformed, "non_members": self.listing.non_members},
            "failures": self.failures,
            "passed": self.passed,
        }


def container(i: int, j: int) -> GroupClosure:
    """The order-96 group generated by the K-family generators for {i, j}."""
    return closure([g for _, g in named_K(i, j)])


def t_group(a: int, b: int) -> GroupClosure:
    return closure([g for _, g in named_T(a, b)])


def verify_s4_classification() -> ClassificationReport:
    s4 = model_group("S4")
    groups: list[tuple[str, GroupClosure]] = []
    raw, counts, failures = {}, {}, []
    for i, j in pairs4():
        key = f"N_{i}{j}"
        subs = subgroups_of_order(container(i, j), 24)
        found = [H for H in subs if isomorphic(H, s4).status == "Yes"]
        raw[key], counts[key] = len(subs), len(found)
        if len(found) != 4:
            failures.append(f"{key}: {len(found)} copies of S4")
        groups += [(f"{key}#{q}", H) for q, H in enumerate(found, 1)]
    groups.append(("S4⊗1", closure([g for _, g in named_BOG(4)])))
    groups.append(("1⊗S4", closure([right(perm_n(4, (q, q + 1))) for q in range(1, 4)])))
    t_groups = [(f"T_{a}{b}", t_group(a, b)) for a in (2, 3, 4) for b in (2, 3, 4) if a != b]
    groups += t_groups

    all_bic = True
    all_s4 = True
    for label, H in groups:
        if H.order != 24 or isomorphic(H, s4).status != "Yes":
            all_s4 = False
            failures.append(f"{label}: not S4")
        try:
            check_bicompatible(H)
        except NotBicompatible:
            all_bic = False
            failures.append(f"{label}: not bicompatible")
    distinct = len({H.element_set() for _, H in groups}) == len(groups)
    t_pi = len({pi_image(H) for _, H in t_groups}) == len(t_groups)
    t24 = dict(t_groups)["T_24"]
    return ClassificationReport(groups, raw, counts, all_bic, all_s4, distinct, t_pi,
                                row_col_graphs(t24), check_listing(t24), failures)
