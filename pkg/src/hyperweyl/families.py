"""Named permutations of [n]^2 and the generator sets of the subgroup families.

Grid convention: a point (r, c) is row r, column c.  All indices are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidParams
from .hyper import HyperPerm, tensor_images
from .perm import Perm

Point = tuple[int, int]

FAMILY_IDS = (
    "H", "K", "Kprime", "M", "Mprime", "G", "L", "Q", "Qprime", "T", "BOG",
    "R_P", "Rcheck_P", "C_P", "Ccheck_P", "NBC", "R_ij", "C_ij", "S_ij",
    "row_block", "col_block",
)
N4_ONLY = {"H", "K", "Kprime", "M", "Mprime", "G", "T"}


def cycles(n: int, *cycs: Sequence[Point]) -> HyperPerm:
    """Product of disjoint cycles of grid points."""
    return HyperPerm.from_cycles(cycs, n, 2)


def perm_n(n: int, *cycs: Sequence[int]) -> Perm:
    return Perm.from_cycles([[x - 1 for x in c] for c in cycs], n)


def left(p: Perm) -> HyperPerm:
    """p ⊗ 1."""
    return HyperPerm.from_images(tensor_images(p.images, range(p.degree)), p.degree, 2, check=False)


def right(p: Perm) -> HyperPerm:
    """1 ⊗ p."""
    return HyperPerm.from_images(tensor_images(range(p.degree), p.images), p.degree, 2, check=False)


def row_block(rows: Iterable[int], sigma: Perm) -> HyperPerm:
    """(x, y) -> (x, σ(y)) for x in rows, identity elsewhere."""
    n = sigma.degree
    rows = set(rows)
    return HyperPerm.from_function(
        lambda p: (p[0], sigma(p[1] - 1) + 1) if p[0] in rows else p, n, 2)


def col_block(cols: Iterable[int], sigma: Perm) -> HyperPerm:
    """(x, y) -> (σ(x), y) for y in cols, identity elsewhere."""
    n = sigma.degree
    cols = set(cols)
    return HyperPerm.from_function(
        lambda p: (sigma(p[0] - 1) + 1, p[1]) if p[1] in cols else p, n, 2)


def u_sigma(i: int, sigma: Perm) -> HyperPerm:
    """Acts by σ on column i; σ must fix i."""
    if sigma(i - 1) != i - 1:
        raise InvalidParams(f"sigma must fix {i}")
    return col_block({i}, sigma)


def v_sigma(i: int, sigma: Perm) -> HyperPerm:
    """Acts by σ on row i; σ must fix i."""
    if sigma(i - 1) != i - 1:
        raise InvalidParams(f"sigma must fix {i}")
    return row_block({i}, sigma)


def _adjacent(points: Sequence[int]) -> list[tuple[int, int]]:
    pts = sorted(points)
    return list(zip(pts, pts[1:]))


def _check_index(n: int, *idx: int):
    for x in idx:
        if not 1 <= x <= n:
            raise InvalidParams(f"index {x} outside 1..{n}")


def _pair(n: int, i: int, j: int) -> tuple[int, int]:
    """The complement {h, k} of {i, j} in [4], with h < k."""
    if n != 4:
        raise InvalidParams("this family is defined for n=4 only")
    _check_index(n, i, j)
    if i == j:
        raise InvalidParams("need i != j")
    h, k = sorted(set(range(1, 5)) - {i, j})
    return h, k


# --- subgroups of section-4 type ------------------------------------------

def gens_R_P(n: int, P: Iterable[int]) -> list[HyperPerm]:
    """Rows in P permuted independently over the columns outside P."""
    P = set(P)
    _check_index(n, *P)
    rest = [c for c in range(1, n + 1) if c not in P]
    return [cycles(n, ((k, a), (k, b))) for k in sorted(P) for a, b in _adjacent(rest)]


def gens_C_P(n: int, P: Iterable[int]) -> list[HyperPerm]:
    P = set(P)
    _check_index(n, *P)
    rest = [r for r in range(1, n + 1) if r not in P]
    return [cycles(n, ((a, k), (b, k))) for k in sorted(P) for a, b in _adjacent(rest)]


def gens_Rcheck_P(n: int, P: Iterable[int]) -> list[HyperPerm]:
    """One σ on the columns outside P, applied to every row outside P."""
    P = set(P)
    _check_index(n, *P)
    rest = [c for c in range(1, n + 1) if c not in P]
    return [cycles(n, *[((r, a), (r, b)) for r in rest]) for a, b in _adjacent(rest)]


def gens_Ccheck_P(n: int, P: Iterable[int]) -> list[HyperPerm]:
    P = set(P)
    _check_index(n, *P)
    rest = [r for r in range(1, n + 1) if r not in P]
    return [cycles(n, *[((a, c), (b, c)) for c in rest]) for a, b in _adjacent(rest)]


def gens_R_ij(n: int, i: int, j: int) -> list[HyperPerm]:
    """Permutations of row i fixing columns i and j."""
    _check_index(n, i, j)
    if i == j:
        raise InvalidParams("need i != j")
    rest = [c for c in range(1, n + 1) if c not in (i, j)]
    return [cycles(n, ((i, a), (i, b))) for a, b in _adjacent(rest)]


def gens_C_ij(n: int, i: int, j: int) -> list[HyperPerm]:
    """Permutations of column i fixing rows i and j."""
    _check_index(n, i, j)
    if i == j:
        raise InvalidParams("need i != j")
    rest = [r for r in range(1, n + 1) if r not in (i, j)]
    return [cycles(n, ((a, i), (b, i))) for a, b in _adjacent(rest)]


def gens_S_ij(n: int, i: int, j: int) -> list[HyperPerm]:
    """σ ⊗ 1 for σ running over generators of the stabilizer of i and j."""
    _check_index(n, i, j)
    if i == j:
        raise InvalidParams("need i != j")
    rest = [r for r in range(1, n + 1) if r not in (i, j)]
    return [left(perm_n(n, (a, b))) for a, b in _adjacent(rest)]


def gens_NBC(m: int, C: Iterable[int], order: Sequence[int] | None = None) -> list[HyperPerm]:
    """c0, r0, then adjacent transpositions of C×B in lexicographic order."""
    n = 2 * m
    order = list(order) if order is not None else list(range(1, n + 1))
    if sorted(order) != list(range(1, n + 1)):
        raise InvalidParams("order must list every point of [2m] once")
    C = set(C)
    _check_index(n, *C)
    if len(C) != m:
        raise InvalidParams(f"|C| must be {m}")
    rank = {x: pos for pos, x in enumerate(order)}
    cs = sorted(C, key=rank.get)
    bs = sorted(set(range(1, n + 1)) - C, key=rank.get)
    c0 = cycles(n, *[tuple((c, y) for c in cs) for y in sorted(C)])
    r0 = cycles(n, *[tuple((x, b) for b in bs) for x in sorted(bs)])
    cells = [(c, b) for c in cs for b in bs]
    return [c0, r0] + [cycles(n, (p, q)) for p, q in zip(cells, cells[1:])]


# --- the Table 1 families, n = 4 -------------------------------------------

def line_elements(i: int, j: int) -> dict[str, HyperPerm]:
    """u0, v0, w0, z0, their primed versions, x0, y0, c0, c0', for n=4."""
    n = 4
    h, k = _pair(n, i, j)
    e = {
        "u0": cycles(n, ((i, h), (i, k))),
        "v0": cycles(n, ((j, h), (j, k))),
        "w0": cycles(n, ((h, i), (k, i))),
        "z0": cycles(n, ((h, j), (k, j))),
        "u0'": cycles(n, ((h, i), (h, j))),
        "v0'": cycles(n, ((k, i), (k, j))),
        "w0'": cycles(n, ((i, h), (j, h))),
        "z0'": cycles(n, ((i, k), (j, k))),
        "x0": cycles(n, ((i, i), (j, i)), ((i, j), (j, j))),
        "y0": cycles(n, ((h, h), (h, k)), ((k, h), (k, k))),
        "c0": cycles(n, ((i, h), (i, k), (j, h), (j, k))),
        "c0'": cycles(n, ((i, h), (j, k), (i, k), (j, h))),
    }
    return e


def omega(i: int, j: int, alternative: bool = False) -> Perm:
    h, k = _pair(4, i, j)
    return perm_n(4, (i, k), (j, h)) if alternative else perm_n(4, (i, h), (j, k))


def named_H(i: int, j: int, alternative_omega: bool = False) -> list[tuple[str, HyperPerm]]:
    h, k = _pair(4, i, j)
    e = line_elements(i, j)
    return [
        ("u0v0", e["u0"] * e["v0"]),
        ("w0z0", e["w0"] * e["z0"]),
        ("u0'v0'", e["u0'"] * e["v0'"]),
        ("w0'z0'", e["w0'"] * e["z0'"]),
        ("sigma0⊗1", left(perm_n(4, (i, j)))),
        ("sigma0'⊗1", left(perm_n(4, (h, k)))),
        ("omega0⊗1", left(omega(i, j, alternative_omega))),
    ]


def named_K(i: int, j: int) -> list[tuple[str, HyperPerm]]:
    e = line_elements(i, j)
    return [(name, e[name]) for name in ("u0", "v0", "w0'", "x0", "y0")]


def named_Kprime(i: int, j: int) -> list[tuple[str, HyperPerm]]:
    h, k = _pair(4, i, j)
    e = line_elements(i, j)
    return [("u0", e["u0"]), ("v0", e["v0"]), ("w0'", e["w0'"]),
            ("(i,j)⊗1", left(perm_n(4, (i, j)))), ("(h,k)⊗1", left(perm_n(4, (h, k))))]


def named_M(i: int, j: int) -> list[tuple[str, HyperPerm]]:
    e = line_elements(i, j)
    return [("c0", e["c0"]), ("w0'", e["w0'"]), ("x0", e["x0"]), ("y0", e["y0"]),
            ("u0'v0'", e["u0'"] * e["v0'"])]


def named_Mprime(i: int, j: int) -> list[tuple[str, HyperPerm]]:
    e = line_elements(i, j)
    return [("c0'", e["c0'"]), ("v0", e["v0"]), ("x0", e["x0"]), ("y0", e["y0"]),
            ("w0z0", e["w0"] * e["z0"])]


def named_G(i: int, j: int) -> list[tuple[str, HyperPerm]]:
    h, k = _pair(4, i, j)
    e = line_elements(i, j)
    return [("u0", e["u0"]), ("v0", e["v0"]), ("w0", e["w0"]), ("z0", e["z0"]),
            ("(h,k)⊗1", left(perm_n(4, (h, k)))), ("(i,j)⊗1", left(perm_n(4, (i, j))))]


def named_L(n: int, i: int, bs: Sequence[int]) -> list[tuple[str, HyperPerm]]:
    bs = tuple(bs)
    _check_index(n, i, *bs)
    if i in bs or len(set(bs)) != len(bs) or len(bs) < 2:
        raise InvalidParams("need an r-cycle (r >= 2) of distinct points avoiding i")
    r = len(bs)
    a = cycles(n, tuple((i, b) for b in bs))
    b = cycles(n, tuple((x, i) for x in bs))
    c = cycles(n, *[tuple((x, y) for y in bs) for x in range(1, n + 1) if x != i])
    t = perm_n(n, *[(bs[q], bs[r - 1 - q]) for q in range(r // 2)])
    return [("a", a), ("b", b), ("c", c), ("t⊗1", left(t))]


def named_Q(n: int, i: int) -> list[tuple[str, HyperPerm]]:
    return ([(f"r{q}", g) for q, g in enumerate(gens_R_P(n, {i}), 1)]
            + [(f"ř{q}", g) for q, g in enumerate(gens_Rcheck_P(n, {i}), 1)])


def named_Qprime(n: int, i: int) -> list[tuple[str, HyperPerm]]:
    return ([(f"c{q}", g) for q, g in enumerate(gens_C_P(n, {i}), 1)]
            + [(f"č{q}", g) for q, g in enumerate(gens_Ccheck_P(n, {i}), 1)])


def named_T(a: int, b: int) -> list[tuple[str, HyperPerm]]:
    if {a, b} - {2, 3, 4} or a == b:
        raise InvalidParams("need distinct a, b in {2, 3, 4}")
    (c,) = {2, 3, 4} - {a, b}
    n = 4
    s1 = cycles(n, ((1, 1), (1, b)), ((b, 1), (b, b)), ((1, a), (1, c)), ((b, a), (b, c)))
    s2 = cycles(n, ((1, b), (a, b)), ((b, b), (c, b)), ((1, c), (a, c)), ((b, c), (c, c)))
    s3 = cycles(n, ((a, 1), (a, b)), ((c, 1), (c, b)), ((a, a), (a, c)), ((c, a), (c, c)))
    return [("s1", s1), ("s2", s2), ("s3", s3)]


def named_BOG(n: int) -> list[tuple[str, HyperPerm]]:
    return [(f"({q},{q + 1})⊗1", left(perm_n(n, (q, q + 1)))) for q in range(1, n)]


@dataclass(frozen=True)
class FamilySpec:
    family_id: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family_id not in FAMILY_IDS:
            raise InvalidParams(f"unknown family {self.family_id!r}")
        n = self.params.get("n", 4)
        if self.family_id in N4_ONLY and n != 4:
            raise InvalidParams(f"family {self.family_id} is defined for n=4 only")

    @property
    def n(self) -> int:
        if self.family_id == "NBC":
            return 2 * self.params["m"]
        return self.params.get("n", 4)

    def label(self) -> str:
        p = self.params
        if self.family_id in ("H", "K", "Kprime", "M", "Mprime", "G"):
            return f"{self.family_id}_{p['i']}{p['j']}"
        if self.family_id == "T":
            return f"T_{p['a']}{p['b']}"
        if self.family_id == "L":
            return f"L_{p['i']}({','.join(map(str, p['bs']))})"
        if self.family_id in ("Q", "Qprime"):
            return f"{self.family_id}_{p['i']}"
        if self.family_id == "BOG":
            return "BOG"
        return f"{self.family_id}{p}"

    def hashable_params(self) -> tuple:
        return tuple(sorted((k, tuple(v) if isinstance(v, (list, tuple, set, frozenset)) else v)
                            for k, v in self.params.items()))


def named_generators(spec: FamilySpec) -> list[tuple[str, HyperPerm]]:
    f, p = spec.family_id, spec.params
    n = spec.n
    if f == "H":
        return named_H(p["i"], p["j"], p.get("alternative_omega", False))
    if f == "K":
        return named_K(p["i"], p["j"])
    if f == "Kprime":
        return named_Kprime(p["i"], p["j"])
    if f == "M":
        return named_M(p["i"], p["j"])
    if f == "Mprime":
        return named_Mprime(p["i"], p["j"])
    if f == "G":
        return named_G(p["i"], p["j"])
    if f == "L":
        return named_L(n, p["i"], p["bs"])
    if f == "Q":
        return named_Q(n, p["i"])
    if f == "Qprime":
        return named_Qprime(n, p["i"])
    if f == "T":
        return named_T(p["a"], p["b"])
    if f == "BOG":
        return named_BOG(n)
    if f == "NBC":
        gens = gens_NBC(p["m"], p["C"], p.get("order"))
        return [("c0", gens[0]), ("r0", gens[1])] + [(f"s{q}", g) for q, g in enumerate(gens[2:], 1)]
    simple = {
        "R_P": lambda: gens_R_P(n, p["P"]),
        "Rcheck_P": lambda: gens_Rcheck_P(n, p["P"]),
        "C_P": lambda: gens_C_P(n, p["P"]),
        "Ccheck_P": lambda: gens_Ccheck_P(n, p["P"]),
        "R_ij": lambda: gens_R_ij(n, p["i"], p["j"]),
        "C_ij": lambda: gens_C_ij(n, p["i"], p["j"]),
        "S_ij": lambda: gens_S_ij(n, p["i"], p["j"]),
        "row_block": lambda: [row_block(p["rows"], p["sigma"])],
        "col_block": lambda: [col_block(p["cols"], p["sigma"])],
    }
    return [(f"g{q}", g) for q, g in enumerate(simple[f](), 1)]


def subgroup_generators(spec: FamilySpec) -> list[HyperPerm]:
    return [g for _, g in named_generators(spec)]


def pairs4() -> list[tuple[int, int]]:
    return list(combinations(range(1, 5), 2))
