from itertools import permutations

import pytest

from hyperweyl.compat import Ok, bicompatible, bicompatible_set, compatible
from hyperweyl.errors import InvalidParams
from hyperweyl.families import (FamilySpec, col_block, gens_NBC, gens_R_P, gens_Rcheck_P, named_generators,
                                named_H, named_L, named_T, pairs4, perm_n, row_block, subgroup_generators,
                                u_sigma, v_sigma)
from hyperweyl.hyper import HyperPerm
from hyperweyl.perm import Perm
from hyperweyl.stability import is_rank_one
from hyperweyl.table1 import table_rows


def fixing(n, *pts):
    return [Perm(p) for p in permutations(range(n)) if all(p[x - 1] == x - 1 for x in pts)]


def R(n, i, j):
    return [v_sigma(i, s) for s in fixing(n, i, j)]


def C(n, i, j):
    return [u_sigma(i, s) for s in fixing(n, i, j)]


def test_row_block_examples():
    assert row_block({1}, perm_n(4, (2, 3))).cycles_str() == "((1,2),(1,3))"
    assert row_block({1, 3}, perm_n(4, (2, 4))).cycles_str() == "((1,2),(1,4))((3,2),(3,4))"
    assert row_block(set(), perm_n(4, (1, 2))).is_identity()
    assert col_block({2}, perm_n(4, (1, 3))).cycles_str() == "((1,2),(3,2))"


def test_L_generators_as_displayed():
    g = dict(named_L(4, 1, (3, 4, 2)))
    P = lambda s: HyperPerm.parse(s, 4)
    assert g["a"] == P("((1,3),(1,4),(1,2))")
    assert g["b"] == P("((3,1),(4,1),(2,1))")
    assert g["c"] == P("((2,3),(2,4),(2,2))((3,3),(3,4),(3,2))((4,3),(4,4),(4,2))")
    assert g["t⊗1"].cycles_str() == "((2,1),(3,1))((2,2),(3,2))((2,3),(3,3))((2,4),(3,4))"
    assert bicompatible_set([g["a"], g["b"], g["c"]]) is Ok


def test_T_generators_are_four_transpositions():
    for a in (2, 3, 4):
        for b in (2, 3, 4):
            if a != b:
                gens = [g for _, g in named_T(a, b)]
                assert [g.cycle_type() for g in gens] == [(2, 2, 2, 2)] * 3
                assert bicompatible_set(gens) is Ok


def test_H_has_seven_generators_six_commuting():
    gens = named_H(1, 3)
    assert len(gens) == 7
    six = [g for name, g in gens if not name.startswith("omega")]
    assert bicompatible_set(six) is Ok
    assert all(u * v == v * u for u in six for v in six)


def test_every_generator_is_rank_one():
    for row in table_rows():
        for spec in row.specs:
            for name, g in named_generators(spec):
                assert is_rank_one(g), (spec.label(), name)
    for spec in [FamilySpec("Kprime", {"i": 1, "j": 2}), FamilySpec("NBC", {"m": 2, "C": (1, 3)}),
                 FamilySpec("R_P", {"n": 5, "P": (1, 2)}), FamilySpec("Ccheck_P", {"n": 4, "P": (2,)}),
                 FamilySpec("S_ij", {"n": 5, "i": 1, "j": 2})]:
        assert all(is_rank_one(g) for g in subgroup_generators(spec))


@pytest.mark.parametrize("P", [{1}, {1, 2}])
def test_row_subgroup_generators_bicompatible(P):
    assert bicompatible_set(gens_R_P(4, P) + gens_Rcheck_P(4, P)) is Ok


def test_nbc_generators_bicompatible():
    assert bicompatible_set(gens_NBC(2, {1, 2})) is Ok
    assert bicompatible_set(gens_NBC(2, {2, 4}, order=[4, 3, 2, 1])) is Ok


@pytest.mark.parametrize("n", [4, 5])
def test_rows_of_distinct_indices_bicompatible(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                for u in R(n, i, j):
                    for v in R(n, j, i):
                        assert bicompatible(u, v)


def test_column_row_compatibility_at_n4():
    for i, j in [(a, b) for a in range(1, 5) for b in range(1, 5) if a != b]:
        for u in C(4, i, j):
            assert all(compatible(u, v) for v in R(4, j, i))
            assert all(compatible(u, v) for v in R(4, i, j))


def test_column_row_compatibility_fails_at_n5():
    failures = sum(not compatible(u, v) for u in C(5, 1, 2) for v in R(5, 2, 1))
    assert failures > 0


def test_invalid_params():
    with pytest.raises(InvalidParams):
        FamilySpec("H", {"n": 5, "i": 1, "j": 2})
    with pytest.raises(InvalidParams):
        named_generators(FamilySpec("K", {"i": 2, "j": 2}))
    with pytest.raises(InvalidParams):
        named_L(4, 1, (1, 2, 3))
    with pytest.raises(InvalidParams):
        named_T(1, 2)
    with pytest.raises(InvalidParams):
        FamilySpec("nope")
    with pytest.raises(InvalidParams):
        u_sigma(1, perm_n(4, (1, 2)))


def test_labels():
    assert FamilySpec("K", {"i": 1, "j": 2}).label() == "K_12"
    assert FamilySpec("L", {"n": 4, "i": 1, "bs": (3, 4, 2)}).label() == "L_1(3,4,2)"
    assert len(pairs4()) == 6
