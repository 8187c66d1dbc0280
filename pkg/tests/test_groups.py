import random

import pytest
from hypothesis import given, strategies as st

from hyperweyl.errors import CapExceeded, UnknownModel
from hyperweyl.families import (FamilySpec, gens_NBC, gens_R_P, gens_Rcheck_P, named_L, named_T,
                                subgroup_generators)
from hyperweyl.groups import (closure, fingerprint, is_subgroup_closed, isomorphic, lambda_closure,
                              model_group, subgroups_of_order)
from hyperweyl.perm import Perm

S4_GENS = [Perm([1, 0, 2, 3]), Perm([0, 2, 1, 3]), Perm([0, 1, 3, 2])]


def hist(G):
    return dict(fingerprint(G).element_order_histogram)


def test_closure_orders():
    assert closure(S4_GENS).order == 24
    assert closure([g for _, g in named_T(2, 4)]).order == 24
    H13 = subgroup_generators(FamilySpec("H", {"i": 1, "j": 3}))
    assert lambda_closure(H13).order == 128
    assert closure(H13).order == 512


def test_closure_cap():
    with pytest.raises(CapExceeded):
        closure(S4_GENS, cap=10)


def test_identity_and_closure_properties():
    G = closure([g for _, g in named_T(3, 2)])
    assert tuple(range(16)) in G
    assert is_subgroup_closed(G.elements)
    assert is_subgroup_closed(lambda_closure(subgroup_generators(FamilySpec("Q", {"i": 2}))).elements,
                              "lambda", 4)


def test_fingerprint_examples():
    fp = fingerprint(closure(S4_GENS))
    assert hist(closure(S4_GENS)) == {1: 1, 2: 9, 3: 8, 4: 6}
    assert fp.center_order == 1 and fp.conjugacy_class_count == 5 and fp.abelianization == (2,)
    z3 = model_group("Z3^3")
    assert z3.order == 27 and hist(z3) == {1: 1, 3: 26}
    assert fingerprint(z3).abelianization == (3, 3, 3)
    L1 = lambda_closure([g for _, g in named_L(4, 1, (3, 4, 2))])
    assert L1.order == 54


def test_fingerprint_histogram_sums():
    for name in ("S4", "S3xS3", "Z2xZ2xS4", "Z2^3xD8", "Z2^6:Z2", "Z2x(Z2^4:Z2)", "Z3^3:Z2"):
        G = model_group(name)
        h = hist(G)
        assert sum(h.values()) == G.order and h[1] == 1


def test_models():
    assert model_group("S3xS3").order == 36
    assert model_group("Z3^3:Z2").order == 54
    assert model_group("S_4").order == 24
    assert [model_group(m).order for m in ("Z2^6:Z2", "Z2xZ2xS4", "Z2^3xD8", "Z2x(Z2^4:Z2)")] == [128, 96, 64, 64]
    with pytest.raises(UnknownModel):
        model_group("A5")


def test_isomorphic_examples():
    assert isomorphic(closure([g for _, g in named_T(2, 4)]), model_group("S4")).status == "Yes"
    M12 = lambda_closure(subgroup_generators(FamilySpec("M", {"i": 1, "j": 2})))
    res = isomorphic(M12, model_group("Z2^3xD8"))
    assert res.status == "Yes"
    assert len(set(res.mapping.values())) == 64
    no = isomorphic(model_group("Z2^3xD8"), model_group("Z2x(Z2^4:Z2)"))
    assert no.status == "No" and "histogram" in no.reason
    assert hist(model_group("Z2^3xD8")) == {1: 1, 2: 47, 4: 16}
    assert hist(model_group("Z2x(Z2^4:Z2)")) == {1: 1, 2: 39, 4: 24}


def test_isomorphism_map_is_homomorphism():
    G = closure([g for _, g in named_T(3, 4)])
    H = model_group("S4")
    res = isomorphic(G, H)
    f = res.mapping
    tg, th = G.table(), H.table()
    assert all(f[tg[a][b]] == th[f[a]][f[b]] for a in range(24) for b in range(24))


def test_isomorphic_budget_unknown():
    G = lambda_closure(subgroup_generators(FamilySpec("H", {"i": 1, "j": 2})))
    assert isomorphic(G, model_group("Z2^6:Z2"), budget=1).status == "Unknown"


def test_subgroups_of_order_small():
    S4 = model_group("S4")
    assert len(subgroups_of_order(S4, 24)) == 1
    a4 = subgroups_of_order(S4, 12)
    assert len(a4) == 1 and hist(a4[0]) == {1: 1, 2: 3, 3: 8}
    assert len(subgroups_of_order(S4, 8)) == 3
    assert subgroups_of_order(S4, 5) == []


@pytest.mark.parametrize("P,order", [({1}, 36), ({1, 2}, 8)])
def test_row_subgroup_order_law(P, order):
    G = closure(gens_R_P(4, P) + gens_Rcheck_P(4, P))
    assert G.order == order


def test_nbc_order_law():
    assert closure(gens_NBC(2, {1, 2})).order == 96


@pytest.mark.parametrize("gens", [
    gens_NBC(2, {1, 3}),
    gens_R_P(4, {1}) + gens_Rcheck_P(4, {1}),
    [g for _, g in named_T(4, 2)],
    [g for _, g in named_L(4, 2, (1, 3, 4))][:3],
])
def test_lambda_is_faithful_on_bicompatible_groups(gens):
    assert closure(gens).element_set() == lambda_closure(gens).element_set()


@given(st.permutations(list(range(3))))
def test_closure_independent_of_generator_order(order):
    gens = [g for _, g in named_T(2, 3)]
    assert closure([gens[i] for i in order]).element_set() == closure(gens).element_set()


@given(st.randoms(use_true_random=False))
def test_fingerprint_conjugation_invariant(r):
    G = closure([g for _, g in named_T(2, 4)])
    g = list(range(16))
    r.shuffle(g)
    gi = [0] * 16
    for x, y in enumerate(g):
        gi[y] = x
    conj = [tuple(g[e[gi[x]]] for x in range(16)) for e in G.elements]
    H = closure(conj)
    assert fingerprint(H) == fingerprint(G)
