from hyperweyl.families import FamilySpec
from hyperweyl.outer import pi_equal
from hyperweyl.table1 import (build, h_conjugates, h_relations, omega_substitution_invariant, table_rows,
                              verify_distinctness)


def test_row_shape():
    rows = table_rows()
    assert [r.order for r in rows] == [128, 96, 64, 64, 54, 36, 24]
    assert [r.multiplicity for r in rows] == [3, 6, 12, 6, 4, 8, 7]
    assert all(len(r.specs) == r.multiplicity for r in rows)
    assert sum(r.multiplicity for r in rows) == 46


def test_order_64_rows_are_distinct():
    M = build(FamilySpec("M", {"i": 1, "j": 2}))
    G = build(FamilySpec("G", {"i": 1, "j": 2}))
    assert M.order == G.order == 64
    assert not pi_equal(M, G)


def test_H_distinct_and_kprime_equal():
    hs = [(FamilySpec("H", {"i": 1, "j": j}), build(FamilySpec("H", {"i": 1, "j": j}))) for j in (2, 3, 4)]
    assert verify_distinctness(hs).all_distinct
    k = FamilySpec("K", {"i": 1, "j": 2})
    kp = FamilySpec("Kprime", {"i": 1, "j": 2})
    rep = verify_distinctness([(k, build(k)), (kp, build(kp))])
    assert rep.equal_pairs == [("K_12", "Kprime_12")]


def test_H_relations():
    for i, j in [(1, 2), (1, 3), (2, 4)]:
        assert all(h_relations(i, j).values())


def test_H_conjugate_by_swaps():
    assert all(h_conjugates().values())


def test_omega_substitution():
    assert omega_substitution_invariant(1, 2)
    assert omega_substitution_invariant(1, 4)
