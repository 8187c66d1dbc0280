from itertools import permutations

from hyperweyl.compat import compatible
from hyperweyl.families import col_block, row_block, u_sigma, v_sigma
from hyperweyl.hyper import HyperPerm
from hyperweyl.perm import Perm
from hyperweyl.structural import (col_block_partner, col_cycles, col_cycles_partner, commute,
                                  counterexample_sides, crossvalidate, row_block_partner, row_cycles,
                                  row_cycles_partner, row_two_cycles, row_two_cycles_partner)

from conftest import random_hyper


def test_crossvalidation_small_sample():
    reports = crossvalidate(4, n_random=30, n_planted=30, seed=7)
    assert [r.name for r in reports] == ["row_block", "col_block", "row_cycles", "col_cycles",
                                         "row_two_cycles", "column_vs_row_commute"]
    for r in reports:
        assert r.ok, (r.name, r.disagreements[:3])
        assert r.positives > 0


def test_constructors():
    u = row_cycles(4, [1, 3], (2, 4, 3))
    assert u.cycles_str() == "((1,2),(1,4),(1,3))((3,2),(3,4),(3,3))"
    assert col_cycles(4, [2], (1, 3)).cycles_str() == "((1,2),(3,2))"
    assert row_two_cycles(4, [1], (1, 2), (3, 4)).cycles_str() == "((1,1),(1,2))((1,3),(1,4))"


def test_witness_reconstructs_v():
    bs = (2, 4, 3)
    sigma = [3, 1, 4, 2]
    shift = [0, 2, 1, 1]

    def f(p):
        r, x = p
        if r in bs:
            q = bs.index(r)
            return (bs[(q + shift[x - 1]) % 3], sigma[x - 1])
        return p
    v = HyperPerm.from_function(f, 4, 2)
    assert row_cycles_partner(v, bs) == (sigma, shift)
    assert compatible(v, row_cycles(4, [1], bs))


def test_predicates_on_random_v(rng):
    for _ in range(50):
        v = random_hyper(rng)
        assert row_block_partner(v, [1, 2]) == compatible(row_block([1, 2], Perm([1, 0, 2, 3])), v)
        assert col_block_partner(v, [4]) == compatible(v, col_block([4], Perm([0, 2, 1, 3])))
        assert (row_cycles_partner(v, (1, 2)) is not None) == compatible(v, row_cycles(4, [3], (1, 2)))
        assert (col_cycles_partner(v, (1, 2, 3)) is not None) == compatible(col_cycles(4, [1], (1, 2, 3)), v)
        assert ((row_two_cycles_partner(v, (1, 3), (2, 4)) is not None)
                == compatible(v, row_two_cycles(4, [2], (1, 3), (2, 4))))


def test_commute_criterion_exhaustive_n4():
    for i in range(1, 5):
        fix = [Perm(p) for p in permutations(range(4)) if p[i - 1] == i - 1]
        for s in fix:
            for t in fix:
                assert compatible(u_sigma(i, s), v_sigma(i, t)) == commute(s, t)


def test_counterexample_values():
    assert counterexample_sides() == [((2, 8, 5), (2, 1, 5)), ((3, 1, 3), (3, 4, 3))]
