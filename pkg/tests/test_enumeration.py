from math import comb

import pytest

from hyperweyl.enumeration import (candidate_count, census_csv, count_row_family, count_two_disjoint,
                                   enumerate_rank1, is_col_preserving, is_row_preserving, kind,
                                   row_family_brute, two_disjoint_brute)
from hyperweyl.errors import CrosscheckFailed, InvalidParams, ResourceExceeded
from hyperweyl.hyper import antitranspose
from hyperweyl.stability import stability_rank


def test_candidate_counts():
    assert [candidate_count(4, c) for c in (1, 2, 3)] == [120, 5460, 120120]


def test_census_transpositions():
    c = enumerate_rank1(4, (2,))
    assert c.count == 36 and c.candidates == 120
    kinds = [kind(u) for u in c.perms]
    assert kinds.count("horizontal") == kinds.count("vertical") == kinds.count("other") == 12
    assert c.perms == sorted(c.perms, key=lambda u: sorted(tuple(sorted(x)) for x in u.cycles()))


def test_census_two_transpositions():
    assert enumerate_rank1(4, (2, 2)).count == 60


def test_census_closed_under_antitranspose():
    for ctype in [(2,), (2, 2)]:
        perms = {u.images for u in enumerate_rank1(4, ctype).perms}
        for u in enumerate_rank1(4, ctype).perms:
            a = antitranspose(u)
            assert a.images in perms
            assert antitranspose(a) == u


def test_census_entries_rank_one_by_psi():
    for u in enumerate_rank1(4, (2,)).perms:
        assert stability_rank(u, 2, 2).status == "Rank(1)"


def test_census_n5():
    assert enumerate_rank1(5, (2,)).count == 120


def test_census_guards():
    with pytest.raises(InvalidParams):
        enumerate_rank1(4, (3,))
    with pytest.raises(ResourceExceeded):
        enumerate_rank1(4, (2, 2, 2), budget=1000)


def test_formula_examples():
    assert count_row_family(4, 3, crosscheck=True) == 12
    assert count_two_disjoint(4, crosscheck=True) == 12
    assert count_row_family(5, 2, crosscheck=True) == comb(5, 2) * (comb(3, 2) + comb(2, 2)) == 40


def test_brute_force_matches_formula_small():
    for n in (3, 4):
        for k in range(2, n + 1):
            assert row_family_brute(n, k) == count_row_family(n, k)
        assert two_disjoint_brute(n) == count_two_disjoint(n)


def test_crosscheck_failure_is_raised(monkeypatch):
    import hyperweyl.enumeration as en
    monkeypatch.setattr(en, "row_family_formula", lambda n, k: -1)
    with pytest.raises(CrosscheckFailed):
        en.count_row_family(4, 2, crosscheck=True)
    with pytest.raises(InvalidParams):
        count_row_family(4, 1)


def test_csv_columns():
    text = census_csv(enumerate_rank1(4, (2,)))
    lines = text.splitlines()
    assert lines[0] == "cycles,is_row_preserving,is_col_preserving,outer_canonical"
    assert len(lines) == 37
    assert lines[1].startswith('"((1,2),(1,3))",1,0,')


def test_preservation_predicates():
    c = enumerate_rank1(4, (2,)).perms
    assert not any(is_row_preserving(u) and is_col_preserving(u) for u in c)
