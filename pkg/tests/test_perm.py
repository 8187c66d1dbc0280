import pytest
from hypothesis import given, strategies as st

from hyperweyl.errors import DomainError, DomainMismatch, NotDisjoint, ParseError
from hyperweyl.perm import Perm, compose, cycle_type, format_cycles, parse_cycles

from conftest import perms_of


def p1(text, n):
    return parse_cycles(text, n)


def test_compose_is_right_to_left():
    # p(q(x)) with p=(1,2), q=(2,3): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    p, q = p1("(1,2)", 3), p1("(2,3)", 3)
    r = compose(p, q)
    assert [r(x) for x in range(3)] == [p(q(x)) for x in range(3)] == [1, 2, 0]
    assert r == p1("(1,2,3)", 3)


def test_identity_and_inverse_laws():
    q = p1("(1,4,2)", 4)
    assert compose(Perm.identity(4), q) == q
    assert compose(q, q.inverse()).is_identity()


def test_degree_mismatch():
    with pytest.raises(DomainMismatch):
        compose(Perm.identity(3), Perm.identity(4))


def test_cycle_type_examples():
    assert cycle_type(Perm.identity(5)) == ()
    three = parse_cycles("((2,2),(2,4),(4,2))", 4, 2)
    assert three.cycle_type() == (3,)
    assert parse_cycles("((1,1),(1,2))((3,3),(4,4))", 4, 2).cycle_type() == (2, 2)


def test_parse_examples():
    u = parse_cycles("((1,2),(1,3))", 4, 2)
    assert u(1) == 2 and u(2) == 1
    assert sum(u(x) != x for x in range(16)) == 2
    assert parse_cycles("", 4, 2).is_identity()
    assert parse_cycles("  ", 4).is_identity()


def test_format_normalizes():
    u = parse_cycles("((2,4),(4,2),(2,2))", 4, 2)
    assert format_cycles(u, 4, 2) == "((2,2),(2,4),(4,2))"
    assert format_cycles(parse_cycles("((4,2))", 4, 2), 4, 2) == "()"
    assert format_cycles(p1("(3,1)(5,4)", 5)) == "(1,3)(4,5)"


def test_parse_errors():
    with pytest.raises(ParseError) as exc:
        parse_cycles("((1,2),(1,3)", 4, 2)
    assert exc.value.offset == 12
    with pytest.raises(ParseError):
        parse_cycles("(1,x)", 4)
    with pytest.raises(NotDisjoint):
        parse_cycles("(1,2)(2,3)", 4)
    with pytest.raises(DomainError):
        parse_cycles("((1,5),(1,2))", 4, 2)
    with pytest.raises(DomainError):
        parse_cycles("(0,1)", 4)


@given(perms_of(6), perms_of(6), perms_of(6))
def test_associative(p, q, r):
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(perms_of(7))
def test_order_is_lcm_of_cycle_type(p):
    m = 1
    while not (p ** m).is_identity():
        m += 1
    assert m == p.order()


@given(st.sampled_from([(4, 1), (4, 2), (4, 3)]).flatmap(
    lambda nt: st.tuples(st.just(nt), perms_of(nt[0] ** nt[1]))))
def test_round_trip(arg):
    (n, t), p = arg
    assert parse_cycles(format_cycles(p, n, t), n, t) == p
