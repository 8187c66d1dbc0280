import pytest
from hypothesis import given

from hyperweyl.errors import DomainError, DomainMismatch, UnsupportedLevel
from hyperweyl.hyper import (HyperDomain, HyperPerm, antitranspose, decode, embed_left, embed_right,
                             encode, level_one, tensor)
from hyperweyl.perm import Perm

from conftest import hyperperms, perms_of, random_hyper


def test_codec_examples():
    assert encode((1, 1), 4) == 0
    assert encode((2, 4), 4) == 7
    assert decode(15, 4, 2) == (4, 4)
    with pytest.raises(DomainError):
        encode((0, 1), 4)


def test_codec_bijective():
    d = HyperDomain(3, 3)
    assert [d.encode(d.decode(i)) for i in range(d.size)] == list(range(27))


def test_tensor_examples_n2():
    s = level_one(Perm.from_cycles([[0, 1]], 2))
    e = HyperPerm.identity(2, 1)
    left, right = tensor(s, e), tensor(e, s)
    for x in (1, 2):
        assert left((1, x)) == (2, x) and left((2, x)) == (1, x)
        assert right((x, 1)) == (x, 2) and right((x, 2)) == (x, 1)
    assert tensor(e, e).is_identity()
    assert embed_right(s, 1) == right


def test_tensor_mismatch():
    with pytest.raises(DomainMismatch):
        tensor(HyperPerm.identity(2, 1), HyperPerm.identity(3, 1))


@given(hyperperms(3, 1), hyperperms(3, 1), hyperperms(3, 2), hyperperms(3, 2))
def test_tensor_interchange(u, u2, v, v2):
    assert tensor(u * u2, v * v2) == tensor(u, v) * tensor(u2, v2)


@given(hyperperms(4, 2), hyperperms(4, 2))
def test_embeddings_are_homomorphisms(u, v):
    for emb in (embed_left, embed_right):
        assert emb(u * v, 1) == emb(u, 1) * emb(v, 1)
        assert (emb(u, 1) == emb(v, 1)) == (u == v)
    assert embed_left(u, 0) == u
    assert embed_left(embed_left(u, 1), 1) == embed_left(u, 2)


def test_antitranspose_involution(rng):
    assert antitranspose(HyperPerm.identity(4, 2)).is_identity()
    for _ in range(100):
        u = random_hyper(rng)
        assert antitranspose(antitranspose(u)) == u


@given(perms_of(4))
def test_antitranspose_of_inner(p):
    w0 = Perm([3, 2, 1, 0])
    lhs = antitranspose(tensor(level_one(p), level_one(p.inverse())))
    rhs = tensor(level_one(w0 * p.inverse() * w0), level_one(w0 * p * w0))
    assert lhs == rhs


def test_antitranspose_formula_pointwise():
    u = HyperPerm.parse("((1,2),(3,1),(2,2))", 4)
    a = antitranspose(u)
    for x in range(1, 5):
        for y in range(1, 5):
            u1, u2 = u((5 - y, 5 - x))
            assert a((x, y)) == (5 - u2, 5 - u1)


def test_antitranspose_level():
    with pytest.raises(UnsupportedLevel):
        antitranspose(HyperPerm.identity(2, 3))
