import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from gaugeca.errors import InvalidArgumentError, ResourceLimitError
from gaugeca.permutation import (
    Perm,
    PermTable,
    apply,
    compose,
    enumerate_perms,
    identity,
    inverse,
    parse_perm,
    random_perm,
)


def P(*images):
    return Perm(images)


def test_identity():
    assert identity(3).images == (0, 1, 2)
    assert identity(1).images == (0,)
    assert apply(identity(3), 2) == 2
    with pytest.raises(InvalidArgumentError):
        identity(0)


def test_compose_table():
    # 0 -q-> 0 -p-> 1 ; 1 -q-> 2 -p-> 2 ; 2 -q-> 1 -p-> 0
    assert compose(P(1, 0, 2), P(0, 2, 1)) == P(1, 2, 0)


def test_compose_identity_and_inverse_in_s3():
    for q in enumerate_perms(3):
        assert compose(identity(3), q) == q
        assert compose(q, inverse(q)) == identity(3)


def test_compose_mismatch():
    with pytest.raises(InvalidArgumentError):
        compose(identity(2), identity(3))


def test_inverse():
    assert inverse(identity(3)) == identity(3)
    assert inverse(P(1, 0, 2)) == P(1, 0, 2)
    assert inverse(P(1, 2, 0)) == P(2, 0, 1)


def test_apply():
    assert apply(P(1, 0, 2), 0) == 1
    assert apply(P(1, 0, 2), 2) == 2
    with pytest.raises(InvalidArgumentError):
        apply(P(1, 0, 2), 3)


def test_apply_of_compose_exhaustive():
    ps = enumerate_perms(3)
    for p, q, c in itertools.product(ps, ps, range(3)):
        assert apply(compose(p, q), c) == apply(p, apply(q, c))


def test_enumerate():
    assert [p.images for p in enumerate_perms(1)] == [(0,)]
    assert [p.images for p in enumerate_perms(2)] == [(0, 1), (1, 0)]
    assert len(enumerate_perms(3)) == 6
    with pytest.raises(ResourceLimitError):
        enumerate_perms(7)
    assert len(enumerate_perms(7, bound=7)) == 5040


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_enumerate_is_lexicographic_group(k):
    ps = enumerate_perms(k)
    assert len(set(ps)) == math.factorial(k)
    assert [p.images for p in ps] == sorted(p.images for p in ps)
    members = set(ps)
    for p in ps:
        assert inverse(p) in members
        for q in ps:
            assert compose(p, q) in members


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_group_axioms_exhaustive(k):
    ps = enumerate_perms(k)
    e = identity(k)
    for p in ps:
        assert compose(e, p) == p == compose(p, e)
        assert compose(inverse(p), p) == e
    for p, q, r in itertools.product(ps, repeat=3):
        assert compose(compose(p, q), r) == compose(p, compose(q, r))


def test_s3_is_non_abelian():
    ps = enumerate_perms(3)
    assert any(compose(p, q) != compose(q, p) for p in ps for q in ps)
    ps2 = enumerate_perms(2)
    assert all(compose(p, q) == compose(q, p) for p in ps2 for q in ps2)


def test_invalid_perms():
    with pytest.raises(InvalidArgumentError, match="bijection"):
        P(0, 0, 1)
    with pytest.raises(InvalidArgumentError):
        P()
    with pytest.raises(InvalidArgumentError):
        P(1, 2)


def test_literals():
    assert str(P(1, 0, 2)) == "[1,0,2]"
    assert parse_perm(" [1, 0,2] ") == P(1, 0, 2)
    with pytest.raises(InvalidArgumentError):
        parse_perm("1,0,2")
    with pytest.raises(InvalidArgumentError):
        parse_perm("[0,0,1]")
    with pytest.raises(InvalidArgumentError):
        parse_perm("[1,0]", k=3)


def test_random_perm_deterministic_bijection():
    assert random_perm(1, random.Random(99)) == identity(1)
    a = [random_perm(5, random.Random(7)) for _ in range(3)]
    assert a[0] == a[1] == a[2]
    rng = random.Random(3)
    for _ in range(200):
        assert sorted(random_perm(6, rng).images) == list(range(6))


def test_random_perm_uniform():
    rng = random.Random(2024)
    n = 6000
    counts = {}
    for _ in range(n):
        p = random_perm(3, rng).images
        counts[p] = counts.get(p, 0) + 1
    assert len(counts) == 6
    sd = math.sqrt(n * (1 / 6) * (5 / 6))
    for c in counts.values():
        assert abs(c - n / 6) <= 5 * sd


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_perm_table_matches_object_algebra(k):
    t = PermTable(k)
    for a, p in enumerate(t.perms):
        assert t.perms[t.inv[a]] == inverse(p)
        assert tuple(t.act[a]) == p.images
        for b, q in enumerate(t.perms):
            assert t.perms[t.mul[a, b]] == compose(p, q)


@given(st.permutations(range(5)), st.permutations(range(5)))
def test_inverse_of_product(p, q):
    p, q = Perm(tuple(p)), Perm(tuple(q))
    assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))
