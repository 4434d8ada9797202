import itertools

import pytest

from gaugeca.ca import FullState, MatterConfig, parse_matter
from gaugeca.errors import InvalidArgumentError, ResourceLimitError
from gaugeca.gauge import GaugeField, GaugeTransform, gauge_field, gauge_matter, gauge_state, parse_field, step_T
from gaugeca.invariance import count_orbits, orbit_field, orbit_joint, orbit_matter, same_orbit
from gaugeca.permutation import enumerate_perms

# number of conjugacy classes of S(K), i.e. partitions of K
CLASSES = {1: 1, 2: 2, 3: 3, 4: 5}


def transforms(L, K):
    return [GaugeTransform(s, K) for s in itertools.product(enumerate_perms(K), repeat=L)]


def objects(L, K, kind):
    matter = [MatterConfig.from_flat(f, K) for f in itertools.product(range(K), repeat=2 * L)]
    fields = [GaugeField(a, K) for a in itertools.product(enumerate_perms(K), repeat=L)]
    if kind == "matter":
        return matter
    if kind == "field":
        return fields
    return [FullState(p, a) for p in matter for a in fields]


ACT = {"matter": gauge_matter, "field": gauge_field, "joint": gauge_state}


def brute_force_orbits(L, K, kind):
    act = ACT[kind]
    gs = transforms(L, K)
    seen, orbits = set(), []
    for obj in objects(L, K, kind):
        if obj in seen:
            continue
        orbit = {act(g, obj) for g in gs}
        seen |= orbit
        orbits.append(orbit)
    return orbits


@pytest.mark.parametrize("L,K,n", [(1, 2, 2), (1, 3, 2), (2, 2, 4)])
def test_matter_counts(L, K, n):
    result = count_orbits(L, K, "matter")
    assert result.count == n and result.agree


CASES = [(L, K) for L in (1, 2, 3) for K in (1, 2, 3)]


@pytest.mark.parametrize("L,K", CASES)
@pytest.mark.parametrize("kind", ["matter", "field", "joint"])
def test_direct_equals_burnside(L, K, kind):
    result = count_orbits(L, K, kind, bound=10**8)
    assert result.agree, str(result)


@pytest.mark.parametrize("L,K", [(1, 2), (2, 2), (1, 3), (2, 3)])
@pytest.mark.parametrize("kind", ["matter", "field", "joint"])
def test_count_matches_brute_force(L, K, kind):
    assert count_orbits(L, K, kind).count == len(brute_force_orbits(L, K, kind))


@pytest.mark.parametrize("L,K", [(L, K) for L in (1, 2, 3) for K in (1, 2, 3, 4) if L * K < 12])
def test_field_orbits_are_conjugacy_classes(L, K):
    # gauge away all links but one; what remains is the holonomy up to conjugation
    assert count_orbits(L, K, "field").count == CLASSES[K]


@pytest.mark.parametrize("L", [1, 2, 3])
def test_matter_orbits_closed_form(L):
    # each cell is classified by whether its two subcells agree
    for K in (2, 3):
        assert count_orbits(L, K, "matter").count == 2**L


@pytest.mark.parametrize("kind", ["matter", "field", "joint"])
def test_orbits_partition_the_space(kind):
    L, K = 2, 2
    orbits = brute_force_orbits(L, K, kind)
    everything = objects(L, K, kind)
    assert sum(len(o) for o in orbits) == len(everything)
    for o in orbits:
        for x in o:
            got = {"matter": orbit_matter, "field": orbit_field, "joint": orbit_joint}[kind](x)
            assert set(got.members) == o
            assert list(got.members) == sorted(got.members, key=lambda m: m.sort_key())


def test_same_orbit_is_an_equivalence():
    objs = objects(2, 2, "matter")
    rel = {(a, b): same_orbit(a, b) for a in objs for b in objs}
    for a in objs:
        assert rel[a, a]
    for a, b in itertools.product(objs, objs):
        assert rel[a, b] == rel[b, a]
    for a, b, c in itertools.product(objs, repeat=3):
        if rel[a, b] and rel[b, c]:
            assert rel[a, c]


def test_evolution_respects_joint_orbits():
    L, K = 2, 2
    for orbit in brute_force_orbits(L, K, "joint"):
        images = {step_T(s) for s in orbit}
        rep = next(iter(images))
        assert images == set(orbit_joint(rep).members)


def test_orbit_examples():
    o = orbit_matter(parse_matter("0,1", K=3))
    assert len(o) == 6 and o.representative == parse_matter("0,1", K=3)
    o = orbit_matter(parse_matter("2,2", K=3))
    assert [str(m) for m in o.members] == ["0,0", "1,1", "2,2"]
    assert len(orbit_field(parse_field("[1,2,0];[0,1,2]"))) == 2 * 6
    assert same_orbit(parse_field("[1,0,2];[0,1,2]"), parse_field("[0,1,2];[0,2,1]"))
    assert not same_orbit(parse_field("[1,0,2];[0,1,2]"), parse_field("[1,2,0];[0,1,2]"))


def test_orbit_errors():
    with pytest.raises(InvalidArgumentError):
        same_orbit(parse_matter("0,0", K=2), parse_field("[0,1]"))
    with pytest.raises(InvalidArgumentError):
        count_orbits(2, 2, "links")
    with pytest.raises(ResourceLimitError) as info:
        count_orbits(3, 3, "joint")
    assert info.value.cardinality == 3**6 * 6**3 * 6**3
