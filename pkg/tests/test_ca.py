import itertools
import random
from collections import Counter

import pytest
from hypothesis import given

from gaugeca.ca import Cell, MatterConfig, parse_matter, step_R, step_R_inverse
from gaugeca.errors import InvalidArgumentError

from conftest import configs


def oracle_step_R(cells):
    """Move subcell values along their direction of travel on a ring."""
    L = len(cells)
    out = {}
    for x, (l, r) in enumerate(cells):
        out.setdefault((x - 1) % L, {})["l"] = l
        out.setdefault((x + 1) % L, {})["r"] = r
    return [(out[x]["l"], out[x]["r"]) for x in range(L)]


def all_configs(L, K):
    for flat in itertools.product(range(K), repeat=2 * L):
        yield MatterConfig.from_flat(flat, K)


def cells(psi):
    return [(c.l, c.r) for c in psi.cells]


def test_zero_is_fixed():
    z = MatterConfig.zeros(5, 3)
    assert step_R(z) == z
    assert step_R_inverse(z) == z


def test_hand_traced_example():
    psi = parse_matter("1,0;0,0", K=2)
    assert cells(step_R(psi)) == [(0, 0), (1, 0)]
    assert cells(step_R(psi)) == oracle_step_R(cells(psi))


@pytest.mark.parametrize("L,K", [(1, 2), (2, 2), (3, 2), (2, 3)])
def test_step_R_matches_oracle_exhaustive(L, K):
    for psi in all_configs(L, K):
        assert cells(step_R(psi)) == oracle_step_R(cells(psi))


def test_left_movers_complete_a_lap():
    L, K = 3, 2
    for ls in itertools.product(range(K), repeat=L):
        psi = MatterConfig(tuple(Cell(l, 0) for l in ls), K)
        out = psi
        for _ in range(L):
            out = step_R(out)
        assert out == psi


@pytest.mark.parametrize("L,K,n", [(2, 2, 16), (3, 2, 64)])
def test_bijection_exhaustive(L, K, n):
    images = {step_R(p) for p in all_configs(L, K)}
    assert len(images) == n
    for p in all_configs(L, K):
        assert step_R_inverse(step_R(p)) == p


def test_round_trip_random():
    rng = random.Random(5)
    for _ in range(1000):
        p = MatterConfig.from_flat([rng.randrange(3) for _ in range(16)], 3)
        assert step_R(step_R_inverse(p)) == p
        assert step_R_inverse(step_R(p)) == p


@given(configs())
def test_subcell_multiset_conserved(case):
    state, _ = case
    psi = state.psi
    assert Counter(psi.flat()) == Counter(step_R(psi).flat())


@pytest.mark.parametrize("L", [3, 4, 5])
def test_locality(L):
    K = 3
    rng = random.Random(L)
    for _ in range(50):
        base = [Cell(rng.randrange(K), rng.randrange(K)) for _ in range(L)]
        x = rng.randrange(L)
        changed = list(base)
        changed[x] = Cell((base[x].l + 1) % K, (base[x].r + 1) % K)
        a = step_R(MatterConfig(tuple(base), K))
        b = step_R(MatterConfig(tuple(changed), K))
        diff = {y for y in range(L) if a.cells[y] != b.cells[y]}
        assert diff == {(x - 1) % L, (x + 1) % L}


def test_literals_and_validation():
    psi = parse_matter("1,0;0,0;2,1", K=3)
    assert str(psi) == "1,0;0,0;2,1"
    assert psi.L == 3
    with pytest.raises(InvalidArgumentError, match="expected 4 cells, found 3"):
        parse_matter("1,0;0,0;2,1", K=3, L=4)
    with pytest.raises(InvalidArgumentError):
        parse_matter("1,0;3,0", K=3)
    with pytest.raises(InvalidArgumentError):
        parse_matter("1;0", K=3)
    with pytest.raises(InvalidArgumentError):
        MatterConfig((), 2)
