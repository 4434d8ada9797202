import numpy as np
import pytest

from gaugeca.errors import InvalidArgumentError, ResourceLimitError
from gaugeca.gauge import gauge_field, gauge_matter, gauge_state, step_RA
from gaugeca.invariance import Domain, check_gauge_invariance, check_inhomogeneous
from gaugeca.space import Space
from gaugeca.theories import get_theory


@pytest.mark.parametrize("L,K", [(1, 2), (2, 2), (3, 2), (2, 3)])
def test_T_invariant_exhaustive(L, K):
    report = check_gauge_invariance(get_theory("T"), domain=Domain(L, K))
    assert report.verdict
    assert report.witness is None
    space = Space(L, K)
    assert report.trials == space.n_states * space.n_transforms


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_T_invariant_random(seed):
    report = check_gauge_invariance(get_theory("T"), domain=Domain(6, 4, "random", 2000, seed))
    assert report.verdict and report.trials == 2000


@pytest.mark.parametrize("g,L,K,expected", [
    ("[1,0];[1,0]", 2, 2, True),
    ("[1,0,2];[1,0,2]", 2, 3, False),
])
def test_fixed_gauge_variant_needs_abelian_group(g, L, K, expected):
    # T-pre:g(h·c) = T(gh·c) while h·T-pre:g(c) = T(hg·c); these agree for
    # every h only when g commutes with everything
    report = check_gauge_invariance(get_theory(f"T-pre:{g}"), domain=Domain(L, K))
    assert report.verdict is expected


def witness_is_real(theory, report):
    w = report.witness
    lhs = gauge_state(w.transform, theory(w.state))
    rhs = theory(gauge_state(w.transform, w.state))
    return lhs == w.lhs and rhs == w.rhs and lhs != rhs


def test_R_fails_with_witness():
    R = get_theory("R")
    report = check_gauge_invariance(R, domain=Domain(2, 2))
    assert not report.verdict
    assert witness_is_real(R, report)
    assert str(report.witness.state) == "0,0;0,0/[0,1];[0,1]"
    assert str(report.witness.transform) == "[0,1];[1,0]"


def test_R_witness_reproducible():
    R = get_theory("R")
    a = check_gauge_invariance(R, domain=Domain(2, 2)).to_json(timing=False)
    b = check_gauge_invariance(R, domain=Domain(2, 2)).to_json(timing=False)
    assert a == b
    r1 = check_gauge_invariance(R, domain=Domain(5, 3, "random", 500, seed=9))
    r2 = check_gauge_invariance(R, domain=Domain(5, 3, "random", 500, seed=9))
    assert not r1.verdict
    assert r1.to_dict(False) == r2.to_dict(False)
    assert witness_is_real(R, r1)


def test_inhomogeneous_exhaustive():
    for L, K in [(2, 2), (3, 2), (2, 3)]:
        assert check_inhomogeneous(Domain(L, K)).verdict


def test_inhomogeneous_random():
    assert check_inhomogeneous(Domain(8, 3, "random", 3000, seed=4)).verdict


def swapped_link_action(space, g, field):
    """Mutant: s_i ∘ A_i ∘ s_{i+1}^{-1} (site operators exchanged)."""
    t = space.table
    g = np.broadcast_to(g, field.shape)
    nxt = np.roll(g, -1, axis=1)
    return t.mul[g, t.mul[field, t.inv[nxt]]].astype(np.int32)


def test_table_mutant_matches_object_mutant():
    space = Space(3, 3)
    rng = np.random.default_rng(1)
    g, f = space.random_transforms(20, rng), space.random_fields(20, rng)
    good = space.act_field(g, f)
    # sanity: the correct action through the same table formula
    nxt = np.roll(g, -1, axis=1)
    t = space.table
    assert np.array_equal(good, t.mul[nxt, t.mul[f, t.inv[g]]])


def test_mutated_field_action_is_caught():
    report = check_inhomogeneous(Domain(2, 3), field_action=swapped_link_action)
    assert not report.verdict
    w = report.witness
    space = Space(2, 3)
    g_row = space.encode_perms(w.transform)
    bad_field = space.decode_field(swapped_link_action(space, g_row, space.encode_perms(w.state.field))[0])
    assert w.lhs == gauge_matter(w.transform, step_RA(w.state.field, w.state.psi))
    assert w.rhs == step_RA(bad_field, gauge_matter(w.transform, w.state.psi))
    assert w.lhs != w.rhs
    # and the real action agrees with the lhs
    assert w.lhs == step_RA(gauge_field(w.transform, w.state.field), gauge_matter(w.transform, w.state.psi))


def test_mutated_z_is_caught():
    def z_inverse(space, g):
        return space.table.inv[g].astype(np.int32)

    assert not check_gauge_invariance(get_theory("T"), z=z_inverse, domain=Domain(2, 3)).verdict


def test_resource_limit():
    with pytest.raises(ResourceLimitError) as info:
        check_gauge_invariance(get_theory("T"), domain=Domain(5, 3))
    assert info.value.cardinality == 3**10 * 6**5 * 6**5
    assert check_gauge_invariance(get_theory("T"), domain=Domain(5, 3, "random", 100)).verdict


def test_domain_validation():
    with pytest.raises(InvalidArgumentError):
        Domain(2, 2, mode="sometimes")
    with pytest.raises(InvalidArgumentError):
        Domain(2, 2, "random", trials=0)
    with pytest.raises(InvalidArgumentError):
        get_theory("Q")


def test_report_serialization():
    report = check_gauge_invariance(get_theory("T"), domain=Domain(2, 2))
    d = report.to_dict(timing=False)
    assert d == {"verdict": "pass", "trials": 256, "elapsed_ms": None}
    assert report.to_dict()["elapsed_ms"] >= 0
    assert "verdict: pass" in report.to_text(False)
