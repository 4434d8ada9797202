"""Mechanical checks of gauge symmetry, orbit structure and theory equivalence.

All checks run on a finite :class:`Domain`: either every state and every
gauge transform of a ring (``mode="exhaustive"``) or a seeded random sample
(``mode="random"``).  Exhaustive searches refuse to start when the number of
equalities to evaluate exceeds ``Domain.bound``.

When a check fails, the reported witness is the smallest violating case in
canonical order (state serialization first, then transform), independent of
evaluation order.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field as dc_field
from typing import Callable

import numpy as np

from .ca import FullState, MatterConfig
from .errors import InvalidArgumentError, ResourceLimitError
from .gauge import GaugeField, GaugeTransform, gauge_field, step_T
from .permutation import Perm
from .space import Space
from .theories import Theory

DEFAULT_BOUND = 10**7
KINDS = ("matter", "field", "joint")


@dataclass(frozen=True)
class Domain:
    L: int
    K: int
    mode: str = "exhaustive"
    trials: int = 10_000
    seed: int = 0
    bound: int = DEFAULT_BOUND

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise InvalidArgumentError(f"mode must be 'exhaustive' or 'random', got {self.mode!r}")
        if self.trials < 1:
            raise InvalidArgumentError(f"trials must be >= 1, got {self.trials}")


@dataclass
class Witness:
    state: object
    transform: GaugeTransform | None
    lhs: object
    rhs: object

    def to_dict(self) -> dict:
        return {
            "state": _literal(self.state),
            "transform": None if self.transform is None else str(self.transform),
            "lhs": _literal(self.lhs),
            "rhs": _literal(self.rhs),
        }


def _literal(obj):
    if isinstance(obj, FullState):
        return {"psi": str(obj.psi), "field": str(obj.field)}
    return str(obj)


@dataclass
class CheckReport:
    verdict: bool
    trials: int
    witness: Witness | None = None
    elapsed: float = 0.0
    details: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "verdict": "pass" if self.verdict else "fail",
            "trials": self.trials,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        out["elapsed_ms"] = round(self.elapsed * 1000, 3) if timing else None
        if self.details:
            out["details"] = self.details
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2)

    def to_text(self, timing: bool = True) -> str:
        lines = [f"verdict: {'pass' if self.verdict else 'fail'}", f"trials: {self.trials}"]
        for k, v in self.details.items():
            lines.append(f"{k}: {v}")
        if self.witness is not None:
            lines.append("witness:")
            for k, v in self.witness.to_dict().items():
                if isinstance(v, dict):
                    v = f"{v['psi']} / {v['field']}"
                lines.append(f"  {k}: {v}")
        if timing:
            lines.append(f"elapsed_ms: {self.elapsed * 1000:.3f}")
        return "\n".join(lines) + "\n"


def z_identity(space: Space, g: np.ndarray) -> np.ndarray:
    """Rank-array form of :func:`gaugeca.gauge.z_map`."""
    return g


def _need(cardinality: int, bound: int, what: str) -> None:
    if cardinality > bound:
        raise ResourceLimitError(
            f"{what} needs {cardinality} evaluations, above the bound {bound}", cardinality
        )


def _rows_differ(a: tuple, b: tuple) -> np.ndarray:
    bad = None
    for x, y in zip(a, b):
        if x.shape[1] == 0:
            continue
        d = (x != y).any(axis=1)
        bad = d if bad is None else bad | d
    return bad


def _search(space: Space, domain: Domain, lhs, rhs, decode_out, what: str) -> CheckReport:
    """Compare ``lhs(g, psi, field)`` with ``rhs(g, psi, field)`` over a domain."""
    start = time.perf_counter()
    witness_at = None
    if domain.mode == "exhaustive":
        cardinality = space.n_states * space.n_transforms
        _need(cardinality, domain.bound, what)
        psi, field = space.all_states()
        G = space.all_transforms
        for m in range(len(G)):
            g = G[m : m + 1]
            bad = _rows_differ(lhs(g, psi, field), rhs(g, psi, field))
            if bad.any():
                n = int(np.argmax(bad))
                if witness_at is None or n < witness_at[0]:
                    witness_at = (n, g[0])
        trials = cardinality
    else:
        rng = np.random.default_rng(domain.seed)
        n_trials = domain.trials
        psi = space.random_matter(n_trials, rng)
        field = space.random_fields(n_trials, rng)
        G = space.random_transforms(n_trials, rng)
        bad = _rows_differ(lhs(G, psi, field), rhs(G, psi, field))
        if bad.any():
            idx = np.flatnonzero(bad)
            rows = np.hstack([psi[idx], field[idx], G[idx]])
            n = int(idx[np.lexsort(rows.T[::-1])[0]])
            witness_at = (n, G[n])
        trials = n_trials
    witness = None
    if witness_at is not None:
        n, g_row = witness_at
        g = g_row[None, :]
        p, f = psi[n : n + 1], field[n : n + 1]
        witness = Witness(
            state=space.decode_state(p[0], f[0]),
            transform=space.decode_transform(g_row),
            lhs=decode_out(lhs(g, p, f)),
            rhs=decode_out(rhs(g, p, f)),
        )
    return CheckReport(witness is None, trials, witness, time.perf_counter() - start)


def _decode_full(space):
    return lambda out: space.decode_state(out[0][0], out[1][0])


def check_gauge_invariance(
    theory: Theory, z: Callable = z_identity, domain: Domain | None = None
) -> CheckReport:
    """Does acting by ``g`` then ``theory`` equal ``theory`` then ``z(g)``?

    ``z`` maps a batch of transform rank arrays to transform rank arrays.
    """
    domain = domain or Domain(2, 2)
    space = Space(domain.L, domain.K)
    theory.check_space(space)

    def lhs(g, psi, field):
        return space.act(z(space, g), *theory.batch(space, psi, field))

    def rhs(g, psi, field):
        return theory.batch(space, *space.act(g, psi, field))

    return _search(space, domain, lhs, rhs, _decode_full(space), "gauge-invariance check")


def check_inhomogeneous(
    domain: Domain | None = None, z: Callable = z_identity, field_action: Callable | None = None
) -> CheckReport:
    """Inhomogeneous invariance of the field-driven matter rule.

    Checks ``z(g)·R_A(psi) == R_{g·A}(g·psi)`` on matter.  ``field_action`` may
    replace the gauge action on links (used for mutation testing); it receives
    ``(space, g, field)`` rank arrays.
    """
    domain = domain or Domain(2, 2)
    space = Space(domain.L, domain.K)
    t = space.table
    act_field = field_action or (lambda sp, g, f: sp.act_field(g, f))

    def step_ra(psi, field):
        return space.kern.step_ra(t.act, t.inv, np.ascontiguousarray(psi), np.ascontiguousarray(field))

    def lhs(g, psi, field):
        return (space.act_matter(z(space, g), step_ra(psi, field)),)

    def rhs(g, psi, field):
        return (step_ra(space.act_matter(g, psi), np.ascontiguousarray(act_field(space, g, field))),)

    return _search(
        space, domain, lhs, rhs, lambda out: space.decode_matter(out[0][0]),
        "inhomogeneous invariance check",
    )


# orbits


@dataclass(frozen=True)
class Orbit:
    """An invariant set under the full gauge group, in canonical order."""

    members: tuple
    kind: str

    @property
    def representative(self):
        return self.members[0]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item) -> bool:
        return item in self.members


def _kind_of(obj) -> str:
    if isinstance(obj, FullState):
        return "joint"
    if isinstance(obj, MatterConfig):
        return "matter"
    if isinstance(obj, GaugeField):
        return "field"
    raise InvalidArgumentError(f"no orbit kind for {type(obj).__name__}")


def _orbit(obj, kind: str, bound: int) -> Orbit:
    space = Space(obj.L, obj.K)
    _need(space.n_transforms, bound, "orbit enumeration")
    G = space.all_transforms
    M = len(G)
    if kind == "matter":
        images = space.act_matter(G, np.repeat(space.encode_matter(obj), M, axis=0))
        rows = np.unique(images, axis=0)
        members = tuple(space.decode_matter(r) for r in rows)
    elif kind == "field":
        images = space.act_field(G, np.repeat(space.encode_perms(obj), M, axis=0))
        rows = np.unique(images, axis=0)
        members = tuple(space.decode_field(r) for r in rows)
    else:
        psi, field = space.encode_state(obj)
        p, f = space.act(G, np.repeat(psi, M, axis=0), np.repeat(field, M, axis=0))
        rows = np.unique(np.hstack([p, f]), axis=0)
        w = 2 * obj.L
        members = tuple(space.decode_state(r[:w], r[w:]) for r in rows)
    return Orbit(members, kind)


def orbit_matter(psi: MatterConfig, bound: int = DEFAULT_BOUND) -> Orbit:
    return _orbit(psi, "matter", bound)


def orbit_field(a: GaugeField, bound: int = DEFAULT_BOUND) -> Orbit:
    return _orbit(a, "field", bound)


def orbit_joint(s: FullState, bound: int = DEFAULT_BOUND) -> Orbit:
    """Orbit of the pair under the synchronous action on matter and field."""
    return _orbit(s, "joint", bound)


def same_orbit(a, b, kind: str | None = None, bound: int = DEFAULT_BOUND) -> bool:
    kind = kind or _kind_of(a)
    if kind not in KINDS or _kind_of(a) != kind or _kind_of(b) != kind:
        raise InvalidArgumentError(f"cannot compare {type(a).__name__} and {type(b).__name__} as {kind}")
    if a.L != b.L or a.K != b.K:
        raise InvalidArgumentError("states live on different (L, K)")
    return b in _orbit(a, kind, bound)


@dataclass(frozen=True)
class OrbitCount:
    direct: int
    burnside: int

    @property
    def agree(self) -> bool:
        return self.direct == self.burnside

    @property
    def count(self) -> int:
        return self.direct

    def __str__(self) -> str:
        word = "orbit" if self.direct == 1 else "orbits"
        flag = "" if self.agree else " MISMATCH"
        return f"{self.direct} {word} (direct={self.direct}, burnside={self.burnside}){flag}"


def _kind_arrays(space: Space, kind: str):
    if kind == "matter":
        psi = space.all_matter()
        return psi, space.empty(len(psi))
    if kind == "field":
        field = space.all_fields()
        return space.empty(len(field)), field
    if kind == "joint":
        return space.all_states()
    raise InvalidArgumentError(f"kind must be one of {KINDS}, got {kind!r}")


def kind_cardinality(L: int, K: int, kind: str) -> int:
    space = Space(L, K)
    n = {"matter": space.n_matter, "field": space.n_fields, "joint": space.n_states}[kind]
    return n * space.n_transforms


def count_orbits(L: int, K: int, kind: str = "matter", bound: int = DEFAULT_BOUND) -> OrbitCount:
    """Number of orbits, by direct partition and by Burnside's lemma."""
    if kind not in KINDS:
        raise InvalidArgumentError(f"kind must be one of {KINDS}, got {kind!r}")
    _need(kind_cardinality(L, K, kind), bound, "orbit count")
    space = Space(L, K)
    psi, field = _kind_arrays(space, kind)
    direct = len(np.unique(space.orbit_min_keys(psi, field)))
    total = int(space.fixed_counts(psi, field).sum())
    M = space.n_transforms
    # a non-integral average means the action itself is broken
    burnside = total // M if total % M == 0 else -1
    return OrbitCount(direct, burnside)


# equivalence of theories


def _simulation_tables(t1: Theory, t2: Theory, domain: Domain):
    """Per-configuration truth values of the three simulation statements.

    Returns ``(space, psi, field, exact_any, orbit_all, orbit_any)`` where for
    configuration ``c``:

    * ``exact_any[c]``: some ``g`` gives ``t1(c) == t2(g·c)``
    * ``orbit_all[c]``: every ``g`` admits ``g'`` with ``g'·t1(c) == t2(g·c)``
    * ``orbit_any[c]``: some ``g`` admits such a ``g'``
    """
    space = Space(domain.L, domain.K)
    t1.check_space(space)
    t2.check_space(space)
    M = space.n_transforms
    if domain.mode == "exhaustive":
        _need(space.n_states * M * M, domain.bound, "simulation check")
        psi, field = space.all_states()
    else:
        _need(domain.trials * M * M, domain.bound, "simulation check")
        rng = np.random.default_rng(domain.seed)
        psi = space.random_matter(domain.trials, rng)
        field = space.random_fields(domain.trials, rng)
    p1, f1 = t1.batch(space, psi, field)
    key1 = space.keys(p1, f1)
    canon1 = space.orbit_min_keys(p1, f1)
    N = len(psi)
    exact_any = np.zeros(N, dtype=bool)
    orbit_all = np.ones(N, dtype=bool)
    orbit_any = np.zeros(N, dtype=bool)
    G = space.all_transforms
    for m in range(M):
        p2, f2 = t2.batch(space, *space.act(G[m : m + 1], psi, field))
        exact_any |= space.keys(p2, f2) == key1
        same = space.orbit_min_keys(p2, f2) == canon1
        orbit_all &= same
        orbit_any |= same
    return space, psi, field, exact_any, orbit_all, orbit_any


def _config_witness(space, t1, t2, psi, field, n) -> Witness:
    state = space.decode_state(psi[n], field[n])
    return Witness(state, None, t1(state), t2(state))


def _smallest(space, psi, field, mask):
    idx = np.flatnonzero(mask)
    rows = np.hstack([psi[idx], field[idx]])
    return int(idx[np.lexsort(rows.T[::-1])[0]])


def check_simulates(t1: Theory, t2: Theory, domain: Domain | None = None) -> CheckReport:
    """Is ``t1`` simulated by ``t2``?  Per configuration, search ``(g, g')``."""
    domain = domain or Domain(2, 2)
    start = time.perf_counter()
    space, psi, field, _, _, orbit_any = _simulation_tables(t1, t2, domain)
    witness = None
    if not orbit_any.all():
        witness = _config_witness(space, t1, t2, psi, field, _smallest(space, psi, field, ~orbit_any))
    return CheckReport(
        witness is None, len(psi) * space.n_transforms ** 2, witness, time.perf_counter() - start
    )


def check_equivalent(t1: Theory, t2: Theory, domain: Domain | None = None) -> CheckReport:
    domain = domain or Domain(2, 2)
    start = time.perf_counter()
    forward = check_simulates(t1, t2, domain)
    backward = check_simulates(t2, t1, domain)
    return CheckReport(
        forward.verdict and backward.verdict,
        forward.trials + backward.trials,
        forward.witness or backward.witness,
        time.perf_counter() - start,
        {
            f"{t1.name} simulated by {t2.name}": forward.verdict,
            f"{t2.name} simulated by {t1.name}": backward.verdict,
        },
    )


def check_characterization(t1: Theory, t2: Theory, domain: Domain | None = None) -> CheckReport:
    """Evaluate the three statements characterising "t1 simulated by t2".

    (1) for all c there is g with ``t1(c) == t2(g·c)``;
    (2) for all c and all g there is g' with ``g'·t1(c) == t2(g·c)``;
    (3) for all c there are g, g' with ``g'·t1(c) == t2(g·c)``.

    Passes when the three agree.  Meaningful when ``t1`` is gauge-invariant
    with a reversible output map.
    """
    domain = domain or Domain(2, 2)
    start = time.perf_counter()
    space, psi, field, exact_any, orbit_all, orbit_any = _simulation_tables(t1, t2, domain)
    statements = {
        "statement_1": bool(exact_any.all()),
        "statement_2": bool(orbit_all.all()),
        "statement_3": bool(orbit_any.all()),
    }
    agree = len(set(statements.values())) == 1
    witness = None
    if not agree:
        split = (exact_any != orbit_any) | (orbit_all != orbit_any)
        witness = _config_witness(space, t1, t2, psi, field, _smallest(space, psi, field, split))
    return CheckReport(
        agree, len(psi) * space.n_transforms ** 2, witness, time.perf_counter() - start, statements
    )


# the two-sided example with separate vs joint invariant sets


@dataclass(frozen=True)
class Fig5Report:
    left: tuple[FullState, FullState]
    right: tuple[FullState, FullState]
    site: int
    matter_same_t: bool
    field_same_t: bool
    matter_same_t1: bool
    joint_same_t: bool
    joint_same_t1: bool

    @property
    def joint_consistent(self) -> bool:
        return self.joint_same_t == self.joint_same_t1

    @property
    def verdicts(self) -> tuple[bool, bool, bool, bool]:
        return (self.matter_same_t, self.field_same_t, self.matter_same_t1, self.joint_consistent)

    @property
    def passed(self) -> bool:
        return self.verdicts == (True, True, False, True)

    def to_dict(self) -> dict:
        def pair(states):
            return [{"t": t, "psi": str(s.psi), "field": str(s.field)} for t, s in enumerate(states)]

        return {
            "verdict": "pass" if self.passed else "fail",
            "site": self.site,
            "verdicts": {
                "matter_orbits_equal_t": self.matter_same_t,
                "field_orbits_equal_t": self.field_same_t,
                "matter_orbits_equal_t1": self.matter_same_t1,
                "joint_orbit_relation_preserved": self.joint_consistent,
            },
            "joint_orbits_equal_t": self.joint_same_t,
            "joint_orbits_equal_t1": self.joint_same_t1,
            "left": pair(self.left),
            "right": pair(self.right),
        }

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [f"verdict: {d['verdict']}"]
        lines += [f"{k}: {v}" for k, v in d["verdicts"].items()]
        lines.append(f"joint_orbits_equal_t: {self.joint_same_t}")
        lines.append(f"joint_orbits_equal_t1: {self.joint_same_t1}")
        for side in ("left", "right"):
            for row in d[side]:
                lines.append(f"{side} t+{row['t']}: {row['psi']} / {row['field']}")
        return "\n".join(lines) + "\n"


def fig5_demo() -> Fig5Report:
    """Two states, equal separately up to gauge, that part ways after one step.

    Both sides carry all-zero matter on a ring of 4 sites with 2 colors.  The
    left field is the identity; the right one is its image under the swap of
    colors 0 and 1 at site 1, which toggles the two links adjacent to that
    site.  After one step of the gauged rule the matter at site 2 is (0,0) on
    the left and (0,1) on the right, so the separate matter invariant sets no
    longer coincide, while the joint invariant sets stay related consistently.
    """
    L, K, site = 4, 2, 1
    swap = Perm((1, 0))
    ident = Perm((0, 1))
    g = GaugeTransform([swap if x == site else ident for x in range(L)], K)
    psi = MatterConfig.zeros(L, K)
    left0 = FullState(psi, GaugeField.identity(L, K))
    right0 = FullState(psi, gauge_field(g, left0.field))
    left1, right1 = step_T(left0), step_T(right0)
    return Fig5Report(
        left=(left0, left1),
        right=(right0, right1),
        site=site,
        matter_same_t=same_orbit(left0.psi, right0.psi, "matter"),
        field_same_t=same_orbit(left0.field, right0.field, "field"),
        matter_same_t1=same_orbit(left1.psi, right1.psi, "matter"),
        joint_same_t=same_orbit(left0, right0, "joint"),
        joint_same_t1=same_orbit(left1, right1, "joint"),
    )

