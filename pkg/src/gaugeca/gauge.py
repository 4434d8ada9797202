"""Gauge field, gauge transformations and the gauged dynamics.

Link indexing: ``links[i]`` sits between sites ``i`` and ``i + 1 (mod L)``.
For a cell at site ``x`` the link on its left is ``links[x - 1]`` and the link
on its right is ``links[x]``.  Every formula below relies on this convention,
so an off-by-one here breaks gauge-invariance (the test suite catches it).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .ca import Cell, FullState, MatterConfig
from .errors import InvalidArgumentError
from .permutation import Perm, compose, identity, inverse, parse_perm, random_perm


def _check_ring(perms, K, what):
    perms = tuple(perms)
    if not perms:
        raise InvalidArgumentError(f"a {what} needs at least one entry")
    if K is None:
        K = perms[0].K
    for i, p in enumerate(perms):
        if p.K != K:
            raise InvalidArgumentError(f"{what} entry {i} is in S({p.K}), expected S({K})")
    return perms, K


@dataclass(frozen=True, init=False)
class GaugeField:
    """Permutation-valued link variables on a ring."""

    links: tuple[Perm, ...]
    K: int

    def __init__(self, links, K: int | None = None):
        links, K = _check_ring(links, K, "gauge field")
        object.__setattr__(self, "links", links)
        object.__setattr__(self, "K", K)

    @property
    def L(self) -> int:
        return len(self.links)

    def __getitem__(self, i: int) -> Perm:
        return self.links[i % self.L]

    def __str__(self) -> str:
        return ";".join(str(p) for p in self.links)

    def sort_key(self) -> tuple:
        return tuple(v for p in self.links for v in p.images)

    @classmethod
    def identity(cls, L: int, K: int) -> GaugeField:
        return cls([identity(K)] * L, K)


@dataclass(frozen=True, init=False)
class GaugeTransform:
    """One permutation ``s`` per site; it acts as ``s⊗s`` on the cell there."""

    sites: tuple[Perm, ...]
    K: int

    def __init__(self, sites, K: int | None = None):
        sites, K = _check_ring(sites, K, "gauge transform")
        object.__setattr__(self, "sites", sites)
        object.__setattr__(self, "K", K)

    @property
    def L(self) -> int:
        return len(self.sites)

    def __getitem__(self, x: int) -> Perm:
        return self.sites[x % self.L]

    def __str__(self) -> str:
        return ";".join(str(p) for p in self.sites)

    def sort_key(self) -> tuple:
        return tuple(v for p in self.sites for v in p.images)

    def then(self, other: GaugeTransform) -> GaugeTransform:
        """Pointwise ``other∘self``: act by ``self`` first, then ``other``."""
        _match(self, other)
        return GaugeTransform([compose(b, a) for a, b in zip(self.sites, other.sites)], self.K)

    def inverse(self) -> GaugeTransform:
        return GaugeTransform([inverse(s) for s in self.sites], self.K)

    @classmethod
    def identity(cls, L: int, K: int) -> GaugeTransform:
        return cls([identity(K)] * L, K)


def random_field(L: int, K: int, rng: random.Random) -> GaugeField:
    return GaugeField([random_perm(K, rng) for _ in range(L)], K)


def random_transform(L: int, K: int, rng: random.Random) -> GaugeTransform:
    return GaugeTransform([random_perm(K, rng) for _ in range(L)], K)


def _parse_ring(text, K, L, what):
    perms = [parse_perm(chunk, K) for chunk in text.strip().split(";")]
    if L is not None and len(perms) != L:
        raise InvalidArgumentError(f"expected {L} {what} entries, found {len(perms)}")
    return perms


def parse_field(text: str, K: int | None = None, L: int | None = None) -> GaugeField:
    """Parse ``"[0,1,2];[1,0,2];..."``, one permutation per link."""
    return GaugeField(_parse_ring(text, K, L, "link"), K)


def parse_transform(text: str, K: int | None = None, L: int | None = None) -> GaugeTransform:
    return GaugeTransform(_parse_ring(text, K, L, "site"), K)


def _match(a, b):
    if a.L != b.L or a.K != b.K:
        raise InvalidArgumentError(f"dimension mismatch: (L={a.L}, K={a.K}) vs (L={b.L}, K={b.K})")


def gauge_matter(g: GaugeTransform, psi: MatterConfig) -> MatterConfig:
    """Apply ``s_x`` to both subcells of every site ``x``."""
    _match(g, psi)
    return MatterConfig(
        tuple(Cell(s.images[c.l], s.images[c.r]) for s, c in zip(g.sites, psi.cells)), psi.K
    )


def gauge_field(g: GaugeTransform, a: GaugeField) -> GaugeField:
    """Transform each link ``i`` into ``s_{i+1} ∘ A_i ∘ s_i^{-1}``."""
    _match(g, a)
    return GaugeField(
        [compose(compose(g[i + 1], a[i]), inverse(g[i])) for i in range(a.L)], a.K
    )


def gauge_state(g: GaugeTransform, s: FullState) -> FullState:
    """Act synchronously on matter and field."""
    return FullState(gauge_matter(g, s.psi), gauge_field(g, s.field))


def step_RA(a: GaugeField, psi: MatterConfig) -> MatterConfig:
    """Base rule with transport through the links.

    A left-mover entering site ``x`` from ``x + 1`` crosses ``links[x]`` and is
    acted on by its inverse; a right-mover entering from ``x - 1`` crosses
    ``links[x - 1]`` and is acted on by it directly.
    """
    _match(a, psi)
    cells = []
    for x in range(psi.L):
        left_in = inverse(a[x]).images[psi[x + 1].l]
        right_in = a[x - 1].images[psi[x - 1].r]
        cells.append(Cell(left_in, right_in))
    return MatterConfig(tuple(cells), psi.K)


def step_RA_inverse(a: GaugeField, psi: MatterConfig) -> MatterConfig:
    _match(a, psi)
    cells = []
    for y in range(psi.L):
        l = a[y - 1].images[psi[y - 1].l]
        r = inverse(a[y]).images[psi[y + 1].r]
        cells.append(Cell(l, r))
    return MatterConfig(tuple(cells), psi.K)


def step_T(s: FullState) -> FullState:
    # The field dynamics is the identity: links never change.
    return FullState(step_RA(s.field, s.psi), s.field)


def step_T_inverse(s: FullState) -> FullState:
    return FullState(step_RA_inverse(s.field, s.psi), s.field)


def z_map(g: GaugeTransform) -> GaugeTransform:
    """Output-side transform matching ``g``; the gauged theory uses ``g`` itself."""
    return g
