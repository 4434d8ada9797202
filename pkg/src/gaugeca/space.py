"""Array encoding of states and transforms for a fixed ring size and color count.

A :class:`Space` converts between the immutable value objects and the
``int32`` rank arrays consumed by the batch kernels, enumerates whole state
spaces in lexicographic order, and draws seeded random batches.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from . import kernels
from .ca import FullState, MatterConfig
from .errors import InvalidArgumentError, ResourceLimitError
from .gauge import GaugeField, GaugeTransform
from .permutation import ENUMERATION_BOUND, PermTable

_KEY_LIMIT = 2**62
_tables: dict[int, PermTable] = {}


def perm_table(K: int) -> PermTable:
    if K not in _tables:
        _tables[K] = PermTable(K)
    return _tables[K]


def _product(radix: int, width: int) -> np.ndarray:
    """All ``radix**width`` digit rows, lexicographic."""
    if width == 0:
        return np.zeros((1, 0), dtype=np.int32)
    grids = np.indices((radix,) * width, dtype=np.int32)
    return np.ascontiguousarray(grids.reshape(width, -1).T)


class Space:
    """States and transforms on a ring of ``L`` sites with ``K`` colors."""

    def __init__(self, L: int, K: int, backend=None):
        if L < 1:
            raise InvalidArgumentError(f"ring length must be >= 1, got {L}")
        if K < 1:
            raise InvalidArgumentError(f"color count must be >= 1, got {K}")
        if K > ENUMERATION_BOUND:
            raise ResourceLimitError(
                f"S({K}) exceeds the permutation table bound K <= {ENUMERATION_BOUND}"
            )
        self.L = L
        self.K = K
        self.table = perm_table(K)
        self.P = self.table.P
        self.kern = backend or kernels.backend

    # sizes
    @property
    def n_matter(self) -> int:
        return self.K ** (2 * self.L)

    @property
    def n_fields(self) -> int:
        return self.P**self.L

    @property
    def n_transforms(self) -> int:
        return self.P**self.L

    @property
    def n_states(self) -> int:
        return self.n_matter * self.n_fields

    # enumeration
    def all_matter(self) -> np.ndarray:
        return _product(self.K, 2 * self.L)

    def all_fields(self) -> np.ndarray:
        return _product(self.P, self.L)

    @cached_property
    def all_transforms(self) -> np.ndarray:
        return _product(self.P, self.L)

    def all_states(self) -> tuple[np.ndarray, np.ndarray]:
        """Every (matter, field) pair, matter-major, so rows are lexicographic."""
        psi, field = self.all_matter(), self.all_fields()
        return (
            np.ascontiguousarray(np.repeat(psi, len(field), axis=0)),
            np.ascontiguousarray(np.tile(field, (len(psi), 1))),
        )

    # random batches
    def random_matter(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.K, size=(n, 2 * self.L), dtype=np.int32)

    def random_fields(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.P, size=(n, self.L), dtype=np.int32)

    random_transforms = random_fields

    # codec
    def _check(self, obj):
        if obj.L != self.L or obj.K != self.K:
            raise InvalidArgumentError(
                f"object is (L={obj.L}, K={obj.K}) but the space is (L={self.L}, K={self.K})"
            )

    def encode_matter(self, psi: MatterConfig) -> np.ndarray:
        self._check(psi)
        return np.array([psi.flat()], dtype=np.int32)

    def encode_perms(self, ring) -> np.ndarray:
        self._check(ring)
        perms = ring.links if isinstance(ring, GaugeField) else ring.sites
        return np.array([[self.table.rank(p) for p in perms]], dtype=np.int32)

    def encode_state(self, s: FullState) -> tuple[np.ndarray, np.ndarray]:
        return self.encode_matter(s.psi), self.encode_perms(s.field)

    def decode_matter(self, row) -> MatterConfig:
        return MatterConfig.from_flat(row, self.K)

    def decode_field(self, row) -> GaugeField:
        return GaugeField([self.table.perms[int(i)] for i in row], self.K)

    def decode_transform(self, row) -> GaugeTransform:
        return GaugeTransform([self.table.perms[int(i)] for i in row], self.K)

    def decode_state(self, psi_row, field_row) -> FullState:
        return FullState(self.decode_matter(psi_row), self.decode_field(field_row))

    # batch operations
    def act(self, g, psi, field):
        """Synchronous gauge action on a batch of full states."""
        return self.act_matter(g, psi), self.act_field(g, field)

    def act_matter(self, g, psi):
        return self.kern.gauge_matter(self.table.act, _c(g), _c(psi))

    def act_field(self, g, field):
        return self.kern.gauge_field(self.table.mul, self.table.inv, _c(g), _c(field))

    def compose_transforms(self, g2, g1):
        """Pointwise ``g2∘g1`` (act by ``g1`` first)."""
        return self.table.mul[g2, g1]

    def check_keyable(self, matter_width: int, field_width: int) -> None:
        if self.K**matter_width * self.P**field_width >= _KEY_LIMIT:
            raise ResourceLimitError("state keys would overflow 64-bit integers")

    def keys(self, psi, field) -> np.ndarray:
        self.check_keyable(psi.shape[1], field.shape[1])
        return self.kern.state_keys(_c(psi), _c(field), self.K, self.P)

    def orbit_min_keys(self, psi, field) -> np.ndarray:
        self.check_keyable(psi.shape[1], field.shape[1])
        t = self.table
        return self.kern.orbit_min_keys(
            t.act, t.mul, t.inv, self.all_transforms, _c(psi), _c(field), self.K, self.P
        )

    def fixed_counts(self, psi, field) -> np.ndarray:
        t = self.table
        return self.kern.fixed_counts(t.act, t.mul, t.inv, self.all_transforms, _c(psi), _c(field))

    def empty(self, n: int) -> np.ndarray:
        return np.zeros((n, 0), dtype=np.int32)


def _c(a) -> np.ndarray:
    return np.ascontiguousarray(a, dtype=np.int32)

