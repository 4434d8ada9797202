"""Periodic two-subcell configurations and the un-gauged transport rule.

Each site holds a left-moving subcell ``l`` and a right-moving subcell ``r``.
One step of the base rule moves every ``l`` one site to the left and every
``r`` one site to the right, on a ring of ``L`` sites.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import InvalidArgumentError

if TYPE_CHECKING:
    from .gauge import GaugeField


@dataclass(frozen=True)
class Cell:
    l: int
    r: int

    def __str__(self) -> str:
        return f"{self.l},{self.r}"


@dataclass(frozen=True)
class MatterConfig:
    """A ring of cells; site ``x + 1`` of the last site wraps to site 0."""

    cells: tuple[Cell, ...]
    K: int

    def __post_init__(self):
        cells = tuple(c if isinstance(c, Cell) else Cell(*c) for c in self.cells)
        if not cells:
            raise InvalidArgumentError("a configuration needs at least one site")
        if self.K < 1:
            raise InvalidArgumentError(f"color count must be >= 1, got {self.K}")
        for x, c in enumerate(cells):
            if not (0 <= c.l < self.K and 0 <= c.r < self.K):
                raise InvalidArgumentError(f"cell {x} = ({c}) has a color outside 0..{self.K - 1}")
        object.__setattr__(self, "cells", cells)

    @property
    def L(self) -> int:
        return len(self.cells)

    def __getitem__(self, x: int) -> Cell:
        return self.cells[x % self.L]

    def __str__(self) -> str:
        return ";".join(str(c) for c in self.cells)

    def flat(self) -> tuple[int, ...]:
        """Subcell values in serialization order ``l0, r0, l1, r1, ...``."""
        return tuple(v for c in self.cells for v in (c.l, c.r))

    sort_key = flat

    @classmethod
    def zeros(cls, L: int, K: int) -> MatterConfig:
        return cls(tuple(Cell(0, 0) for _ in range(L)), K)

    @classmethod
    def from_flat(cls, values, K: int) -> MatterConfig:
        values = [int(v) for v in values]
        return cls(tuple(Cell(values[i], values[i + 1]) for i in range(0, len(values), 2)), K)


@dataclass(frozen=True)
class FullState:
    """Matter together with the gauge field on the links between its sites."""

    psi: MatterConfig
    field: GaugeField

    def __post_init__(self):
        if self.psi.L != self.field.L or self.psi.K != self.field.K:
            raise InvalidArgumentError(
                f"matter is (L={self.psi.L}, K={self.psi.K}) but field is "
                f"(L={self.field.L}, K={self.field.K})"
            )

    @property
    def L(self) -> int:
        return self.psi.L

    @property
    def K(self) -> int:
        return self.psi.K

    def sort_key(self) -> tuple:
        return self.psi.flat() + tuple(v for p in self.field.links for v in p.images)

    def __str__(self) -> str:
        return f"{self.psi}/{self.field}"


def parse_matter(text: str, K: int, L: int | None = None) -> MatterConfig:
    """Parse ``"l,r;l,r;..."`` into a configuration over ``K`` colors."""
    cells = []
    for chunk in text.strip().split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise InvalidArgumentError(f"malformed cell {chunk.strip()!r}, expected 'l,r'")
        try:
            cells.append(Cell(int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidArgumentError(f"malformed cell {chunk.strip()!r}, expected 'l,r'") from None
    if L is not None and len(cells) != L:
        raise InvalidArgumentError(f"expected {L} cells, found {len(cells)}")
    return MatterConfig(tuple(cells), K)


def step_R(psi: MatterConfig) -> MatterConfig:
    """One step of the base rule: ``l`` from site x+1, ``r`` from site x-1."""
    return MatterConfig(
        tuple(Cell(psi[x + 1].l, psi[x - 1].r) for x in range(psi.L)), psi.K
    )


def step_R_inverse(psi: MatterConfig) -> MatterConfig:
    return MatterConfig(
        tuple(Cell(psi[x - 1].l, psi[x + 1].r) for x in range(psi.L)), psi.K
    )
