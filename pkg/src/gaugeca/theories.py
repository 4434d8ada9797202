"""Named theories: deterministic maps on full states of a fixed (L, K).

Every theory acts on batches of encoded states through :meth:`Theory.batch`;
calling a theory on a :class:`~gaugeca.ca.FullState` goes through the same
batch path with a single row.  The closed registry is

``R``
    the base rule on matter; the field is carried along untouched
``T``
    the gauged rule (matter transported through the links, field fixed)
``T-pre:<transform>``
    act by a fixed gauge transform, then ``T``
``T-post:<transform>``
    ``T``, then act by a fixed gauge transform
"""

from __future__ import annotations

import numpy as np

from .ca import FullState
from .errors import InvalidArgumentError
from .gauge import GaugeTransform, parse_transform
from .space import Space


class Theory:
    name = "?"

    def batch(self, space: Space, psi: np.ndarray, field: np.ndarray):
        raise NotImplementedError

    def __call__(self, state: FullState) -> FullState:
        space = Space(state.L, state.K)
        psi, field = self.batch(space, *space.encode_state(state))
        return space.decode_state(psi[0], field[0])

    def check_space(self, space: Space) -> None:
        """Raise if the theory cannot act on states of ``space``."""

    def __repr__(self) -> str:
        return f"<Theory {self.name}>"


class LiftedR(Theory):
    name = "R"

    def batch(self, space, psi, field):
        return space.kern.step_r(np.ascontiguousarray(psi)), field.copy()


class GaugedT(Theory):
    name = "T"

    def batch(self, space, psi, field):
        t = space.table
        return space.kern.step_ra(t.act, t.inv, np.ascontiguousarray(psi), np.ascontiguousarray(field)), field.copy()

    def inverse_batch(self, space, psi, field):
        t = space.table
        return space.kern.step_ra_inv(t.act, t.inv, np.ascontiguousarray(psi), np.ascontiguousarray(field)), field.copy()


class _WithFixedTransform(Theory):
    prefix = ""

    def __init__(self, g: GaugeTransform, base: Theory | None = None):
        self.g = g
        self.base = base or GaugedT()
        self.name = f"{self.prefix}:{g}"

    def check_space(self, space):
        if self.g.L != space.L or self.g.K != space.K:
            raise InvalidArgumentError(
                f"{self.name}: transform is (L={self.g.L}, K={self.g.K}), "
                f"states are (L={space.L}, K={space.K})"
            )

    def _g(self, space):
        self.check_space(space)
        return space.encode_perms(self.g)


class PreGaugedT(_WithFixedTransform):
    prefix = "T-pre"

    def batch(self, space, psi, field):
        return self.base.batch(space, *space.act(self._g(space), psi, field))


class PostGaugedT(_WithFixedTransform):
    prefix = "T-post"

    def batch(self, space, psi, field):
        return space.act(self._g(space), *self.base.batch(space, psi, field))


REGISTRY_NAMES = ("R", "T", "T-pre:<transform>", "T-post:<transform>")


def get_theory(name: str) -> Theory:
    """Look up a theory by its registry name."""
    name = name.strip()
    if name == "R":
        return LiftedR()
    if name == "T":
        return GaugedT()
    for cls in (PreGaugedT, PostGaugedT):
        if name.startswith(cls.prefix + ":"):
            literal = name[len(cls.prefix) + 1 :]
            return cls(parse_transform(literal))
    raise InvalidArgumentError(
        f"unknown theory {name!r}; known: {', '.join(REGISTRY_NAMES)}"
    )
