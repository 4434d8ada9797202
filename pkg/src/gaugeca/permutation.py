"""Finite permutations of the color set {0, ..., K-1}.

Composition follows ``compose(p, q)(i) == p(q(i))``: the right operand is
applied first.  A permutation is stored as its image table.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InvalidArgumentError, ResourceLimitError

#: Largest color count accepted by :func:`enumerate_perms` by default (6! = 720).
ENUMERATION_BOUND = 6


@dataclass(frozen=True)
class Perm:
    """A bijection of ``{0, ..., K-1}``; ``images[i]`` is where ``i`` is sent."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if not images:
            raise InvalidArgumentError("a permutation needs at least one color")
        if sorted(images) != list(range(len(images))):
            raise InvalidArgumentError(f"{_fmt(images)} is not a bijection")
        object.__setattr__(self, "images", images)

    @property
    def K(self) -> int:
        return len(self.images)

    def __call__(self, c: int) -> int:
        return apply(self, c)

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def __str__(self) -> str:
        return _fmt(self.images)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))


def _fmt(images) -> str:
    return "[" + ",".join(str(v) for v in images) + "]"


def identity(k: int) -> Perm:
    if k < 1:
        raise InvalidArgumentError(f"color count must be >= 1, got {k}")
    return Perm(tuple(range(k)))


def compose(p: Perm, q: Perm) -> Perm:
    """Return ``p∘q``, i.e. apply ``q`` first, then ``p``."""
    if p.K != q.K:
        raise InvalidArgumentError(f"cannot compose S({p.K}) with S({q.K})")
    return Perm(tuple(p.images[i] for i in q.images))


def inverse(p: Perm) -> Perm:
    inv = [0] * p.K
    for i, v in enumerate(p.images):
        inv[v] = i
    return Perm(tuple(inv))


def apply(p: Perm, c: int) -> int:
    if not 0 <= c < p.K:
        raise InvalidArgumentError(f"color {c} out of range for K={p.K}")
    return p.images[c]


def enumerate_perms(k: int, bound: int = ENUMERATION_BOUND) -> list[Perm]:
    """All ``k!`` permutations, in lexicographic order of their image tables."""
    if k < 1:
        raise InvalidArgumentError(f"color count must be >= 1, got {k}")
    if k > bound:
        raise ResourceLimitError(
            f"enumerating S({k}) exceeds the bound K <= {bound}", math.factorial(k)
        )
    return [Perm(images) for images in itertools.permutations(range(k))]


def random_perm(k: int, rng: random.Random) -> Perm:
    """Uniform permutation drawn by a Fisher-Yates shuffle over ``rng``."""
    if k < 1:
        raise InvalidArgumentError(f"color count must be >= 1, got {k}")
    images = list(range(k))
    for i in range(k - 1, 0, -1):
        j = rng.randrange(i + 1)
        images[i], images[j] = images[j], images[i]
    return Perm(tuple(images))


_PERM_RE = re.compile(r"^\[\s*\d+(\s*,\s*\d+)*\s*\]$")


def parse_perm(text: str, k: int | None = None) -> Perm:
    """Parse the bracketed literal form, e.g. ``[1,0,2]``."""
    text = text.strip()
    if not _PERM_RE.match(text):
        raise InvalidArgumentError(f"malformed permutation literal {text!r}")
    p = Perm(tuple(int(v) for v in text[1:-1].split(",")))
    if k is not None and p.K != k:
        raise InvalidArgumentError(f"{text} has {p.K} colors, expected {k}")
    return p


class PermTable:
    """Lookup tables for S(K), indexed by lexicographic rank.

    ``mul[a, b]`` is the rank of ``perms[a]∘perms[b]``, ``inv[a]`` the rank of
    the inverse and ``act[a, c]`` the image of color ``c``.  The vectorised
    kernels work entirely on these ranks.
    """

    def __init__(self, k: int, bound: int = ENUMERATION_BOUND):
        self.K = k
        self.perms = enumerate_perms(k, bound)
        self.P = len(self.perms)
        self.index = {p.images: i for i, p in enumerate(self.perms)}

    def rank(self, p: Perm) -> int:
        if p.K != self.K:
            raise InvalidArgumentError(f"{p} is not in S({self.K})")
        return self.index[p.images]

    @cached_property
    def act(self) -> np.ndarray:
        return np.array([p.images for p in self.perms], dtype=np.int32).reshape(self.P, self.K)

    @cached_property
    def inv(self) -> np.ndarray:
        return np.argmax(self.mul == 0, axis=1).astype(np.int32)

    @cached_property
    def mul(self) -> np.ndarray:
        act = self.act.astype(np.int64)
        # comp[a, b, i] = act[a, act[b, i]]
        comp = act[:, act]
        weights = self.K ** np.arange(self.K - 1, -1, -1, dtype=np.int64)
        codes = act @ weights
        lookup = np.zeros(self.K**self.K, dtype=np.int32)
        lookup[codes] = np.arange(self.P, dtype=np.int32)
        return lookup[comp @ weights]

    @property
    def identity_rank(self) -> int:
        return 0
