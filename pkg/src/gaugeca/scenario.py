"""Line-oriented scenario files and trajectory simulation.

A scenario is UTF-8 text with one ``key = value`` pair per line; lines whose
first non-blank character is ``#`` are comments.  Keys:

``K``, ``L``, ``steps``
    color count, ring length, number of time steps
``psi0``
    matter literal ``l,r;l,r;...``, or ``zero`` / ``random``
``field0``
    gauge-field literal ``[..];[..];...``, or ``identity`` / ``random``
``theory``
    registry name (``R``, ``T``, ``T-pre:<transform>``, ``T-post:<transform>``)
``gauge`` (optional)
    transform literal applied to the initial state before the run
``seed`` (optional)
    seed for ``random`` literals, default 0
``palette`` (optional)
    ``color:glyph:r,g,b`` entries separated by ``;``
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .ca import FullState, MatterConfig, parse_matter
from .errors import GaugeCAError, ScenarioError
from .gauge import (
    GaugeField,
    GaugeTransform,
    gauge_state,
    parse_field,
    parse_transform,
    random_field,
)
from .render import Palette, parse_palette
from .space import Space
from .theories import get_theory

KEYS = ("K", "L", "steps", "psi0", "field0", "gauge", "theory", "seed", "palette")
REQUIRED = ("K", "L", "steps", "psi0", "field0", "theory")
BUNDLED = ("fig1", "fig4")


@dataclass(frozen=True)
class Scenario:
    K: int
    L: int
    steps: int
    psi0: MatterConfig
    field0: GaugeField
    theory: str
    gauge: GaugeTransform | None = None
    seed: int | None = None
    palette: Palette | None = None

    def initial_state(self) -> FullState:
        state = FullState(self.psi0, self.field0)
        if self.gauge is not None:
            state = gauge_state(self.gauge, state)
        return state


def parse_scenario(text: str) -> Scenario:
    raw: dict[str, tuple[int, str]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ScenarioError(f"expected 'key = value', got {stripped!r}", lineno)
        key, value = (part.strip() for part in stripped.split("=", 1))
        if key not in KEYS:
            raise ScenarioError(f"unknown key {key!r}", lineno, key)
        if key in raw:
            raise ScenarioError(f"{key}: duplicate key (first set on line {raw[key][0]})", lineno, key)
        raw[key] = (lineno, value)
    for key in REQUIRED:
        if key not in raw:
            raise ScenarioError(f"missing required key {key!r}", None, key)

    def value(key, parse):
        lineno, text = raw[key]
        try:
            return parse(text)
        except GaugeCAError as exc:
            raise ScenarioError(f"{key}: {exc}", lineno, key) from None
        except ValueError:
            raise ScenarioError(f"{key}: cannot parse {text!r}", lineno, key) from None

    def positive(minimum):
        def parse(text):
            n = int(text)
            if n < minimum:
                raise ScenarioError(f"must be >= {minimum}, got {n}")
            return n
        return parse

    K = value("K", positive(1))
    L = value("L", positive(1))
    steps = value("steps", positive(0))
    seed = value("seed", int) if "seed" in raw else None
    rng = random.Random(0 if seed is None else seed)

    def matter(text):
        if text == "zero":
            return MatterConfig.zeros(L, K)
        if text == "random":
            return MatterConfig.from_flat([rng.randrange(K) for _ in range(2 * L)], K)
        return parse_matter(text, K, L)

    def field(text):
        if text == "identity":
            return GaugeField.identity(L, K)
        if text == "random":
            return random_field(L, K, rng)
        return parse_field(text, K, L)

    psi0 = value("psi0", matter)
    field0 = value("field0", field)
    gauge = value("gauge", lambda t: parse_transform(t, K, L)) if "gauge" in raw else None

    def theory(name):
        th = get_theory(name)
        th.check_space(Space(L, K))
        return name

    theory_name = value("theory", theory)
    palette = value("palette", lambda t: parse_palette(t, K)) if "palette" in raw else None
    return Scenario(K, L, steps, psi0, field0, theory_name, gauge, seed, palette)


def load_scenario(path_or_name: str) -> Scenario:
    """Read a scenario file, or one of the bundled scenarios by name."""
    path = Path(path_or_name)
    if not path.exists() and path_or_name in BUNDLED:
        text = resources.files("gaugeca").joinpath(f"scenarios/{path_or_name}.scn").read_text("utf-8")
    else:
        text = path.read_text("utf-8")
    return parse_scenario(text)


def simulate(scenario: Scenario) -> list[FullState]:
    """Initial state followed by ``steps`` applications of the theory."""
    state = scenario.initial_state()
    space = Space(scenario.L, scenario.K)
    theory = get_theory(scenario.theory)
    psi, field = space.encode_state(state)
    states = [state]
    for _ in range(scenario.steps):
        psi, field = theory.batch(space, psi, field)
        states.append(space.decode_state(psi[0], field[0]))
    return states
