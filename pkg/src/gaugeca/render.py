"""Spacetime diagrams: text, binary PPM and JSON trajectories.

Time runs bottom-up, so the initial configuration is the last text row and
the bottom pixel band of an image.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .ca import FullState
from .errors import InvalidArgumentError

LINK_IDENTITY = "|"
LINK_OTHER = "X"

_BASE_GLYPHS = ".#+3456789abcdefghijklmnopqrstuvwxyz"
_BASE_RGB = (
    (255, 255, 255),
    (0, 0, 0),
    (128, 128, 128),
    (220, 40, 40),
    (40, 160, 60),
    (40, 80, 220),
    (230, 180, 30),
    (150, 60, 180),
    (30, 180, 190),
)


@dataclass(frozen=True)
class Palette:
    glyphs: tuple[str, ...]
    rgb: tuple[tuple[int, int, int], ...]

    @property
    def K(self) -> int:
        return len(self.glyphs)


def default_palette(K: int) -> Palette:
    """White/black/gray for colors 0/1/2, then distinct extras."""
    if K > len(_BASE_GLYPHS):
        raise InvalidArgumentError(f"no default palette for K={K}")
    rgb = tuple(_BASE_RGB[c % len(_BASE_RGB)] for c in range(K))
    return Palette(tuple(_BASE_GLYPHS[:K]), rgb)


def parse_palette(text: str, K: int) -> Palette:
    """Parse ``"0:.:255,255,255;1:#:0,0,0"`` over the default palette for ``K``."""
    base = default_palette(K)
    glyphs, rgb = list(base.glyphs), list(base.rgb)
    for entry in text.strip().split(";"):
        parts = entry.strip().split(":")
        if len(parts) != 3:
            raise InvalidArgumentError(f"palette entry {entry.strip()!r} is not 'color:glyph:r,g,b'")
        color, glyph, triple = parts
        try:
            c = int(color)
            values = tuple(int(v) for v in triple.split(","))
        except ValueError:
            raise InvalidArgumentError(f"palette entry {entry.strip()!r} has a non-integer value") from None
        if not 0 <= c < K:
            raise InvalidArgumentError(f"palette color {c} outside 0..{K - 1}")
        if len(glyph) != 1 or glyph in (LINK_IDENTITY, LINK_OTHER):
            raise InvalidArgumentError(f"palette glyph {glyph!r} must be one character other than | and X")
        if len(values) != 3 or not all(0 <= v <= 255 for v in values):
            raise InvalidArgumentError(f"palette color {c} needs three channels in 0..255")
        glyphs[c], rgb[c] = glyph, values
    return Palette(tuple(glyphs), tuple(rgb))


def render_text(states: list[FullState], palette: Palette | None = None) -> str:
    """Two glyphs per cell (l then r), followed by the glyph of the link on its right."""
    palette = palette or default_palette(states[0].K)
    g = palette.glyphs
    width = len(str(len(states) - 1))
    rows = []
    for t, s in enumerate(states):
        body = "".join(
            g[c.l] + g[c.r] + (LINK_IDENTITY if a.is_identity() else LINK_OTHER)
            for c, a in zip(s.psi.cells, s.field.links)
        )
        rows.append(f"{t:>{width}} {body}")
    return "\n".join(reversed(rows)) + "\n"


def render_ppm(states: list[FullState], palette: Palette | None = None, scale: int = 8) -> bytes:
    """Binary P6 image, one ``scale``×``scale`` block per subcell."""
    if scale < 1:
        raise InvalidArgumentError(f"scale must be >= 1, got {scale}")
    palette = palette or default_palette(states[0].K)
    rgb = [bytes(c) for c in palette.rgb]
    L = states[0].L
    out = bytearray(b"P6\n%d %d\n255\n" % (2 * L * scale, len(states) * scale))
    for s in reversed(states):
        line = b"".join(rgb[v] * scale for v in s.psi.flat())
        out += line * scale
    return bytes(out)


def render_json(states: list[FullState], theory: str | None = None) -> str:
    doc = {
        "K": states[0].K,
        "L": states[0].L,
        "steps": len(states) - 1,
    }
    if theory is not None:
        doc["theory"] = theory
    doc["states"] = [{"t": t, "psi": str(s.psi), "field": str(s.field)} for t, s in enumerate(states)]
    return json.dumps(doc, indent=2) + "\n"
