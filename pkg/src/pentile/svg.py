"""Deterministic SVG rendering.

Output depends only on the patch and the options: coordinates come from
double-precision evaluation of the exact vertices at a fixed decimal
precision, tiles are emitted in canonical order, and the document carries no
timestamps or environment-dependent content, so identical inputs give
byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass

from .patch import Patch
from .units import unit_decomposition

_UNIT_CLASS_STYLE = """\
.octa-lo { fill: #e8c47c; } .octa-hi { fill: #d29a3a; }
.hexa-lo { fill: #9fc2e8; } .hexa-hi { fill: #5b91c9; }
.half { fill: #cccccc; }
.direct { fill: #e8c47c; } .mirrored { fill: #9fc2e8; }
.plain { fill: #e0dcd2; }
path { stroke: #3a352c; stroke-linejoin: round; }
"""


@dataclass(frozen=True)
class RenderOptions:
    color_by: str = "unit"  # unit | chirality | none
    stroke_width: float = 0.03
    precision: int = 6

    def __post_init__(self):
        if self.color_by not in ("unit", "chirality", "none"):
            raise ValueError(f"unknown color_by {self.color_by!r}")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")


def _fmt(x: float, precision: int) -> str:
    s = f"{x:.{precision}f}"
    # normalize negative zero so output is placement-order independent
    if s.startswith("-") and float(s) == 0.0:
        s = s[1:]
    return s


def render_svg(patch: Patch, opts: RenderOptions = RenderOptions()) -> str:
    order = sorted(range(len(patch.tiles)), key=lambda i: patch.tiles[i].key())
    prec = opts.precision
    classes = [""] * len(patch.tiles)
    if opts.color_by == "unit" and len(patch.tiles):
        units, incomplete = unit_decomposition(patch)
        ordered = sorted(
            units, key=lambda u: min(patch.tiles[u[1][0]].key(), patch.tiles[u[1][1]].key())
        )
        shade = {}
        for ui, (kind, (i, j)) in enumerate(ordered):
            cls = f"{kind}-{'lo' if ui % 2 == 0 else 'hi'}"
            shade[i] = cls
            shade[j] = cls
        for i in range(len(patch.tiles)):
            classes[i] = shade.get(i, "half")
    elif opts.color_by == "chirality":
        for i, t in enumerate(patch.tiles):
            classes[i] = "mirrored" if t.mirror else "direct"
    else:
        for i in range(len(patch.tiles)):
            classes[i] = "plain"

    pts: list[tuple[float, float]] = []
    paths = []
    for i in order:
        vs = patch.vertsf[i]
        coords = []
        for z in vs:
            x, y = z.real, -z.imag  # SVG y grows downward
            pts.append((x, y))
            coords.append((x, y))
        d = "M " + " L ".join(
            f"{_fmt(x, prec)} {_fmt(y, prec)}" for (x, y) in coords
        ) + " Z"
        paths.append(f'<path class="{classes[i]}" d="{d}"/>')

    if pts:
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        pad = 0.2
        x0, y0 = min(xs) - pad, min(ys) - pad
        w, h = max(xs) - x0 + pad, max(ys) - y0 + pad
    else:
        x0 = y0 = 0.0
        w = h = 1.0
    viewbox = " ".join(_fmt(v, prec) for v in (x0, y0, w, h))
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{viewbox}">',
        f"<style>path {{ stroke-width: {_fmt(opts.stroke_width, prec)}; }}",
        _UNIT_CLASS_STYLE.rstrip(),
        "</style>",
        *paths,
        "</svg>",
        "",
    ]
    return "\n".join(lines)
