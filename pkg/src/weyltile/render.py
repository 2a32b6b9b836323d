"""SVG output for tilings."""

from __future__ import annotations

import math
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .projection import UNIT_EDGE_SQ, TileType
from .tiling import Patch

UNIT_EDGE = math.sqrt(float(UNIT_EDGE_SQ))


def _default_fills() -> dict[TileType, str]:
    return {
        TileType.THIN_RHOMBUS: "#d62728",
        TileType.THICK_RHOMBUS: "#1f77b4",
        TileType.THIN_HEXAGON: "#ffbf00",
        TileType.THICK_HEXAGON: "#2ca02c",
    }


@dataclass
class RenderStyle:
    """Colors and geometry of the SVG output. ``scale`` is pixels per unit tile edge."""

    fills: dict[TileType, str] = field(default_factory=_default_fills)
    stroke: str = "#000000"
    stroke_width: float = 1.0
    scale: float = 100.0
    margin: float = 10.0
    colored: bool = True

    def fill_of(self, t: TileType) -> str:
        return self.fills.get(t, "#cccccc") if self.colored else "none"


def _num(x: float) -> str:
    s = f"{x:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def patch_to_svg(patch: Patch, style: RenderStyle | None = None, title: str = "tiling") -> str:
    """SVG 1.1 document with one ``<polygon>`` per tile, in patch order.

    Plane y points up; the drawing flips it so the picture is not mirrored.
    """
    style = style or RenderStyle()
    k = style.scale / UNIT_EDGE
    pts = [p for t in patch.tiles for p in t.vertices]
    if pts:
        xmin = min(p[0] for p in pts)
        xmax = max(p[0] for p in pts)
        ymin = min(p[1] for p in pts)
        ymax = max(p[1] for p in pts)
    else:
        xmin = xmax = ymin = ymax = 0.0
    width = (xmax - xmin) * k + 2 * style.margin
    height = (ymax - ymin) * k + 2 * style.margin

    def to_px(x: float, y: float) -> str:
        return f"{_num((x - xmin) * k + style.margin)},{_num((ymax - y) * k + style.margin)}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f"<!-- weyltile {__version__} -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_num(width)}" '
        f'height="{_num(height)}" viewBox="0 0 {_num(width)} {_num(height)}">',
        f"<title>{title}</title>",
        f'<g stroke="{style.stroke}" stroke-width="{_num(style.stroke_width)}" stroke-linejoin="round">',
    ]
    for t in patch.tiles:
        coords = " ".join(to_px(x, y) for x, y in t.vertices)
        lines.append(f'<polygon class="{t.type.value}" fill="{style.fill_of(t.type)}" points="{coords}"/>')
    lines += ["</g>", "</svg>", ""]
    return "\n".join(lines)


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write via a temporary file in the target directory; nothing is left behind on failure."""
    path = Path(path)
    directory = path.parent if str(path.parent) else Path(".")
    if not directory.is_dir():
        raise FileNotFoundError(f"output directory does not exist: {directory}")
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise
