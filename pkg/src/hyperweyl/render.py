"""Draw level-2 permutations on the n×n grid, as SVG or plain text.

Row 1 is at the top.  Transpositions become undirected segments; longer
cycles become closed polylines with one arrowhead on their first edge.
"""
from __future__ import annotations

import math
import string
from dataclasses import dataclass

from .errors import InvalidParams, UnsupportedLevel
from .hyper import HyperPerm


@dataclass(frozen=True)
class RenderConfig:
    cell: int = 32
    margin: int = 16
    dot: float = 2.5
    stroke: str = "#1f3b73"
    grid: str = "#b0b0b0"
    arrow: float = 7.0
    max_n: int = 12


DEFAULT = RenderConfig()


def _grid_cycles(u: HyperPerm, cfg: RenderConfig) -> list[list[tuple[int, int]]]:
    if u.t != 2:
        raise UnsupportedLevel("grid drawings need level 2")
    if u.n > cfg.max_n:
        raise InvalidParams(f"n={u.n} exceeds the drawing limit {cfg.max_n}")
    return [list(c) for c in u.cycles()]


def _center(p: tuple[int, int], cfg: RenderConfig) -> tuple[float, float]:
    r, c = p
    return (cfg.margin + (c - 0.5) * cfg.cell, cfg.margin + (r - 0.5) * cfg.cell)


def _fmt(x: float) -> str:
    return f"{x:.1f}".rstrip("0").rstrip(".")


def render_svg(u: HyperPerm, cfg: RenderConfig = DEFAULT) -> str:
    cycs = _grid_cycles(u, cfg)
    n = u.n
    size = 2 * cfg.margin + n * cfg.cell
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">']
    out.append(f'<g id="grid" stroke="{cfg.grid}" stroke-width="1" fill="none">')
    for q in range(n + 1):
        z = cfg.margin + q * cfg.cell
        lo, hi = cfg.margin, cfg.margin + n * cfg.cell
        out.append(f'<line x1="{z}" y1="{lo}" x2="{z}" y2="{hi}"/>')
        out.append(f'<line x1="{lo}" y1="{z}" x2="{hi}" y2="{z}"/>')
    out.append("</g>")
    out.append(f'<g id="points" fill="{cfg.grid}">')
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            x, y = _center((r, c), cfg)
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{cfg.dot}"/>')
    out.append("</g>")
    out.append(f'<g id="cycles" stroke="{cfg.stroke}" stroke-width="2" fill="none">')
    for q, cyc in enumerate(cycs):
        pts = [_center(p, cfg) for p in cyc]
        if len(cyc) == 2:
            (x1, y1), (x2, y2) = pts
            out.append(f'<line id="c{q}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')
            continue
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts + pts[:1])
        out.append(f'<polyline id="c{q}" points="{coords}"/>')
        out.append(_arrowhead(pts[0], pts[1], cfg, f"a{q}"))
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _arrowhead(p, q, cfg: RenderConfig, ident: str) -> str:
    """Filled triangle at the midpoint of p→q pointing towards q."""
    (x1, y1), (x2, y2) = p, q
    mx, my = (x1 + x2) / 2, (y1 + y2) / 2
    ang = math.atan2(y2 - y1, x2 - x1)
    a = cfg.arrow
    tip = (mx + a / 2 * math.cos(ang), my + a / 2 * math.sin(ang))
    back = [(mx - a / 2 * math.cos(ang) + s * a / 2 * math.sin(ang),
             my - a / 2 * math.sin(ang) - s * a / 2 * math.cos(ang)) for s in (1, -1)]
    coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in [tip] + back)
    return f'<polygon id="{ident}" points="{coords}" fill="{cfg.stroke}"/>'


def render_ascii(u: HyperPerm, cfg: RenderConfig = DEFAULT) -> str:
    """Cells are tagged by cycle letter ('.' for fixed points), followed by a legend."""
    cycs = _grid_cycles(u, cfg)
    n = u.n
    tags = string.ascii_lowercase + string.ascii_uppercase
    label = {}
    for q, cyc in enumerate(cycs):
        for p in cyc:
            label[p] = tags[q % len(tags)]
    width = len(str(n))
    lines = [" " * (width + 1) + " ".join(str(c).rjust(width) for c in range(1, n + 1))]
    for r in range(1, n + 1):
        row = " ".join(label.get((r, c), ".").rjust(width) for c in range(1, n + 1))
        lines.append(f"{str(r).rjust(width)} {row}")
    for q, cyc in enumerate(cycs):
        pts = [f"({r},{c})" for r, c in cyc]
        body = " - ".join(pts) if len(cyc) == 2 else " -> ".join(pts + pts[:1])
        lines.append(f"{tags[q % len(tags)]}: {body}")
    return "\n".join(lines) + "\n"


def render_grid(u: HyperPerm, fmt: str = "svg", cfg: RenderConfig = DEFAULT) -> str:
    if fmt == "svg":
        return render_svg(u, cfg)
    if fmt == "ascii":
        return render_ascii(u, cfg)
    raise InvalidParams(f"unknown format {fmt!r}")
