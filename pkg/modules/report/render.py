"""Drawings of rank 2 cycles: rays from the origin with weight labels.

All coordinates are computed in hundredths of a pixel with integer square
roots, so the SVG text is identical on every platform.
"""

from __future__ import annotations

from math import isqrt
from typing import Any, Dict, List, Optional, Sequence, Tuple
from xml.sax.saxutils import escape

from ..errors import RankNotTwo
from ..tropcycle import Cone, TropicalCycle

try:
    from PIL import Image, ImageDraw, ImageFont
except ImportError:
    Image = None  # PNG output unavailable without Pillow

DEFAULTS = {"size": 480, "ray_length": 180, "font_size": 14}


def _scaled(direction: Sequence[int], length: int) -> Tuple[int, int]:
    """Offset of length ``length`` along ``direction``, in hundredths, y pointing down."""
    norm2 = direction[0] ** 2 + direction[1] ** 2
    out = []
    for c in direction:
        mag = isqrt(c * c * length * length * 10000 // norm2)
        out.append(mag if c >= 0 else -mag)
    return out[0], -out[1]


def _fmt(hundredths: int) -> str:
    sign = "-" if hundredths < 0 else ""
    whole, frac = divmod(abs(hundredths), 100)
    return f"{sign}{whole}.{frac:02d}"


def _segments(cycle: TropicalCycle, cfg: Dict[str, Any]):
    """(endpoint, label position, text) for every weighted ray or line."""
    c100 = (cfg["size"] // 2) * 100
    length = cfg["ray_length"]
    items = []
    notes = []
    origin_text: Optional[str] = None
    for cone in sorted(cycle.weighted_cones(), key=Cone.sort_key):
        text = str(cycle.weight(cone))
        if cone.dim == 0:
            origin_text = text
            continue
        if cone.dim == 2:
            notes.append(f"codimension 0 weight: {text}")
            continue
        directions = list(cone.rays) or [cone.lineality[0], tuple(-x for x in cone.lineality[0])]
        for k, d in enumerate(directions):
            ex, ey = _scaled(d, length)
            lx, ly = _scaled(d, length + 16)
            label = text if k == 0 else ""
            items.append(((c100 + ex, c100 + ey), (c100 + lx, c100 + ly), label))
    return items, origin_text, notes


def _config(config: Optional[Dict[str, Any]]) -> Dict[str, Any]:
    cfg = dict(DEFAULTS)
    cfg.update({k: v for k, v in (config or {}).items() if k in DEFAULTS})
    return cfg


def render_svg(cycle: TropicalCycle, path: Optional[str] = None, config: Optional[Dict[str, Any]] = None) -> str:
    if cycle.rank != 2:
        raise RankNotTwo(f"only rank 2 cycles can be drawn, got rank {cycle.rank}")
    cfg = _config(config)
    size, font = cfg["size"], cfg["font_size"]
    c = _fmt((size // 2) * 100)
    items, origin_text, notes = _segments(cycle, cfg)
    lines: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
        f'<g font-family="serif" font-size="{font}" fill="black">',
    ]
    for (ex, ey), (lx, ly), label in items:
        lines.append(f'<line x1="{c}" y1="{c}" x2="{_fmt(ex)}" y2="{_fmt(ey)}" stroke="black" stroke-width="2"/>')
        if label:
            lines.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" text-anchor="middle">{escape(label)}</text>')
    lines.append(f'<circle cx="{c}" cy="{c}" r="4" fill="black"/>')
    if origin_text is None and not items and not notes:
        origin_text = "0"
        notes.append("zero cycle")
    if origin_text is not None:
        off = _fmt((size // 2) * 100 + 800)
        lines.append(f'<text x="{off}" y="{_fmt((size // 2) * 100 - 800)}">{escape(origin_text)}</text>')
    for k, note in enumerate(notes):
        lines.append(f'<text x="8.00" y="{_fmt((k + 1) * (font + 4) * 100)}">{escape(note)}</text>')
    lines.append("</g>")
    lines.append("</svg>")
    svg = "\n".join(lines) + "\n"
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(svg)
    return svg


def render_png(cycle: TropicalCycle, path: str, config: Optional[Dict[str, Any]] = None) -> Optional[str]:
    """Raster version of ``render_svg``; returns None when Pillow is not installed."""
    if Image is None:
        return None
    if cycle.rank != 2:
        raise RankNotTwo(f"only rank 2 cycles can be drawn, got rank {cycle.rank}")
    cfg = _config(config)
    size = cfg["size"]
    center = size // 2
    img = Image.new("RGB", (size, size), "white")
    draw = ImageDraw.Draw(img)
    font = ImageFont.load_default()
    items, origin_text, notes = _segments(cycle, cfg)
    for (ex, ey), (lx, ly), label in items:
        draw.line([(center, center), (ex // 100, ey // 100)], fill="black", width=2)
        if label:
            draw.text((lx // 100, ly // 100), label, fill="black", font=font)
    draw.ellipse([center - 4, center - 4, center + 4, center + 4], fill="black")
    if origin_text is None and not items and not notes:
        origin_text = "0"
    if origin_text is not None:
        draw.text((center + 8, center - 16), origin_text, fill="black", font=font)
    for k, note in enumerate(notes):
        draw.text((8, 4 + k * (cfg["font_size"] + 4)), note, fill="black", font=font)
    img.save(path, format="PNG")
    return path
