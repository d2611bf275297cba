"""Classification records for Apery points and the kite SVG picture."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .honest import minimal_embedding_dimension
from .kunz import KITE_VERTICES, FaceClass, KunzPoint, enumerate_points, kite_projection, semigroup_of_point
from .series import DEFAULT_TRUNC_MAX


@dataclass(frozen=True)
class KiteStyle:
    width: int = 640
    height: int = 560
    margin: int = 48
    legend_height: int = 70
    radius: float = 3.5
    outline: str = "#222222"
    background: str = "#ffffff"
    font: str = "Helvetica, Arial, sans-serif"
    # me value -> (fill, stroke)
    colors: tuple[tuple[int, str, str], ...] = (
        (2, "#c0392b", "#7b241c"),
        (3, "#5d8aa8", "#2c4a5e"),
        (4, "#ffffff", "#444444"),
    )


STYLE = KiteStyle()


def point_record(p: KunzPoint, fc: FaceClass, trunc_max: int = DEFAULT_TRUNC_MAX) -> dict:
    """JSON record of one in-cone Apery point."""
    S = semigroup_of_point(p)
    verdict = minimal_embedding_dimension(S, trunc_max)
    return {
        "x": list(p.coords),
        "face": fc.face.value,
        "binding": list(fc.binding),
        "e": S.embedding_dimension,
        "me": verdict.me,
    }


def point_records(bound: int, trunc_max: int = DEFAULT_TRUNC_MAX) -> list[dict]:
    return [point_record(p, fc, trunc_max) for p, fc in enumerate_points(bound)]


def _frame(style: KiteStyle):
    corners = [tuple(float(c) for c in kite_projection(v)) for v in KITE_VERTICES]
    us = [u for u, _ in corners]
    vs = [v for _, v in corners]
    plot_h = style.height - style.legend_height
    scale = min((style.width - 2 * style.margin) / (max(us) - min(us)),
                (plot_h - 2 * style.margin) / (max(vs) - min(vs)))
    cx = style.width / 2 - scale * (max(us) + min(us)) / 2
    cy = plot_h / 2 + scale * (max(vs) + min(vs)) / 2

    def to_px(coords):
        u, v = (float(c) for c in kite_projection(coords))
        return cx + scale * u, cy - scale * v

    return to_px


def render_kite_svg(records: list[dict], style: KiteStyle = STYLE) -> str:
    to_px = _frame(style)
    fill = {me: (f, s) for me, f, s in style.colors}
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{style.width}" '
        f'height="{style.height}" viewBox="0 0 {style.width} {style.height}">',
        f'<rect x="0" y="0" width="{style.width}" height="{style.height}" fill="{style.background}"/>',
    ]
    outline = " ".join(f"{x:.3f},{y:.3f}" for x, y in map(to_px, KITE_VERTICES))
    out.append(f'<polygon points="{outline}" fill="none" stroke="{style.outline}" stroke-width="1.5"/>')
    out.append('<g id="points">')
    for rec in records:
        x, y = to_px(rec["x"])
        f, s = fill.get(rec["me"], ("#999999", "#555555"))
        label = ",".join(map(str, rec["x"]))
        out.append(
            f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{style.radius}" fill="{f}" stroke="{s}" '
            f'stroke-width="0.8"><title>({label}) {rec["face"]} e={rec["e"]} me={rec["me"]}</title></circle>'
        )
    out.append("</g>")

    counts = {me: sum(1 for r in records if r["me"] == me) for me, _, _ in style.colors}
    y0 = style.height - style.legend_height + 20
    out.append(f'<g id="legend" font-family="{style.font}" font-size="13">')
    for i, (me, f, s) in enumerate(style.colors):
        x0 = style.margin + i * 180
        out.append(f'<circle cx="{x0}" cy="{y0}" r="6" fill="{f}" stroke="{s}"/>')
        out.append(f'<text x="{x0 + 12}" y="{y0 + 4}">me = {me} ({counts[me]})</text>')
    out.append(f'<text x="{style.margin}" y="{y0 + 30}">Apery points in the Kunz cone, slice x1+x2+x3 = 1; '
               f'{len(records)} points</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_kite_svg(bound: int, out: str | Path, trunc_max: int = DEFAULT_TRUNC_MAX) -> list[dict]:
    """Write the kite picture for all points with coordinates <= bound; returns the records."""
    records = point_records(bound, trunc_max)
    Path(out).write_text(render_kite_svg(records), encoding="utf-8")
    return records
