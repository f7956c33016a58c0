"""Deterministic SVG rendering of geometric drawings.

Only drawings with coordinates can be rendered (straight segments); abstract
drawings raise NoCoordinates.  All emitted numbers are integers in the input
coordinate space (y negated, since SVG grows downward), so equal drawings
produce byte-identical SVG.
"""

from __future__ import annotations

from .certificates import Certificate
from .drawing import all_edges, canon_edge
from .errors import NoCoordinates

_STYLE = (
    ".edge{{stroke:#9aa0a6;stroke-width:{w};fill:none}}"
    ".hl{{stroke:#d62728;stroke-width:{w2}}}"
    ".vtx{{fill:#1a73e8}}"
    "text{{font:{fs}px sans-serif;fill:#202124}}"
)


def _highlight_edges(highlight):
    if highlight is None:
        return frozenset()
    if isinstance(highlight, Certificate):
        highlight = highlight.edges
    return frozenset(canon_edge(u, v) for u, v in highlight)


def render_svg(d, highlight=None):
    """SVG text for a geometric drawing; `highlight` is a Certificate or edge list."""
    if d.points is None:
        raise NoCoordinates("rendering needs coordinates; this drawing is abstract")
    hl = _highlight_edges(highlight)
    pts = {v: (d.points[v][0], -d.points[v][1]) for v in range(1, d.n + 1)}
    xs = [p[0] for p in pts.values()]
    ys = [p[1] for p in pts.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    pad = max(2, span // 10)
    stroke = max(1, span // 320)
    radius = max(2, span // 120)
    fs = max(8, span // 32)

    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">'.format(
            min(xs) - pad, min(ys) - pad, max(xs) - min(xs) + 2 * pad,
            max(ys) - min(ys) + 2 * pad,
        ),
        "<style>" + _STYLE.format(w=stroke, w2=2 * stroke, fs=fs) + "</style>",
    ]
    plain = [e for e in all_edges(d.n) if e not in hl]
    marked = [e for e in all_edges(d.n) if e in hl]
    # Highlighted edges last so they paint on top.
    for e in plain + marked:
        (x1, y1), (x2, y2) = pts[e[0]], pts[e[1]]
        cls = "edge hl" if e in hl else "edge"
        out.append(
            f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>'
        )
    for v in range(1, d.n + 1):
        x, y = pts[v]
        out.append(f'<circle class="vtx" cx="{x}" cy="{y}" r="{radius}"/>')
        out.append(f'<text x="{x + radius}" y="{y - radius}">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
