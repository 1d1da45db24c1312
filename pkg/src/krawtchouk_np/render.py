"""Plain-text and SVG drawings of a Newton polygon."""
from __future__ import annotations

from .algebra import INFINITY
from .newton import NewtonPolygon


def polygon_text(points, poly: NewtonPolygon) -> str:
    """Character plot: ``*`` coefficient points, ``O`` hull vertices."""
    finite = [(x, y) for x, y in points if y is not INFINITY]
    width = max(x for x, _ in finite)
    height = max(y for _, y in finite)
    verts = set(poly.vertices)
    rows = []
    for y in range(height, -1, -1):
        cells = []
        for x in range(width + 1):
            if (x, y) in verts:
                cells.append("O")
            elif (x, y) in finite:
                cells.append("*")
            else:
                cells.append(".")
        rows.append(f"{y:>3} " + " ".join(cells))
    rows.append("    " + " ".join(str(x % 10) for x in range(width + 1)))
    return "\n".join(rows)


def polygon_svg(points, poly: NewtonPolygon, unit: int = 24) -> str:
    finite = [(x, y) for x, y in points if y is not INFINITY]
    width = max(x for x, _ in finite)
    height = max(y for _, y in finite)
    pad = unit
    W, H = (width * unit) + 2 * pad, (height * unit) + 2 * pad

    def sx(x):
        return pad + x * unit

    def sy(y):
        return H - pad - y * unit

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
        f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(width)}" y2="{sy(0)}" stroke="#888"/>',
        f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{sy(height)}" stroke="#888"/>',
    ]
    path = " ".join(f"{sx(x)},{sy(y)}" for x, y in poly.vertices)
    out.append(f'<polyline points="{path}" fill="none" stroke="black" stroke-width="2"/>')
    verts = set(poly.vertices)
    for x, y in finite:
        r = 4 if (x, y) in verts else 2.5
        fill = "black" if (x, y) in verts else "#999"
        out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="{r}" fill="{fill}"/>')
    for x, y in poly.vertices:
        out.append(
            f'<text x="{sx(x) + 5}" y="{sy(y) - 5}" font-size="10" font-family="monospace">({x},{y})</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
