"""Four-panel SVG drawing of the polytope construction.

Panels, left to right: the traced loop on the lattice, its convex hull with
vertices marked, the square corners subtracted at each hull vertex, and the
resulting Friedl–Tillmann polytope.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .polytope import (
    Point,
    convex_hull,
    erode_unit_square,
    ft_polytope,
    trace_loop,
)
from .words import Word, cyclic_core_letters, exponent_sums
from .errors import EmptyWordError, NotInDerivedSubgroupError

UNIT = 40
MARGIN = 20
GAP = 30
MARKER_R = 4


def _bbox(points):
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return min(xs), min(ys), max(xs), max(ys)


class _Panel:
    def __init__(self, x0, bbox, title):
        self.x0 = x0
        self.minx, self.miny, self.maxx, self.maxy = bbox
        self.title = title
        self.width = (self.maxx - self.minx) * UNIT + 2 * MARGIN
        self.height = (self.maxy - self.miny) * UNIT + 2 * MARGIN
        self.items = []

    def xy(self, p):
        # SVG y grows downward.
        return (
            self.x0 + MARGIN + (p.x - self.minx) * UNIT,
            MARGIN + 20 + (self.maxy - p.y) * UNIT,
        )

    def grid(self):
        for gx in range(self.minx, self.maxx + 1):
            (x1, y1), (x2, y2) = self.xy(Point(gx, self.miny)), self.xy(Point(gx, self.maxy))
            self.items.append(_line(x1, y1, x2, y2, "grid"))
        for gy in range(self.miny, self.maxy + 1):
            (x1, y1), (x2, y2) = self.xy(Point(self.minx, gy)), self.xy(Point(self.maxx, gy))
            self.items.append(_line(x1, y1, x2, y2, "grid"))

    def polyline(self, points, cls, closed=False):
        coords = " ".join(f"{x},{y}" for x, y in map(self.xy, points))
        tag = "polygon" if closed else "polyline"
        self.items.append(f'<{tag} class="{cls}" points="{coords}"/>')

    def marker(self, p, cls):
        x, y = self.xy(p)
        self.items.append(f'<circle class="{cls}" cx="{x}" cy="{y}" r="{MARKER_R}"/>')

    def render(self, panel_id):
        head = (
            f'<g id="{panel_id}">'
            f'<text x="{self.x0 + MARGIN}" y="16">{escape(self.title)}</text>'
        )
        return head + "".join(self.items) + "</g>"


def _line(x1, y1, x2, y2, cls):
    return f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>'


_STYLE = (
    ".grid{stroke:#bbb;stroke-width:1;stroke-dasharray:3,3}"
    ".loop{fill:none;stroke:#2549c4;stroke-width:2}"
    ".hull{fill:#2549c4;fill-opacity:0.12;stroke:#2549c4;stroke-width:2}"
    ".square{fill:none;stroke:#888;stroke-width:1}"
    ".hull-vertex,.corner,.ft-vertex{fill:#fff;stroke:#d22;stroke-width:2}"
    ".ft{fill:#d22;fill-opacity:0.15;stroke:#d22;stroke-width:2}"
)


def render_svg(w: Word) -> str:
    if not w:
        raise EmptyWordError("the empty relator has no polytope")
    if not exponent_sums(w).is_zero:
        raise NotInDerivedSubgroupError(f"{w} has non-zero exponent sums")
    core = Word(cyclic_core_letters(w.letters)[1])
    loop = trace_loop(core)
    hull = convex_hull(loop)
    summand = erode_unit_square(hull)
    ft = ft_polytope(w)

    panels = []
    x0 = 0
    box = _bbox(loop)
    specs = [("loop", box), ("hull", box), ("corners", box), ("ft", _bbox(ft.vertices))]
    titles = {
        "loop": f"loop of {w}",
        "hull": "convex hull",
        "corners": "square corners",
        "ft": "Friedl-Tillmann polytope",
    }
    for name, bbox in specs:
        panel = _Panel(x0, bbox, titles[name])
        panel.grid()
        panels.append(panel)
        x0 += panel.width + GAP
    p_loop, p_hull, p_corner, p_ft = panels

    p_loop.polyline(loop, "loop")
    p_hull.polyline(hull.vertices, "hull", closed=len(hull.vertices) > 2)
    for v in hull.vertices:
        p_hull.marker(v, "hull-vertex")
    p_corner.polyline(hull.vertices, "hull", closed=True)
    for v in summand.vertices:
        p_corner.polyline(
            [v, v + Point(1, 0), v + Point(1, 1), v + Point(0, 1)], "square", closed=True
        )
        p_corner.marker(v, "corner")
    if len(ft.vertices) > 1:
        p_ft.polyline(ft.vertices, "ft", closed=len(ft.vertices) > 2)
    for v in ft.vertices:
        p_ft.marker(v, "ft-vertex")

    width = x0 - GAP
    height = max(p.height for p in panels) + 20
    body = "".join(p.render(f"panel-{name}") for p, (name, _) in zip(panels, specs))
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
        f"<style>{_STYLE}</style>{body}</svg>\n"
    )
