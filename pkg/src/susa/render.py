"""SVG renderings of the tablet's figure constructions.

Everything is drawn from the same construction data the geometry module
uses: concave polyarcs as chains of pairwise tangent circles, convex ones
as intersections of rotated quarter-circle lenses.  Arcs are emitted as
SVG elliptical-arc commands, never polylines, so the rendered curves are
exact.  Output is plain SVG 1.1 text and is byte-identical for identical
requests.

Coordinates are mathematical: the figure sits at the canvas center with
the y axis pointing up (a single group transform does the flip).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import SusaError
from .geometry import Family, PolyarcSpec

_TAU = 2 * math.pi


@dataclass(frozen=True)
class RenderRequest:
    """What to draw and how.

    ``subject`` is a :class:`PolyarcSpec` (renders that construction), one
    of the named figure ids in :func:`supported_figures`, or ``"sb23397"``
    for the vase-pattern reconstruction.
    """

    subject: object
    width: int = 600
    height: int = 600
    stroke: str = "#27241d"
    fill: str = "#dec98f"
    show_guides: bool = False

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas dimensions must be positive")


def _fmt(x: float) -> str:
    # fixed 12-decimal output keeps files deterministic and the tangency
    # invariant checkable to 1e-9 from the serialized coordinates
    return f"{x:.12f}"


# ---------------------------------------------------------------------------
# element model: ("circle", cls, cx, cy, r) | ("path", cls, [arc...]) |
# ("line", cls, x1, y1, x2, y2) | ("polygon", cls, [(x, y), ...])
# an arc is (cx, cy, r, a0, a1): traversed from angle a0 to a1
# ---------------------------------------------------------------------------


def _arc_point(arc, angle):
    cx, cy, r, _, _ = arc
    return cx + r * math.cos(angle), cy + r * math.sin(angle)


def _path_d(arcs) -> str:
    x0, y0 = _arc_point(arcs[0], arcs[0][3])
    parts = [f"M {_fmt(x0)} {_fmt(y0)}"]
    for arc in arcs:
        cx, cy, r, a0, a1 = arc
        x1, y1 = _arc_point(arc, a1)
        sweep = 1 if a1 > a0 else 0
        large = 1 if abs(a1 - a0) > math.pi else 0
        parts.append(f"A {_fmt(r)} {_fmt(r)} 0 {large} {sweep} {_fmt(x1)} {_fmt(y1)}")
    parts.append("Z")
    return " ".join(parts)


def chain_centers(n: int, r: float) -> list[tuple[float, float]]:
    """Centers of the n pairwise tangent circles, on radius r/sin(pi/n)."""
    big = r / math.sin(math.pi / n)
    return [
        (big * math.cos(_TAU * j / n), big * math.sin(_TAU * j / n)) for j in range(n)
    ]


def _concave_polyarc_arcs(n: int, r: float) -> list[tuple]:
    alpha = (n - 2) * math.pi / n
    arcs = []
    for j, (cx, cy) in enumerate(chain_centers(n, r)):
        beta = _TAU * j / n
        arcs.append((cx, cy, r, beta + math.pi + alpha / 2, beta + math.pi - alpha / 2))
    return arcs


def _convex_polyarc_arcs(n: int, r: float, theta: float) -> list[tuple]:
    half = theta / 2
    rho = r * math.sin(half) / math.sin(math.pi / n)
    c = rho * math.cos(math.pi / n) - r * math.cos(half)
    arcs = []
    for j in range(n):
        beta = _TAU * j / n
        arcs.append((c * math.cos(beta), c * math.sin(beta), r, beta - half, beta + half))
    return arcs


def _convex_theta(spec: PolyarcSpec) -> float:
    if spec.family is Family.BARLEY_FIELD:
        return math.pi / 2
    if spec.family is Family.OX_EYE:
        return 2 * math.pi / 3
    if spec.family is Family.CONVEX_4:
        return math.pi / 6
    n = spec.arc_count
    c = math.cos(math.pi / n)
    half_sin = (
        math.sin(math.pi / n) * math.sqrt(1 + c * c) / math.sqrt(2)
        - math.sin(2 * math.pi / n) / (2 * math.sqrt(2))
    )
    return 2 * math.asin(half_sin)


def _float_sizes(spec: PolyarcSpec) -> float:
    """Constructive-circle radius as a float."""
    size = float(spec.size)
    if spec.family in (Family.REGULAR_CONCAVE, Family.APUSAMIKKUM_4, Family.APUSAMIKKUM_3):
        if spec.quadrant_radius is not None:
            return size
        n = spec.arc_count
        return size * n / ((n - 2) * math.pi)
    if spec.quadrant_radius is not None:
        return size
    return size / _convex_theta(spec)


# ---------------------------------------------------------------------------
# subject builders
# ---------------------------------------------------------------------------


def _build_concave(spec: PolyarcSpec, guides: bool):
    n = spec.arc_count
    r = _float_sizes(spec)
    centers = chain_centers(n, r)
    elements = [("circle", "chain", cx, cy, r) for cx, cy in centers]
    elements.append(("path", "polyarc", _concave_polyarc_arcs(n, r)))
    if guides:
        big = r / math.sin(math.pi / n)
        elements.append(("circle", "guide", 0.0, 0.0, big))
        elements.append(("polygon", "guide", centers))
        elements += [("circle", "center", cx, cy, 0.0) for cx, cy in centers]
    return elements


def _lens_construction_circles(n: int, r: float) -> list[tuple]:
    # every lens circle sits at distance r/sqrt(2) from the figure center
    d = r / math.sqrt(2)
    return [
        ("circle", "construction", d * math.cos(_TAU * j / n), d * math.sin(_TAU * j / n), r)
        for j in range(n)
    ]


def _convex_vertices(n: int, r: float, theta: float) -> list[tuple[float, float]]:
    rho = r * math.sin(theta / 2) / math.sin(math.pi / n)
    return [
        (rho * math.cos(_TAU * j / n + math.pi / n), rho * math.sin(_TAU * j / n + math.pi / n))
        for j in range(n)
    ]


def _build_convex(spec: PolyarcSpec, guides: bool):
    n = spec.arc_count
    r = _float_sizes(spec)
    theta = _convex_theta(spec)
    if spec.family in (Family.BARLEY_FIELD, Family.OX_EYE):
        # the two defining circles sit at distance r cos(theta/2) from the center
        d = r * math.cos(theta / 2)
        elements = [
            ("circle", "construction", -d, 0.0, r),
            ("circle", "construction", d, 0.0, r),
        ]
    else:
        elements = _lens_construction_circles(n, r)
    elements.append(("path", "polyarc", _convex_polyarc_arcs(n, r, theta)))
    if guides:
        verts = _convex_vertices(n, r, theta)
        if n >= 3:
            elements.append(("polygon", "guide", verts))
        if spec.family in (Family.BARLEY_FIELD, Family.OX_EYE):
            rho = r * math.sin(theta / 2)
            width_half = r - r * math.cos(theta / 2)
            elements.append(("line", "guide", 0.0, -rho, 0.0, rho))
            elements.append(("line", "guide", -width_half, 0.0, width_half, 0.0))
        if spec.family is Family.CONVEX_6:
            for vx, vy in verts:
                elements.append(("line", "guide", 0.0, 0.0, vx, vy))
    return elements


def _build_apusamikkum_guides(spec: PolyarcSpec, elements):
    r = _float_sizes(spec)
    # diagonal between opposite vertices; transversal along the center line
    v = r  # vertices sit at distance R cos(pi/4) = r from the center
    d = math.sqrt(2) / 2
    elements.append(("line", "guide", -v * d, -v * d, v * d, v * d))
    t = (math.sqrt(2) - 1) * r
    elements.append(("line", "guide", -t, 0.0, t, 0.0))
    return elements


def _build_sb23397(guides: bool):
    """Five tangent unit circles around a middle circle, five 3-arc gaps."""
    n, r = 5, 1.0
    big = r / math.sin(math.pi / n)
    middle = big - r
    alpha = (n - 2) * math.pi / n
    centers = chain_centers(n, r)
    elements = [("circle", "chain", cx, cy, r) for cx, cy in centers]
    elements.append(("circle", "construction", 0.0, 0.0, middle))
    for j in range(n):
        beta = _TAU * j / n
        beta_next = _TAU * ((j + 1) % n) / n
        if j + 1 == n:
            beta_next = _TAU  # keep angles monotone across the wrap
        cj = centers[j]
        cn = centers[(j + 1) % n]
        arcs = [
            (cj[0], cj[1], r, beta + math.pi, beta + math.pi - alpha / 2),
            (cn[0], cn[1], r, beta_next + math.pi + alpha / 2, beta_next + math.pi),
            (0.0, 0.0, middle, beta_next, beta),
        ]
        elements.append(("path", "gap", arcs))
    if guides:
        elements.append(("circle", "guide", 0.0, 0.0, big + r))
        elements.append(("polygon", "guide", centers))
    return elements


def _figure_subjects():
    one = Fraction(1)
    return {
        "barley-field": PolyarcSpec(Family.BARLEY_FIELD, arc_length=one),
        "ox-eye": PolyarcSpec(Family.OX_EYE, arc_length=one),
        "two-lens-overlap": PolyarcSpec(Family.CONVEX_4, quadrant_radius=one),
        "three-lens-overlap": PolyarcSpec(Family.CONVEX_6, quadrant_radius=one),
        "apusamikkum": PolyarcSpec(Family.APUSAMIKKUM_4, arc_length=one),
        "apusamikkum-3": PolyarcSpec(Family.APUSAMIKKUM_3, quadrant_radius=one),
    }


def supported_figures() -> tuple[str, ...]:
    return tuple(_figure_subjects()) + ("sb23397",)


def _build_elements(req: RenderRequest):
    subject = req.subject
    if isinstance(subject, str):
        if subject == "sb23397":
            return _build_sb23397(req.show_guides)
        try:
            spec = _figure_subjects()[subject]
        except KeyError:
            raise SusaError(
                f"unsupported figure id {subject!r}; known ids: "
                + ", ".join(supported_figures())
            ) from None
    elif isinstance(subject, PolyarcSpec):
        spec = subject
    else:
        raise SusaError(f"cannot render subject {subject!r}")
    if spec.family in (Family.REGULAR_CONCAVE, Family.APUSAMIKKUM_4, Family.APUSAMIKKUM_3):
        elements = _build_concave(spec, req.show_guides)
        if spec.family is Family.APUSAMIKKUM_4 and req.show_guides:
            elements = _build_apusamikkum_guides(spec, elements)
        return elements
    return _build_convex(spec, req.show_guides)


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------


def _extent(elements) -> float:
    worst = 0.0
    for el in elements:
        kind = el[0]
        if kind == "circle":
            _, _, cx, cy, r = el
            worst = max(worst, math.hypot(cx, cy) + r)
        elif kind == "path":
            for cx, cy, r, _, _ in el[2]:
                worst = max(worst, math.hypot(cx, cy) + r)
        elif kind == "line":
            _, _, x1, y1, x2, y2 = el
            worst = max(worst, math.hypot(x1, y1), math.hypot(x2, y2))
        else:
            for x, y in el[2]:
                worst = max(worst, math.hypot(x, y))
    return worst or 1.0


def render(req: RenderRequest) -> str:
    """Produce a standalone SVG document for the request."""
    elements = _build_elements(req)
    scale = 0.42 * min(req.width, req.height) / _extent(elements)
    stroke_w = 1.5 / scale
    guide_w = 0.9 / scale
    dot_r = 3.0 / scale
    dash = f"{_fmt(6.0 / scale)} {_fmt(4.0 / scale)}"

    body = []
    for el in elements:
        kind, cls = el[0], el[1]
        if kind == "circle":
            _, _, cx, cy, r = el
            if cls == "center":
                body.append(
                    f'<circle class="center" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
                    f'r="{_fmt(dot_r)}" fill="{req.stroke}" stroke="none"/>'
                )
                continue
            style = (
                f'fill="none" stroke="{req.stroke}" stroke-width="{_fmt(stroke_w)}"'
                if cls in ("chain", "construction")
                else f'fill="none" stroke="{req.stroke}" stroke-width="{_fmt(guide_w)}" '
                f'stroke-dasharray="{dash}"'
            )
            body.append(
                f'<circle class="{cls}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" {style}/>'
            )
        elif kind == "path":
            d = _path_d(el[2])
            fill = req.fill if cls in ("polyarc", "gap") else "none"
            body.append(
                f'<path class="{cls}" d="{d}" fill="{fill}" '
                f'stroke="{req.stroke}" stroke-width="{_fmt(stroke_w)}"/>'
            )
        elif kind == "line":
            _, _, x1, y1, x2, y2 = el
            body.append(
                f'<line class="{cls}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="{req.stroke}" '
                f'stroke-width="{_fmt(guide_w)}" stroke-dasharray="{dash}"/>'
            )
        else:
            pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in el[2])
            body.append(
                f'<polygon class="{cls}" points="{pts}" fill="none" '
                f'stroke="{req.stroke}" stroke-width="{_fmt(guide_w)}" '
                f'stroke-dasharray="{dash}"/>'
            )

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        "<!-- coordinate frame: origin at the canvas center, y axis up "
        "(mathematical orientation); lengths in figure units -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{req.width}" height="{req.height}" '
        f'viewBox="0 0 {req.width} {req.height}">',
        f'<g transform="translate({_fmt(req.width / 2)},{_fmt(req.height / 2)}) '
        f'scale({_fmt(scale)},{_fmt(-scale)})">',
        *body,
        "</g>",
        "</svg>",
        "",
    ]
    return "\n".join(lines)
