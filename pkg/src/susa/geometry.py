"""Closed-form areas and dimensions of the tablet's circular figures.

A regular polyarc is a closed figure bounded by n equal circular arcs.  The
concave family is what remains in the middle of a chain of n pairwise
tangent circles; the convex family is the core of n rotated quarter-circle
lenses.  Every figure here has a closed-form area, evaluated in one of two
explicit modes:

* exact mode, a :class:`RealField` at some decimal precision;
* context mode, pure rational arithmetic with an
  :class:`ApproximationContext` substituted into the final per-figure
  formulas.  This reproduces the scribe's arithmetic path (for example
  2(pi-2)a^2/pi^2 with pi -> 3 gives exactly 2/9), not a numeric
  approximation of the exact value.

The two modes never mix implicitly.  An independent chord-discretization
oracle (:func:`oracle_area`) cross-checks every closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from fractions import Fraction

import mpmath
import numpy as np

from .babylon import ApproximationContext, Irrational
from .errors import SusaError
from .numerics import RealField, format_rational


class Family(Enum):
    REGULAR_CONCAVE = "concave"
    REGULAR_CONVEX = "convex"
    BARLEY_FIELD = "barley-field"
    OX_EYE = "ox-eye"
    CONVEX_4 = "convex-4"
    CONVEX_6 = "convex-6"
    APUSAMIKKUM_4 = "apusamikkum-4"
    APUSAMIKKUM_3 = "apusamikkum-3"


_FIXED_ARC_COUNT = {
    Family.BARLEY_FIELD: 2,
    Family.OX_EYE: 2,
    Family.CONVEX_4: 4,
    Family.CONVEX_6: 6,
    Family.APUSAMIKKUM_4: 4,
    Family.APUSAMIKKUM_3: 3,
}

_CONCAVE_FAMILIES = (Family.REGULAR_CONCAVE, Family.APUSAMIKKUM_4, Family.APUSAMIKKUM_3)

#: arc angle as a rational multiple of pi, for the families where it is one
_ARC_ANGLE_OVER_PI = {
    Family.BARLEY_FIELD: Fraction(1, 2),
    Family.OX_EYE: Fraction(2, 3),
    Family.CONVEX_4: Fraction(1, 6),
    Family.APUSAMIKKUM_4: Fraction(1, 2),
    Family.APUSAMIKKUM_3: Fraction(1, 3),
}


@dataclass(frozen=True)
class PolyarcSpec:
    """A figure family plus its arc count and one positive size parameter.

    Exactly one of ``arc_length`` (the common length of the arcs) and
    ``quadrant_radius`` (the radius of the constructive circle) must be
    given.  ``n`` is required for the two generic families and otherwise
    fixed by the figure.
    """

    family: Family
    n: int | None = None
    arc_length: Fraction | None = None
    quadrant_radius: Fraction | None = None

    def __post_init__(self):
        if (self.arc_length is None) == (self.quadrant_radius is None):
            raise ValueError("give exactly one of arc_length and quadrant_radius")
        if self.arc_length is not None:
            object.__setattr__(self, "arc_length", Fraction(self.arc_length))
            if self.arc_length <= 0:
                raise ValueError("arc_length must be positive")
        if self.quadrant_radius is not None:
            object.__setattr__(self, "quadrant_radius", Fraction(self.quadrant_radius))
            if self.quadrant_radius <= 0:
                raise ValueError("quadrant_radius must be positive")
        fixed = _FIXED_ARC_COUNT.get(self.family)
        if fixed is not None:
            if self.n not in (None, fixed):
                raise ValueError(f"{self.family.value} always has {fixed} arcs")
            object.__setattr__(self, "n", fixed)
        elif self.family is Family.REGULAR_CONCAVE:
            if not isinstance(self.n, int) or self.n < 3:
                raise ValueError("a regular concave polyarc needs n >= 3")
        else:
            if not isinstance(self.n, int) or self.n < 2 or self.n % 2:
                raise ValueError("a regular convex polyarc needs even n >= 2")

    @property
    def arc_count(self) -> int:
        return self.n

    @property
    def size(self) -> Fraction:
        return self.arc_length if self.arc_length is not None else self.quadrant_radius


@dataclass(frozen=True)
class FigureMetrics:
    """Area plus the named lengths and part-areas a figure defines.

    Values are exact fractions in context mode and field reals in exact
    mode; the evaluation mode is recorded so serialized output is
    unambiguous.
    """

    figure: str
    mode: str
    precision: int | None
    context: str | None
    area: object
    values: dict = dataclass_field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "figure": self.figure,
            "mode": self.mode,
            "precision": self.precision,
            "context": self.context,
            "area": _value_json(self.area, self.precision),
            "values": {k: _value_json(v, self.precision) for k, v in self.values.items()},
        }


def _value_json(value, precision) -> dict:
    if isinstance(value, Fraction):
        return {"rational": format_rational(value)}
    return {"decimal": mpmath.nstr(value, precision or 15)}


def _wrap(figure: Family, mode, area, values: dict) -> FigureMetrics:
    if isinstance(mode, RealField):
        return FigureMetrics(figure.value, "exact", mode.digits, None, area, values)
    return FigureMetrics(figure.value, "context", None, mode.name, area, values)


def _require_exact(mode, what: str) -> RealField:
    if not isinstance(mode, RealField):
        raise SusaError(f"{what} has no rational surrogate; use exact mode")
    return mode


# ---------------------------------------------------------------------------
# general families
# ---------------------------------------------------------------------------

#: rational surrogates for cot(pi/n) at the arc counts the tablet uses:
#: cot(pi/4) = 1, cot(pi/3) = sqrt(3)/3, cot(pi/6) = sqrt(3)
_COT_SURROGATE = {
    4: (Fraction(1), None),
    3: (Fraction(1, 3), Irrational.SQRT3),
    6: (Fraction(1), Irrational.SQRT3),
}


def concave_area_general(n: int, a, mode):
    """Area of the regular concave polyarc with n arcs of length a.

    The figure is the middle of a chain of n pairwise tangent circles:
    the regular n-gon on the circle centers minus n circular sectors,
    which gives (n^3 cot(pi/n) / (pi^2 (n-2)^2) - n^2 / (2 pi (n-2))) a^2.
    """
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"concave polyarcs need n >= 3, got {n!r}")
    if isinstance(mode, RealField):
        av = mode.number(a)
        pi = mode.pi
        gon = n**3 * mode.cot(pi / n) / (pi**2 * (n - 2) ** 2)
        sectors = Fraction(n**2, 2 * (n - 2)) / pi
        return (gon - sectors) * av**2
    a = Fraction(a)
    sp = mode[Irrational.PI]
    try:
        coeff, symbol = _COT_SURROGATE[n]
    except KeyError:
        raise SusaError(
            f"cot(pi/{n}) has no rational surrogate; use exact mode"
        ) from None
    cot = coeff * (mode[symbol] if symbol else 1)
    gon = Fraction(n**3) / (sp**2 * (n - 2) ** 2) * cot
    sectors = Fraction(n**2, 2 * (n - 2)) / sp
    return (gon - sectors) * a**2


def convex_area_general(n: int, r, mode):
    """Area of the regular convex polyarc with even n arcs, quadrant radius r.

    Exact mode only: the formula involves an arcsine with no rational
    surrogate.  n = 2 collapses to the lens (pi/2 - 1) r^2, n = 4 and n = 6
    to the two- and three-lens overlap figures.
    """
    if not isinstance(n, int) or n < 2 or n % 2:
        raise ValueError(f"convex polyarcs need even n >= 2, got {n!r}")
    field = _require_exact(mode, "the general convex area")
    rv = field.number(r)
    pi = field.pi
    s = field.sin(pi / n)
    c = field.cos(pi / n)
    s2 = field.sin(2 * pi / n)
    root = field.sqrt(1 + c**2)
    sqrt2 = field.sqrt(2)
    half_sin = s * root / sqrt2 - s2 / (2 * sqrt2)
    bracket = s * root / 2 - s2 / 4
    return (n * field.asin(half_sin) - n * bracket) * rv**2


def chain_radius(n: int, r, mode):
    """Radius of the circle the chain's n centers sit on: r / sin(pi/n)."""
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"a tangent chain needs n >= 3, got {n!r}")
    field = _require_exact(mode, "sin(pi/n)")
    return field.number(r) / field.sin(field.pi / n)


# ---------------------------------------------------------------------------
# named figures
# ---------------------------------------------------------------------------


def barley_field_metrics(a, mode) -> FigureMetrics:
    """The barley-field: a convex lens whose two arcs are quarter circles.

    For arc length a the constructive radius is r = 2a/pi; the length (the
    vertex-to-vertex chord) is 2 sqrt(2) a / pi, the width 2(2 - sqrt(2)) a
    / pi, and the area 2(pi - 2) a^2 / pi^2.
    """
    if isinstance(mode, RealField):
        av = mode.number(a)
        pi = mode.pi
        s2 = mode.sqrt(2)
        length = 2 * s2 * av / pi
        width = 2 * (2 - s2) * av / pi
        area = 2 * (pi - 2) * av**2 / pi**2
    else:
        a = Fraction(a)
        sp = mode[Irrational.PI]
        s2 = mode[Irrational.SQRT2]
        length = 2 * s2 * a / sp
        width = 2 * (2 - s2) * a / sp
        area = 2 * (sp - 2) * a**2 / sp**2
    return _wrap(Family.BARLEY_FIELD, mode, area, {"length": length, "width": width})


def ox_eye_metrics(a, mode) -> FigureMetrics:
    """The ox-eye: the wider lens whose arcs are thirds of the circle.

    Width 3a/(2 pi), length 3 sqrt(3) a/(2 pi), and area
    (3/(2 pi) - 9 sqrt(3)/(8 pi^2)) a^2; length/width is always sqrt(3).
    """
    if isinstance(mode, RealField):
        av = mode.number(a)
        pi = mode.pi
        s3 = mode.sqrt(3)
        width = 3 * av / (2 * pi)
        length = 3 * s3 * av / (2 * pi)
        area = (3 / (2 * pi) - 9 * s3 / (8 * pi**2)) * av**2
    else:
        a = Fraction(a)
        sp = mode[Irrational.PI]
        s3 = mode[Irrational.SQRT3]
        width = 3 * a / (2 * sp)
        length = 3 * s3 * a / (2 * sp)
        area = (Fraction(3) / (2 * sp) - 9 * s3 / (8 * sp**2)) * a**2
    return _wrap(Family.OX_EYE, mode, area, {"length": length, "width": width})


def convex4_metrics(r, mode) -> FigureMetrics:
    """The two-lens overlap: a regular convex 4-arc with quadrant radius r.

    Its inscribed square has side sqrt(2 - sqrt(3)) r and area
    (2 - sqrt(3)) r^2; each of the four 30-degree segments contributes
    (pi/3 - 1) r^2 / 4, for a total of (pi/3 + 1 - sqrt(3)) r^2.  In
    context mode the square side is omitted (its nested root has no
    surrogate) and the remaining values are exact rationals.
    """
    if isinstance(mode, RealField):
        rv = mode.number(r)
        pi = mode.pi
        s3 = mode.sqrt(3)
        square_area = (2 - s3) * rv**2
        values = {
            "square_side": mode.sqrt(2 - s3) * rv,
            "square_area": square_area,
            "segment_area": (pi / 3 - 1) * rv**2 / 4,
        }
        area = (pi / 3 + 1 - s3) * rv**2
    else:
        r = Fraction(r)
        sp = mode[Irrational.PI]
        s3 = mode[Irrational.SQRT3]
        values = {
            "square_area": (2 - s3) * r**2,
            "segment_area": (sp / 3 - 1) * r**2 / 4,
        }
        area = (sp / 3 + 1 - s3) * r**2
    return _wrap(Family.CONVEX_4, mode, area, values)


def convex6_metrics(r, mode) -> FigureMetrics:
    """The three-lens overlap: a regular convex 6-arc with quadrant radius r.

    The inscribed regular hexagon has side x = (sqrt(14) - sqrt(6)) r / 4,
    found by completing the square on x^2 + (sqrt(6)/2) r x = r^2/2.  Each
    segment subtends 2 arcsin((sqrt(14) - sqrt(6))/8).  Context mode
    computes only the hexagon area (3 sqrt(3)/8)(5 - sqrt(21)) r^2, the
    quantity the scribe's path actually used as the figure's area, and
    requires surrogates for both sqrt(3) and sqrt(21).
    """
    if isinstance(mode, RealField):
        rv = mode.number(r)
        s14 = mode.sqrt(14)
        s6 = mode.sqrt(6)
        s3 = mode.sqrt(3)
        s7 = mode.sqrt(7)
        s21 = mode.sqrt(21)
        x = (s14 - s6) / 4 * rv
        half_angle = mode.asin((s14 - s6) / 8)
        triangle = s3 / 16 * (5 - s21) * rv**2
        segment = half_angle * rv**2 + (s7 - 3 * s3) / 16 * rv**2
        hexagon = 3 * s3 / 8 * (5 - s21) * rv**2
        area = (6 * half_angle + Fraction(3, 4) * (s3 - s7)) * rv**2
        values = {
            "hexagon_side": x,
            "half_angle_alpha": half_angle,
            "triangle_area": triangle,
            "segment_area": segment,
            "hexagon_area": hexagon,
        }
    else:
        r = Fraction(r)
        s3 = mode[Irrational.SQRT3]
        s21 = mode[Irrational.SQRT21]
        hexagon = 3 * s3 / 8 * (5 - s21) * r**2
        area = hexagon
        values = {"hexagon_area": hexagon}
    return _wrap(Family.CONVEX_6, mode, area, values)


def apusamikkum4_metrics(a, mode) -> FigureMetrics:
    """The apusamikkum ("hole of a lyre"): the regular concave 4-arc.

    For arc length a: diagonal 4a/pi (the side of the circumscribed
    square), transversal 4(sqrt(2) - 1) a/pi (the part of the square's
    diagonal inside the figure), area (16 - 4 pi) a^2 / pi^2.
    """
    if isinstance(mode, RealField):
        av = mode.number(a)
        pi = mode.pi
        s2 = mode.sqrt(2)
        diagonal = 4 * av / pi
        transversal = 4 * (s2 - 1) * av / pi
        area = (16 - 4 * pi) * av**2 / pi**2
    else:
        a = Fraction(a)
        sp = mode[Irrational.PI]
        s2 = mode[Irrational.SQRT2]
        diagonal = 4 * a / sp
        transversal = 4 * (s2 - 1) * a / sp
        area = (16 - 4 * sp) * a**2 / sp**2
    return _wrap(
        Family.APUSAMIKKUM_4, mode, area, {"diagonal": diagonal, "transversal": transversal}
    )


def apusamikkum3_metrics(r, mode) -> FigureMetrics:
    """The three-vertex apusamikkum: the regular concave 3-arc.

    Equals an equilateral triangle of side 2r minus three circle sixths,
    so the area is (sqrt(3) - pi/2) r^2.
    """
    if isinstance(mode, RealField):
        rv = mode.number(r)
        area = (mode.sqrt(3) - mode.pi / 2) * rv**2
    else:
        r = Fraction(r)
        area = (mode[Irrational.SQRT3] - mode[Irrational.PI] / 2) * r**2
    return _wrap(Family.APUSAMIKKUM_3, mode, area, {})


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

#: which size parameter each named figure's formulas are written in
_CANONICAL_SIZE = {
    Family.BARLEY_FIELD: "arc_length",
    Family.OX_EYE: "arc_length",
    Family.CONVEX_4: "quadrant_radius",
    Family.CONVEX_6: "quadrant_radius",
    Family.APUSAMIKKUM_4: "arc_length",
    Family.APUSAMIKKUM_3: "quadrant_radius",
    Family.REGULAR_CONCAVE: "arc_length",
    Family.REGULAR_CONVEX: "quadrant_radius",
}


def _canonical_size(spec: PolyarcSpec, mode):
    """The spec's size converted to the family's canonical parameter.

    Arc length and radius trade through the arc angle: a = theta * r.  The
    angle is a rational multiple of pi except for the convex 6-arc and the
    generic convex family, which therefore require exact mode (or the
    radius directly).
    """
    want = _CANONICAL_SIZE[spec.family]
    have = "arc_length" if spec.arc_length is not None else "quadrant_radius"
    if want == have:
        return spec.size
    over_pi = _ARC_ANGLE_OVER_PI.get(spec.family)
    if spec.family is Family.REGULAR_CONCAVE:
        over_pi = Fraction(spec.n - 2, spec.n)
    if over_pi is not None:
        if isinstance(mode, RealField):
            theta = mode.rational(over_pi) * mode.pi
        else:
            theta = over_pi * mode[Irrational.PI]
        return theta * _number(spec.size, mode)
    # convex 6-arc or generic convex: theta = 2 arcsin(...) is irrational
    field = _require_exact(mode, "this figure's arc angle")
    theta = 2 * field.asin(_convex_half_sin(field, spec.n))
    return field.number(spec.size) / theta


def _number(x, mode):
    return mode.number(x) if isinstance(mode, RealField) else Fraction(x)


def _convex_half_sin(field: RealField, n: int):
    pi = field.pi
    c = field.cos(pi / n)
    return (
        field.sin(pi / n) * field.sqrt(1 + c**2) / field.sqrt(2)
        - field.sin(2 * pi / n) / (2 * field.sqrt(2))
    )


_METRIC_FUNCTIONS = {
    Family.BARLEY_FIELD: barley_field_metrics,
    Family.OX_EYE: ox_eye_metrics,
    Family.CONVEX_4: convex4_metrics,
    Family.CONVEX_6: convex6_metrics,
    Family.APUSAMIKKUM_4: apusamikkum4_metrics,
    Family.APUSAMIKKUM_3: apusamikkum3_metrics,
}


def figure_metrics(spec: PolyarcSpec, mode) -> FigureMetrics:
    """Evaluate a figure's area and named values in the given mode."""
    size = _canonical_size(spec, mode)
    func = _METRIC_FUNCTIONS.get(spec.family)
    if func is not None:
        return func(size, mode)
    if spec.family is Family.REGULAR_CONCAVE:
        area = concave_area_general(spec.n, size, mode)
    else:
        area = convex_area_general(spec.n, size, mode)
    return _wrap(spec.family, mode, area, {})


def closed_form_area(spec: PolyarcSpec, field: RealField):
    """The figure's exact-mode area as a field real."""
    return figure_metrics(spec, field).area


# ---------------------------------------------------------------------------
# discretization oracle
# ---------------------------------------------------------------------------


def _oracle_params(spec: PolyarcSpec) -> tuple[bool, int, float, float]:
    """(concave?, n, circle radius, arc central angle) in floats."""
    n = spec.arc_count
    size = float(spec.size)
    if spec.family in _CONCAVE_FAMILIES:
        alpha = (n - 2) * math.pi / n
        r = size if spec.quadrant_radius is not None else size / alpha
        return True, n, r, alpha
    if spec.family is Family.BARLEY_FIELD:
        theta = math.pi / 2
    elif spec.family is Family.OX_EYE:
        theta = 2 * math.pi / 3
    elif spec.family is Family.CONVEX_4:
        theta = math.pi / 6
    else:  # CONVEX_6 and the generic convex family
        c = math.cos(math.pi / n)
        half_sin = (
            math.sin(math.pi / n) * math.sqrt(1 + c * c) / math.sqrt(2)
            - math.sin(2 * math.pi / n) / (2 * math.sqrt(2))
        )
        theta = 2 * math.asin(half_sin)
    r = size if spec.quadrant_radius is not None else size / theta
    return False, n, r, theta


def boundary_points(spec: PolyarcSpec, k: int) -> np.ndarray:
    """Sample the boundary with k chords per arc, counterclockwise.

    Concave figures are built from the chain construction (circle centers
    on radius r/sin(pi/n)); convex figures from arcs bulging outward whose
    centers the lens construction forces onto radius |rho cos(pi/n) -
    r cos(theta/2)| around the middle.
    """
    concave, n, r, angle = _oracle_params(spec)
    betas = 2 * np.pi * np.arange(n) / n
    if concave:
        centre_dist = r / math.sin(math.pi / n)
        # sweep the inward-facing arc clockwise in local angle so the
        # boundary advances counterclockwise around the figure
        local = np.linspace(np.pi + angle / 2, np.pi - angle / 2, k + 1)[:-1]
    else:
        half = angle / 2
        rho = r * math.sin(half) / math.sin(math.pi / n)
        centre_dist = rho * math.cos(math.pi / n) - r * math.cos(half)
        local = np.linspace(-half, half, k + 1)[:-1]
    thetas = betas[:, None] + local[None, :]
    x = centre_dist * np.cos(betas)[:, None] + r * np.cos(thetas)
    y = centre_dist * np.sin(betas)[:, None] + r * np.sin(thetas)
    return np.stack([x.ravel(), y.ravel()], axis=1)


def shoelace_area(points: np.ndarray) -> float:
    x, y = points[:, 0], points[:, 1]
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))


def oracle_area(spec: PolyarcSpec, k: int = 4096) -> float:
    """Polygon area of the boundary with each arc replaced by k chords.

    Independent of the closed forms; converges to them as O(1/k^2).
    """
    if not isinstance(k, int) or k < 8:
        raise ValueError(f"k must be an integer >= 8, got {k!r}")
    return shoelace_area(boundary_points(spec, k))
