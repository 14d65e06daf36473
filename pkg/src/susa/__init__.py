"""Polyarc geometry and Babylonian arithmetic for SMT No. 3.

The package recomputes, exactly, every circular-figure constant on Susa
Mathematical Tablet No. 3 (lines 5, 6 and 16-25), reproduces the published
analysis tables around line 6, and renders the figure constructions as SVG.
"""

__version__ = "0.1.0"

from .babylon import (
    ALT_SQRT3,
    STANDARD,
    ApproximationContext,
    HeronTrace,
    Irrational,
    RootTerm,
    context_presets,
    heron_sequence,
    solve_quadratic_takiltum,
    surd_linear_approx,
)
from .errors import MissingSurrogateError, ParseError, SusaError
from .geometry import (
    Family,
    FigureMetrics,
    PolyarcSpec,
    apusamikkum3_metrics,
    apusamikkum4_metrics,
    barley_field_metrics,
    chain_radius,
    concave_area_general,
    convex4_metrics,
    convex6_metrics,
    convex_area_general,
    figure_metrics,
    oracle_area,
    ox_eye_metrics,
)
from .numerics import (
    Rational,
    RealField,
    Sexagesimal,
    expansion_places,
    is_regular,
    parse_sexagesimal,
    rational_to_sexagesimal,
    sexagesimal_to_rational,
)
from .render import RenderRequest, render, supported_figures
from .tablet import (
    TabletEntry,
    VerificationReport,
    builtin_entries,
    reproduce_table1,
    reproduce_table2,
    scribe_error_l6,
    table3_search,
    verify_all,
    verify_entry,
)

__all__ = [name for name in dir() if not name.startswith("_")]
