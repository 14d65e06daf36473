"""Command-line interface.

Subcommands: compute (figure metrics), verify (tablet constants), approx
(root machinery), tables (the three published tables), render (SVG), and
convert (sexagesimal <-> rational).  All machine output goes through
``--json``; human output is plain UTF-8 text with no color, so NO_COLOR
needs nothing special.  Exit status: 0 success, 1 usage error, 2
computation error, 3 unexpected verification outcome under ``--strict``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath

from . import __version__
from .babylon import context_presets, heron_sequence, surd_linear_approx
from .errors import SusaError
from .geometry import Family, PolyarcSpec, figure_metrics, oracle_area
from .numerics import (
    RealField,
    format_rational,
    parse_rational,
    parse_sexagesimal,
    rational_to_sexagesimal,
)
from .render import RenderRequest, render, supported_figures
from .tablet import (
    builtin_entries,
    entry_for_line,
    reproduce_table1,
    reproduce_table2,
    scribe_error_l6,
    table3_search,
    verify_all,
    verify_entry,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _parse_value(text: str) -> Fraction:
    """Accept either tablet notation or a fraction string."""
    if ";" in text or "," in text:
        return parse_sexagesimal(text).to_fraction()
    return parse_rational(text)


_FAMILY_NAMES = {
    "barley-field": Family.BARLEY_FIELD,
    "ox-eye": Family.OX_EYE,
    "convex-4": Family.CONVEX_4,
    "convex-6": Family.CONVEX_6,
    "apusamikkum-4": Family.APUSAMIKKUM_4,
    "apusamikkum-3": Family.APUSAMIKKUM_3,
    "concave": Family.REGULAR_CONCAVE,
    "convex": Family.REGULAR_CONVEX,
}


def _build_spec(family_name: str, args) -> PolyarcSpec:
    family = _FAMILY_NAMES[family_name]
    sizes = {}
    if args.arc_length is not None:
        sizes["arc_length"] = _parse_value(args.arc_length)
    if args.radius is not None:
        sizes["quadrant_radius"] = _parse_value(args.radius)
    if not sizes:
        sizes["arc_length" if family in (
            Family.BARLEY_FIELD, Family.OX_EYE, Family.APUSAMIKKUM_4,
            Family.REGULAR_CONCAVE,
        ) else "quadrant_radius"] = Fraction(1)
    return PolyarcSpec(family, n=args.arcs, **sizes)


def _load_context(args):
    presets = context_presets()
    name = args.context
    if name in presets:
        return presets[name]
    if name.startswith("@"):
        from .babylon import ApproximationContext

        with open(name[1:], encoding="utf-8") as handle:
            return ApproximationContext.from_json(json.load(handle), name=name[1:])
    raise SusaError(
        f"unknown context {name!r}: use one of {', '.join(presets)} or @file.json"
    )


def _show(q: Fraction, places: int) -> str:
    return f"{format_rational(q)} = {rational_to_sexagesimal(q, places)}"


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_compute(args) -> int:
    spec = _build_spec(args.figure, args)
    if args.mode == "exact":
        mode = RealField(args.precision)
    else:
        mode = _load_context(args)
    metrics = figure_metrics(spec, mode)
    if args.oracle:
        oracle = oracle_area(spec, args.oracle)
    if args.json:
        payload = metrics.to_json()
        if args.oracle:
            payload["oracle"] = {"k": args.oracle, "decimal": repr(oracle)}
        print(json.dumps(payload, indent=2))
        return 0
    print(f"figure: {metrics.figure}  mode: {metrics.mode}"
          + (f" ({metrics.context})" if metrics.context else f" (P={metrics.precision})"))
    for name, value in [("area", metrics.area), *metrics.values.items()]:
        if isinstance(value, Fraction):
            print(f"  {name} = {_show(value, args.places)}")
        else:
            field = RealField(args.precision)
            print(f"  {name} = {mpmath.nstr(value, args.precision)}"
                  f" = {field.sexagesimal(value, args.places)} (truncated)")
    if args.oracle:
        print(f"  oracle area (k={args.oracle}) = {oracle!r}")
    return 0


def _cmd_verify(args) -> int:
    if args.line is not None:
        reports = (verify_entry(entry_for_line(args.line), args.precision),)
    else:
        reports = verify_all(args.precision)
    if args.json:
        payload = [r.to_json() for r in reports]
        if any(r.entry.line == 6 for r in reports):
            payload.append({"line6_error_analysis": scribe_error_l6(args.precision).to_json()})
        print(json.dumps(payload, indent=2))
    else:
        header = (f"{'line':>4}  {'figure':<30} {'quantity':<12} {'scribe':<16} "
                  f"{'recomputed':<18} {'match':<6} {'exact':<18} {'error%':<8}")
        print(header)
        print("-" * len(header))
        for r in reports:
            flag = "yes" if r.matches_scribe else "NO"
            if r.matches_scribe != r.entry.expected_match:
                flag += " (!)"
            print(
                f"{r.entry.line:>4}  {r.entry.label:<30} {r.entry.quantity:<12} "
                f"{r.entry.scribe_text:<16} {str(r.recomputed_sexagesimal):<18} "
                f"{flag:<6} {mpmath.nstr(r.exact_value, 12):<18} "
                f"{mpmath.nstr(r.scribe_error_percent, 4):<8}"
            )
        matches = sum(r.matches_scribe for r in reports)
        print(f"{matches} of {len(reports)} lines reproduce the scribe's value exactly.")
        if any(r.entry.line == 6 for r in reports):
            err = scribe_error_l6(args.precision)
            print(
                "line 6 error: "
                f"{mpmath.nstr(err.percent_of_total, 4)}% of the exact figure area, "
                f"{mpmath.nstr(err.percent_of_hexagon, 4)}% of the exact hexagon area; "
                f"published claim 1.4% "
                + ("(reproduced)" if err.reproduces_published else "(not reproduced)")
            )
    if args.strict and any(r.matches_scribe != r.entry.expected_match for r in reports):
        print("strict mode: unexpected verification outcome", file=sys.stderr)
        return 3
    return 0


def _cmd_approx(args) -> int:
    if args.what == "heron":
        trace = heron_sequence(_parse_value(args.values[0]),
                               _parse_value(args.values[1]),
                               int(args.values[2]))
        if args.json:
            print(json.dumps({
                "radicand": format_rational(trace.radicand),
                "seed": format_rational(trace.seed),
                "iterates": [format_rational(x) for x in trace.iterates],
                "sexagesimal": [str(rational_to_sexagesimal(x, args.places))
                                for x in trace.iterates],
            }, indent=2))
        else:
            for k, x in enumerate(trace.iterates):
                print(f"x{k} = {_show(x, args.places)}")
        return 0
    if args.what == "surd":
        a, b, sign = _parse_value(args.values[0]), _parse_value(args.values[1]), args.values[2]
        result = surd_linear_approx(a, b, sign)
        if args.json:
            print(json.dumps({"a": format_rational(a), "b": format_rational(b),
                              "sign": sign, "result": format_rational(result)}, indent=2))
        else:
            print(f"sqrt({format_rational(a*a)} {sign} {format_rational(b)}) "
                  f"~ {_show(result, args.places)}")
        return 0
    # contexts
    presets = context_presets()
    if args.json:
        print(json.dumps({name: ctx.to_json() for name, ctx in presets.items()}, indent=2))
    else:
        for name, ctx in presets.items():
            pairs = ", ".join(f"{sym.value} -> {format_rational(val)}"
                              for sym, val in ctx.items())
            print(f"{name}: {pairs}")
    return 0


def _seed_label(seed: Fraction, places: int) -> str:
    return str(rational_to_sexagesimal(seed, places))


def _cmd_tables(args) -> int:
    if args.number in (1, 2):
        cells = reproduce_table1() if args.number == 1 else reproduce_table2()
        if args.json:
            print(json.dumps([{
                "seed": format_rational(c.seed), "step": c.step,
                "value": format_rational(c.value), "rendered": str(c.rendered),
                "published": c.published_text, "matches": c.matches_published,
            } for c in cells], indent=2))
            return 0
        for c in cells:
            note = "ok" if c.matches_published else f"MISMATCH (published {c.published_text})"
            print(f"seed {_seed_label(c.seed, args.places):<5} x{c.step}: "
                  f"{format_rational(c.value):<22} = {str(c.rendered):<22} {note}")
        return 0
    candidates = {"sqrt3": None, "sqrt21": None}
    if args.candidates_file:
        with open(args.candidates_file, encoding="utf-8") as handle:
            raw = json.load(handle)
        candidates = {key: [parse_rational(v) for v in raw[key]] for key in ("sqrt3", "sqrt21")}
    results = table3_search(candidates["sqrt3"], candidates["sqrt21"])
    shown = results if args.top is None else results[: args.top]
    if args.json:
        print(json.dumps([{
            "sqrt3": format_rational(c.sqrt3), "sqrt21": format_rational(c.sqrt21),
            "value": format_rational(c.value), "distance": format_rational(c.distance),
        } for c in shown], indent=2))
        return 0
    print(f"{'rank':>4}  {'sqrt3':<8} {'sqrt21':<22} {'value':<24} distance")
    for rank, c in enumerate(shown, start=1):
        print(f"{rank:>4}  {format_rational(c.sqrt3):<8} {format_rational(c.sqrt21):<22} "
              f"{format_rational(c.value):<24} {float(c.distance):.3e}")
    return 0


def _cmd_render(args) -> int:
    if args.figure is not None:
        subject = args.figure
    elif args.construction is not None:
        subject = _build_spec(args.construction, args)
    else:
        raise SusaError("render needs --figure or --construction")
    try:
        width, height = (int(part) for part in args.size.lower().split("x"))
    except ValueError:
        raise SusaError(f"--size expects WIDTHxHEIGHT, got {args.size!r}") from None
    document = render(RenderRequest(
        subject=subject, width=width, height=height,
        stroke=args.stroke, fill=args.fill, show_guides=args.guides,
    ))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(document)
    else:
        sys.stdout.write(document)
    return 0


def _cmd_convert(args) -> int:
    text = args.value
    if ";" in text or "," in text:
        numeral = parse_sexagesimal(text)
        rational = numeral.to_fraction()
    else:
        rational = parse_rational(text)
        numeral = rational_to_sexagesimal(rational, args.places, args.round_mode)
    if args.json:
        print(json.dumps({
            "input": text,
            "rational": format_rational(rational),
            "sexagesimal": str(numeral),
            "sexagesimal_digits": numeral.to_json(),
        }, indent=2))
    elif ";" in text or "," in text:
        print(format_rational(rational))
    else:
        print(str(numeral))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_common(sub, *, places=True, precision=True):
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    if places:
        sub.add_argument("--places", type=int, default=5,
                         help="sexagesimal fractional places (default 5, truncated)")
    if precision:
        sub.add_argument("--precision", type=int, default=30,
                         help="exact-mode working precision in decimal digits")


def _add_figure_arguments(sub):
    sub.add_argument("--figure", choices=sorted(_FAMILY_NAMES), required=True)
    sub.add_argument("--arcs", type=int, default=None,
                     help="arc count for the generic concave/convex families")
    sub.add_argument("--arc-length", default=None, help="size as common arc length")
    sub.add_argument("--radius", default=None, help="size as constructive-circle radius")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="susa", description=__doc__.splitlines()[0] if __doc__ else "")
    parser.add_argument("--version", action="version", version=f"susa {__version__}")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    compute = subs.add_parser("compute", help="evaluate a figure's area and dimensions")
    _add_figure_arguments(compute)
    compute.add_argument("--mode", choices=("exact", "context"), default="exact")
    compute.add_argument("--context", default="standard",
                         help="context name or @file.json (context mode)")
    compute.add_argument("--oracle", type=int, default=None, metavar="K",
                         help="also run the chord oracle with K chords per arc")
    _add_common(compute)
    compute.set_defaults(func=_cmd_compute)

    verify = subs.add_parser("verify", help="recompute the tablet's constants")
    verify.add_argument("--line", type=int, default=None, help="single tablet line")
    verify.add_argument("--all", action="store_true", help="all lines (the default)")
    verify.add_argument("--strict", action="store_true",
                        help="exit 3 on any unexpected outcome")
    _add_common(verify)
    verify.set_defaults(func=_cmd_verify)

    approx = subs.add_parser("approx", help="root-approximation machinery")
    approx.add_argument("what", choices=("heron", "surd", "contexts"))
    approx.add_argument("values", nargs="*",
                        help="heron: N X0 STEPS; surd: A B {+,-}")
    _add_common(approx, precision=False)
    approx.set_defaults(func=_cmd_approx)

    tables = subs.add_parser("tables", help="reproduce the published tables")
    tables.add_argument("number", type=int, choices=(1, 2, 3))
    tables.add_argument("--candidates-file", default=None,
                        help='JSON {"sqrt3": [...], "sqrt21": [...]} for table 3')
    tables.add_argument("--top", type=int, default=None,
                        help="show only the best N table-3 rows")
    _add_common(tables, precision=False)
    tables.set_defaults(func=_cmd_tables)

    rend = subs.add_parser("render", help="draw a construction as SVG")
    group = rend.add_mutually_exclusive_group()
    group.add_argument("--figure", choices=sorted(supported_figures()))
    group.add_argument("--construction", dest="construction", default=None,
                       choices=sorted(_FAMILY_NAMES),
                       help="render a parameterized construction")
    rend.add_argument("--arcs", type=int, default=None)
    rend.add_argument("--arc-length", default=None)
    rend.add_argument("--radius", default=None)
    rend.add_argument("--size", default="600x600", help="canvas WIDTHxHEIGHT")
    rend.add_argument("--guides", action="store_true", help="draw auxiliary geometry")
    rend.add_argument("--stroke", default="#27241d")
    rend.add_argument("--fill", default="#dec98f")
    rend.add_argument("-o", "--output", default=None, help="write to a file")
    rend.set_defaults(func=_cmd_render, json=False)

    convert = subs.add_parser("convert", help="sexagesimal <-> rational")
    convert.add_argument("value", help='e.g. "0;13,20" or "2713/592"')
    convert.add_argument("--mode", dest="round_mode", choices=("truncate", "round"),
                         default="truncate")
    _add_common(convert, precision=False)
    convert.set_defaults(func=_cmd_convert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        return args.func(args)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    except SusaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
