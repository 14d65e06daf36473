"""Exact rationals, sexagesimal numerals, and fixed-precision real evaluation.

Every tablet constant handled by this package is a base-60 numeral with a
fixed radix point, written the way transliterations print them: a semicolon
between the units digit and the first fractional digit, commas between
digits ("0;16,26,46,40").  Numerals convert losslessly to and from
``fractions.Fraction``, which carries all exact arithmetic.  Irrational
quantities are evaluated in a :class:`RealField`, a thin wrapper around an
independent mpmath context with an explicit decimal working precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath.ctx_mp import MPContext

from .errors import ParseError

#: Exact arbitrary-precision signed fraction, always stored reduced with a
#: positive denominator.  The stdlib type satisfies every invariant needed
#: here, so it is used directly rather than wrapped.
Rational = Fraction

_ASCII_DIGITS = frozenset("0123456789")
_MAX_PLACES = 64


def is_regular(q: Fraction) -> bool:
    """True iff ``q`` has a finite sexagesimal expansion.

    That is the case exactly when the reduced denominator factors entirely
    into 2, 3 and 5 (a "regular number" in the Old Babylonian sense).
    """
    d = q.denominator
    for p in (2, 3, 5):
        while d % p == 0:
            d //= p
    return d == 1


def expansion_places(q: Fraction) -> int | None:
    """Number of fractional digits of the exact expansion, None if infinite."""
    if not is_regular(q):
        return None
    d = q.denominator
    places = 0
    while d != 1:
        g = _gcd60(d)
        d //= g
        places += 1
    return places


def _gcd60(d: int) -> int:
    g = 1
    for p in (2, 2, 3, 5):  # 60 = 2*2*3*5
        if d % (g * p) == 0:
            g *= p
    return g


@dataclass(frozen=True)
class Sexagesimal:
    """A base-60 numeral with a fixed radix point.

    ``sign`` is +1 or -1 and applies to the whole numeral.  ``integer`` and
    ``fraction`` hold digits 0..59, most significant first.  Instances must
    be canonical: no leading zero digit in the integer part (except a lone
    0), no trailing zero digits in the fraction, and zero is positive.  Use
    :meth:`of` to build from possibly non-canonical digit lists.
    """

    sign: int = 1
    integer: tuple[int, ...] = (0,)
    fraction: tuple[int, ...] = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if not self.integer:
            raise ValueError("integer part needs at least one digit")
        for d in (*self.integer, *self.fraction):
            if not isinstance(d, int) or not 0 <= d <= 59:
                raise ValueError(f"digit out of range 0..59: {d!r}")
        if len(self.integer) > 1 and self.integer[0] == 0:
            raise ValueError("leading zero digit in integer part")
        if self.fraction and self.fraction[-1] == 0:
            raise ValueError("trailing zero digit in fraction part")
        if self.sign == -1 and self.is_zero():
            raise ValueError("zero is stored with positive sign")

    @classmethod
    def of(cls, sign: int, integer, fraction=()) -> "Sexagesimal":
        """Canonicalizing constructor: strips redundant zeros, fixes -0."""
        ints = list(integer)
        frac = list(fraction)
        while len(ints) > 1 and ints[0] == 0:
            del ints[0]
        while frac and frac[-1] == 0:
            frac.pop()
        if not ints:
            ints = [0]
        if not frac and all(d == 0 for d in ints):
            return cls(1, (0,), ())
        return cls(sign, tuple(ints), tuple(frac))

    def is_zero(self) -> bool:
        return all(d == 0 for d in self.integer) and not self.fraction

    def to_fraction(self) -> Fraction:
        n = 0
        for d in self.integer:
            n = n * 60 + d
        f = 0
        for d in self.fraction:
            f = f * 60 + d
        value = Fraction(n) + Fraction(f, 60 ** len(self.fraction))
        return self.sign * value

    def __str__(self) -> str:
        text = ",".join(str(d) for d in self.integer)
        if self.fraction:
            text += ";" + ",".join(str(d) for d in self.fraction)
        return ("-" if self.sign < 0 else "") + text

    def to_json(self) -> dict:
        return {
            "sign": "-" if self.sign < 0 else "+",
            "int": list(self.integer),
            "frac": list(self.fraction),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Sexagesimal":
        sign = {"+": 1, "-": -1}.get(obj.get("sign", "+"))
        if sign is None:
            raise ValueError(f"bad sign field: {obj.get('sign')!r}")
        return cls.of(sign, obj.get("int", [0]), obj.get("frac", []))


def parse_sexagesimal(text: str) -> Sexagesimal:
    """Parse tablet notation like ``"4;34,57,58,22,42"``.

    Grammar: ``[-]?d(,d)*(;d(,d)*)?`` with each ``d`` a decimal integer in
    0..59.  Digits are read exactly as written, then canonicalized (trailing
    fractional zeros dropped, leading integer zeros collapsed).  Raises
    :class:`ParseError` carrying the character position of the fault.
    """
    if text == "":
        raise ParseError("empty input", 0)
    pos = 0
    sign = 1
    if text[0] == "-":
        sign = -1
        pos = 1
    integer, pos = _parse_digit_group(text, pos)
    fraction: list[int] = []
    if pos < len(text) and text[pos] == ";":
        fraction, pos = _parse_digit_group(text, pos + 1)
    if pos != len(text):
        raise ParseError(f"unexpected character {text[pos]!r}", pos)
    return Sexagesimal.of(sign, integer, fraction)


def _parse_digit_group(text: str, pos: int) -> tuple[list[int], int]:
    digits = []
    while True:
        start = pos
        while pos < len(text) and text[pos] in _ASCII_DIGITS:
            pos += 1
        if pos == start:
            raise ParseError("expected a base-60 digit", start)
        value = int(text[start:pos])
        if value > 59:
            raise ParseError(f"digit {value} out of range 0..59", start)
        digits.append(value)
        if pos < len(text) and text[pos] == ",":
            pos += 1
        else:
            return digits, pos


def sexagesimal_to_rational(s: Sexagesimal) -> Fraction:
    """Exact value of a numeral as a reduced fraction."""
    return s.to_fraction()


def rational_to_sexagesimal(
    q: Fraction, places: int = 5, mode: str = "truncate"
) -> Sexagesimal:
    """Render ``q`` with at most ``places`` fractional digits.

    ``truncate`` keeps the largest representable magnitude not exceeding
    ``|q|`` (so the result is sign-symmetric); ``round`` rounds the last
    kept digit half away from zero.  Values whose exact expansion is
    shorter than ``places`` come back exact, with trailing zeros dropped.
    """
    if not isinstance(places, int) or not 0 <= places <= _MAX_PLACES:
        raise ValueError(f"places must be an integer in 0..{_MAX_PLACES}")
    if mode not in ("truncate", "round"):
        raise ValueError(f"mode must be 'truncate' or 'round', got {mode!r}")
    sign = -1 if q < 0 else 1
    scaled = abs(q) * 60**places
    if mode == "truncate":
        n = scaled.numerator // scaled.denominator
    else:
        n = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
    return _from_scaled_int(sign, n, places)


def _from_scaled_int(sign: int, n: int, places: int) -> Sexagesimal:
    """Build a numeral from ``n`` = value * 60**places (n >= 0)."""
    ipart, fpart = divmod(n, 60**places)
    frac = []
    for _ in range(places):
        fpart, d = divmod(fpart, 60)
        frac.append(d)
    frac.reverse()
    ints = []
    while ipart:
        ipart, d = divmod(ipart, 60)
        ints.append(d)
    ints.reverse()
    return Sexagesimal.of(sign, ints or [0], frac)


def format_rational(q: Fraction) -> str:
    """Render as ``"num/den"`` (always with the denominator, e.g. ``"3/1"``)."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or a plain integer string."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r} ({exc})") from None


def rational_to_json(q: Fraction) -> dict:
    """Decimal-string encoding, safe for arbitrarily wide integers."""
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


class RealField:
    """Real arithmetic at a fixed decimal working precision.

    Wraps a private mpmath context so the precision is part of the
    evaluation request and never global mutable state.  For the expression
    depths used in this package results are good to at least ``digits - 5``
    significant digits.
    """

    def __init__(self, digits: int = 30):
        if not isinstance(digits, int) or digits < 5:
            raise ValueError("precision must be an integer >= 5 decimal digits")
        self.digits = digits
        ctx = MPContext()
        ctx.dps = digits
        self._ctx = ctx

    def __repr__(self) -> str:
        return f"RealField(digits={self.digits})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RealField) and other.digits == self.digits

    def __hash__(self) -> int:
        return hash((RealField, self.digits))

    # -- constructors -------------------------------------------------
    def rational(self, q):
        q = Fraction(q)
        return self._ctx.mpf(q.numerator) / self._ctx.mpf(q.denominator)

    def number(self, x):
        """Coerce an int, Fraction, or already-evaluated real into this field."""
        if isinstance(x, (int, Fraction)):
            return self.rational(x)
        return self._ctx.mpf(x)

    @property
    def pi(self):
        return +self._ctx.pi

    # -- elementary functions -----------------------------------------
    def sqrt(self, x):
        return self._ctx.sqrt(x)

    def sin(self, x):
        return self._ctx.sin(x)

    def cos(self, x):
        return self._ctx.cos(x)

    def cot(self, x):
        return self._ctx.cos(x) / self._ctx.sin(x)

    def asin(self, x):
        return self._ctx.asin(x)

    # -- rendering -----------------------------------------------------
    def decimal(self, x) -> str:
        """Decimal string with the field's full number of digits."""
        return self._ctx.nstr(self._ctx.mpf(x), self.digits)

    def sexagesimal(self, x, places: int) -> Sexagesimal:
        """Truncate a real value to ``places`` base-60 fractional digits."""
        if not 0 <= places <= _MAX_PLACES:
            raise ValueError(f"places must be in 0..{_MAX_PLACES}")
        ctx = self._ctx
        xv = ctx.mpf(x)
        sign = -1 if xv < 0 else 1
        n = int(ctx.floor(abs(xv) * 60**places))
        return _from_scaled_int(sign, n, places)
