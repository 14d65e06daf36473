"""Babylonian approximation machinery.

Square roots were handled by scribes with two interchangeable tools: the
iteration x -> (x + N/x)/2 starting from a guessed seed, and the linear
rule sqrt(a^2 +- b) ~ a +- b/(2a) (one iteration step in disguise).
Quadratics of the form x^2 + p x = q were solved by completing the square,
the step called takiltum in Akkadian.  Everything here works on exact
fractions; surrogate values for the irrational constants live in
:class:`ApproximationContext` maps and are substituted explicitly, never
silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import MissingSurrogateError
from .numerics import RealField, format_rational, parse_rational


class Irrational(Enum):
    """The irrational constants that occur in the tablet's figures."""

    PI = "PI"
    SQRT2 = "SQRT2"
    SQRT3 = "SQRT3"
    SQRT6 = "SQRT6"
    SQRT7 = "SQRT7"
    SQRT14 = "SQRT14"
    SQRT21 = "SQRT21"

    @property
    def radicand(self) -> int | None:
        """The integer under the root, or None for PI."""
        return None if self is Irrational.PI else int(self.value[4:])

    def evaluate(self, field: RealField):
        if self is Irrational.PI:
            return field.pi
        return field.sqrt(self.radicand)


_SYMBOL_BY_RADICAND = {
    sym.radicand: sym for sym in Irrational if sym is not Irrational.PI
}


class ApproximationContext:
    """A finite map from irrational symbols to positive rational surrogates.

    Lookup of an absent symbol raises :class:`MissingSurrogateError`; there
    is deliberately no fallback, so a verification run can never mix exact
    and surrogate values by accident.
    """

    def __init__(self, name: str, surrogates):
        entries: dict[Irrational, Fraction] = {}
        for symbol, value in dict(surrogates).items():
            if not isinstance(symbol, Irrational):
                symbol = Irrational(str(symbol))
            value = Fraction(value)
            if value <= 0:
                raise ValueError(f"surrogate for {symbol.value} must be positive")
            entries[symbol] = value
        self.name = name
        self._surrogates = entries

    def __getitem__(self, symbol: Irrational) -> Fraction:
        try:
            return self._surrogates[symbol]
        except KeyError:
            raise MissingSurrogateError(
                f"context {self.name!r} defines no surrogate for {symbol.value}"
            ) from None

    def __contains__(self, symbol: Irrational) -> bool:
        return symbol in self._surrogates

    def items(self):
        return tuple(sorted(self._surrogates.items(), key=lambda kv: kv[0].value))

    def extend(self, symbol: Irrational, value, name: str | None = None):
        """A new context with one surrogate added or replaced."""
        entries = dict(self._surrogates)
        entries[symbol] = Fraction(value)
        return ApproximationContext(name or self.name, entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ApproximationContext)
            and other._surrogates == self._surrogates
        )

    def __repr__(self) -> str:
        inner = ", ".join(f"{s.value}={v}" for s, v in self.items())
        return f"ApproximationContext({self.name!r}, {inner})"

    def to_json(self) -> dict:
        return {sym.value: format_rational(val) for sym, val in self.items()}

    @classmethod
    def from_json(cls, obj: dict, name: str = "custom") -> "ApproximationContext":
        return cls(name, {Irrational(k): parse_rational(v) for k, v in obj.items()})


#: pi -> 3, sqrt(2) -> 17/12, sqrt(3) -> 7/4: the values scribes reached for first.
STANDARD = ApproximationContext(
    "standard",
    {Irrational.PI: 3, Irrational.SQRT2: Fraction(17, 12), Irrational.SQRT3: Fraction(7, 4)},
)

#: Same, but with the rarer sqrt(3) -> 26/15 that line 5 of the tablet implies.
ALT_SQRT3 = ApproximationContext(
    "alt-sqrt3",
    {Irrational.PI: 3, Irrational.SQRT2: Fraction(17, 12), Irrational.SQRT3: Fraction(26, 15)},
)


def context_presets() -> dict[str, ApproximationContext]:
    """The named contexts the tablet verification uses."""
    return {"standard": STANDARD, "alt-sqrt3": ALT_SQRT3}


@dataclass(frozen=True)
class HeronTrace:
    """A root-approximation run: radicand, seed, and all iterates (seed first)."""

    radicand: Fraction
    seed: Fraction
    iterates: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.iterates or self.iterates[0] != self.seed:
            raise ValueError("iterates must start with the seed")


def heron_sequence(radicand, seed, steps: int) -> HeronTrace:
    """Iterate x -> (x + N/x)/2 exactly, keeping every value as a fraction.

    The published root tables are only reproducible this way: decimal
    rounding between steps would lose fractions like 14720113/3212192.
    """
    n = Fraction(radicand)
    x = Fraction(seed)
    if n <= 0:
        raise ValueError(f"radicand must be positive, got {n}")
    if x <= 0:
        raise ValueError(f"seed must be positive, got {x}")
    if not isinstance(steps, int) or steps < 0:
        raise ValueError(f"steps must be a nonnegative integer, got {steps!r}")
    iterates = [x]
    for _ in range(steps):
        x = (x + n / x) / 2
        iterates.append(x)
    return HeronTrace(n, iterates[0], tuple(iterates))


def surd_linear_approx(a, b, sign: str = "+") -> Fraction:
    """The rule sqrt(a^2 +- b) ~ a +- b/(2a), evaluated exactly.

    With b > 0 and "+" the result always overestimates the root, since
    (a + b/2a)^2 = a^2 + b + (b/2a)^2.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a <= 0:
        raise ValueError(f"a must be positive, got {a}")
    if b < 0:
        raise ValueError(f"b must be nonnegative, got {b}")
    if sign == "+":
        return a + b / (2 * a)
    if sign == "-":
        if a * a - b < 0:
            raise ValueError(f"negative radicand: {a}^2 - {b} < 0")
        return a - b / (2 * a)
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


@dataclass(frozen=True)
class RootTerm:
    """``coefficient * sqrt(radicand)``: the shape quadratic coefficients take.

    A perfect-square radicand makes the term rational.  Otherwise the term
    can be resolved against an :class:`ApproximationContext` (if the
    radicand has a symbol) or evaluated numerically in a :class:`RealField`.
    """

    coefficient: Fraction
    radicand: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        object.__setattr__(self, "radicand", Fraction(self.radicand))
        if self.radicand < 0:
            raise ValueError("radicand must be nonnegative")

    def exact_rational(self) -> Fraction | None:
        """The exact value when the radicand is a perfect square, else None."""
        root = _rational_sqrt(self.radicand)
        if root is None:
            return None
        return self.coefficient * root

    def resolve(self, context: ApproximationContext) -> Fraction:
        """Substitute the context's surrogate for the root."""
        exact = self.exact_rational()
        if exact is not None:
            return exact
        symbol = _SYMBOL_BY_RADICAND.get(self.radicand)
        if symbol is None:
            raise MissingSurrogateError(
                f"no symbol for sqrt({self.radicand}); cannot resolve in a context"
            )
        return self.coefficient * context[symbol]

    def evaluate(self, field: RealField):
        return field.rational(self.coefficient) * field.sqrt(field.rational(self.radicand))


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _half_square(p) -> Fraction:
    """(p/2)^2, which is rational for both Fraction and RootTerm coefficients."""
    if isinstance(p, RootTerm):
        return p.coefficient * p.coefficient * p.radicand / 4
    return Fraction(p) ** 2 / 4


def solve_quadratic_takiltum(p, q, sqrt_eval):
    """Positive root of ``x^2 + p x = q`` by completing the square.

    ``p`` and ``q`` may be fractions or :class:`RootTerm` values.  The root
    of the completed square, sqrt(q + (p/2)^2), is extracted according to
    ``sqrt_eval``:

    * a :class:`RealField`: evaluate at that precision.  When everything
      involved is rational the result is returned as an exact fraction;
    * a :class:`~fractions.Fraction` (or int): use it as the supplied
      surrogate for the root and stay in exact rational arithmetic, which
      requires ``p`` to be rational as well.

    The returned root ``sqrt(q + (p/2)^2) - p/2`` is the nonnegative
    solution, matching the geometric use where x is a length.
    """
    half_sq = _half_square(p)
    disc = None
    if not isinstance(q, RootTerm):
        disc = Fraction(q) + half_sq
        if disc < 0:
            raise ValueError(f"negative discriminant: q + (p/2)^2 = {disc}")

    if isinstance(sqrt_eval, (Fraction, int)):
        root = Fraction(sqrt_eval)
        p_exact = _exact_rational_or_none(p)
        if p_exact is None:
            raise TypeError(
                "a rational root surrogate needs rational coefficients; "
                "resolve symbolic terms against a context first"
            )
        return root - p_exact / 2

    field = sqrt_eval
    if not isinstance(field, RealField):
        raise TypeError(f"sqrt_eval must be a RealField or a Fraction, got {field!r}")
    if disc is not None:
        exact_root = _rational_sqrt(disc)
        p_exact = _exact_rational_or_none(p)
        if exact_root is not None and p_exact is not None:
            return exact_root - p_exact / 2
        root_value = field.sqrt(field.rational(disc))
    else:
        disc_value = q.evaluate(field) + field.rational(half_sq)
        if disc_value < 0:
            raise ValueError("negative discriminant")
        root_value = field.sqrt(disc_value)
    half_p = (
        p.evaluate(field) / 2 if isinstance(p, RootTerm) else field.rational(Fraction(p) / 2)
    )
    return root_value - half_p


def _exact_rational_or_none(p) -> Fraction | None:
    if isinstance(p, RootTerm):
        return p.exact_rational()
    return Fraction(p)
