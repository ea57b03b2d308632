"""Exact scalars: arbitrary-precision rationals and projective signed ratios.

``Rational`` is the scalar domain for every signed length and signed area in
the library; it is :class:`fractions.Fraction`, which already guarantees the
canonical form we need (reduced, positive denominator, zero stored as 0/1).

``ProjRatio`` stores a signed ratio of collinear segment lengths as a
projective pair ``(p : q)``.  Keeping the pair instead of an extended real
lets every criterion and area formula be evaluated by clearing denominators,
with no special-case infinity arithmetic:

* ``(0 : 1)`` is the ratio 0 (the dividing point sits on the near endpoint);
* ``(1 : 0)`` is the infinite ratio (it sits on the far endpoint);
* ``(-1 : 1)`` is the ratio of the point at infinity on the carrier line.

There are deliberately no floating-point entry points; text in the fraction
grammar is the only lossless exchange format.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import _kernel

Rational = Fraction


class InvalidRatioError(ValueError):
    """Raised for the empty projective pair (0 : 0)."""


class RatioSyntaxError(ValueError):
    """Raised for text outside the ratio grammar."""


@dataclass(frozen=True)
class ProjRatio:
    """A signed segment ratio as a canonical projective pair (p : q).

    Canonical form: gcd(|p|, |q|) = 1 with q > 0, or exactly (1, 0) for the
    infinite ratio.  Equality and hashing are structural, so two equal
    ratios always compare equal.
    """

    p: int
    q: int = 1

    def __post_init__(self):
        p, q = _kernel.norm_pair(self.p, self.q)
        if p == 0 and q == 0:
            raise InvalidRatioError("ratio (0 : 0) is undefined")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def from_fraction(cls, value: Rational | int) -> "ProjRatio":
        f = Fraction(value)
        return cls(f.numerator, f.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def to_fraction(self) -> Rational:
        if self.q == 0:
            raise InvalidRatioError("infinite ratio has no finite value")
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return format_ratio(self)


ZERO = ProjRatio(0, 1)
INFINITY = ProjRatio(1, 0)
MINUS_ONE = ProjRatio(-1, 1)

_RATIO_RE = re.compile(r"^(-?\d+)(?:/(-?\d+))?$")


def classify(r: ProjRatio) -> Rational | None:
    """Finite value of ``r`` as a Rational, or None for the infinite ratio."""
    if r.q == 0:
        return None
    return Fraction(r.p, r.q)


def parse_ratio(text: str) -> ProjRatio:
    """Parse the exchange grammar: integer, integer/integer, "inf" or "-inf".

    "inf" and "-inf" both name the single infinite ratio (1 : 0).  "0/0" is
    rejected as an invalid ratio; anything else outside the grammar is a
    syntax error.  Negative denominators are not part of the grammar.
    """
    if text in ("inf", "-inf"):
        return INFINITY
    m = _RATIO_RE.match(text)
    if not m:
        raise RatioSyntaxError(f"not a ratio: {text!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    if q < 0:
        raise RatioSyntaxError(f"negative denominator in ratio: {text!r}")
    return ProjRatio(p, q)


def format_ratio(r: ProjRatio) -> str:
    """Render a ratio in the exchange grammar (parse_ratio round-trips it)."""
    if r.q == 0:
        return "inf"
    if r.q == 1:
        return str(r.p)
    return f"{r.p}/{r.q}"


def as_ratio(value) -> ProjRatio:
    """Coerce an int, Fraction, str, (p, q) pair, or ProjRatio to ProjRatio."""
    if isinstance(value, ProjRatio):
        return value
    if isinstance(value, str):
        return parse_ratio(value)
    if isinstance(value, tuple):
        return ProjRatio(*value)
    if isinstance(value, (int, Fraction)):
        return ProjRatio.from_fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a ratio")


def parse_rational(text: str) -> Rational:
    """Parse an exact fraction (integer or integer/positive-integer).

    Used for coordinates; decimal or exponent notation is rejected so no
    float ever sneaks into the exact core.
    """
    m = _RATIO_RE.match(text)
    if not m:
        raise RatioSyntaxError(f"not an exact fraction: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den <= 0:
        raise RatioSyntaxError(f"denominator must be positive: {text!r}")
    return Fraction(num, den)


def format_rational(value: Rational) -> str:
    """Render a Rational as "n" or "n/d" (matches parse_rational)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
