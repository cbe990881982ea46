"""Exact rational scalars and closed intervals with rational endpoints.

Scalars are plain ``fractions.Fraction`` values, so every comparison and
arithmetic step is exact.  Intervals are immutable ``[lower, upper]`` pairs
of scalars, compared with the componentwise "weakly better" relation.
"""

import re
from fractions import Fraction

Scalar = Fraction

_SCALAR_RE = re.compile(r"[+-]?[0-9]+(?:\s*/\s*[0-9]+)?\Z")
_INTERVAL_RE = re.compile(r"\[([^,\[\]]+),([^,\[\]]+)\]\Z")


def parse_scalar(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (integers, q positive) into an exact rational."""
    token = text.strip()
    if not _SCALAR_RE.match(token):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Fraction(token.replace(" ", ""))
    except ZeroDivisionError:
        raise ValueError(f"zero denominator: {text!r}") from None


def format_scalar(value) -> str:
    """Canonical text for a rational: lowest terms, ``p`` or ``p/q``."""
    return str(Fraction(value))


class Interval:
    """Closed interval of rationals; degenerate when both endpoints agree.

    Endpoints accept anything ``Fraction`` accepts (ints, strings, other
    Fractions).  A single argument builds the degenerate interval.
    """

    __slots__ = ("lower", "upper")

    lower: Fraction
    upper: Fraction

    def __init__(self, lower, upper=None):
        lo = Fraction(lower)
        hi = lo if upper is None else Fraction(upper)
        if lo > hi:
            raise ValueError(f"invalid interval: lower {lo} exceeds upper {hi}")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    def __setattr__(self, name, value):
        raise AttributeError("Interval is immutable")

    def __eq__(self, other):
        if isinstance(other, Interval):
            return self.lower == other.lower and self.upper == other.upper
        return NotImplemented

    def __hash__(self):
        return hash((self.lower, self.upper))

    def __repr__(self):
        return f"Interval('{self.lower}', '{self.upper}')"

    def __str__(self):
        return format_interval(self)

    @property
    def degenerate(self) -> bool:
        return self.lower == self.upper

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def __contains__(self, item) -> bool:
        """Scalar membership, or subset containment for an interval item."""
        if isinstance(item, Interval):
            return self.lower <= item.lower and item.upper <= self.upper
        value = Fraction(item)
        return self.lower <= value <= self.upper

    def __add__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        return Interval(self.lower + other.lower, self.upper + other.upper)

    def __neg__(self):
        return Interval(-self.upper, -self.lower)

    def __sub__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        # [a,b] - [c,d] = [a,b] + [-d,-c]
        return Interval(self.lower - other.upper, self.upper - other.lower)

    def __mul__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        products = (
            self.lower * other.lower,
            self.lower * other.upper,
            self.upper * other.lower,
            self.upper * other.upper,
        )
        return Interval(min(products), max(products))

    def __truediv__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        if other.lower <= 0 <= other.upper:
            raise ValueError(f"division by an interval containing zero: {other}")
        quotients = (
            self.lower / other.lower,
            self.lower / other.upper,
            self.upper / other.lower,
            self.upper / other.upper,
        )
        return Interval(min(quotients), max(quotients))


ZERO_INTERVAL = Interval(0)


def weakly_better(x: Interval, y: Interval) -> bool:
    """Componentwise at-least-as-good: both endpoints of x dominate y's."""
    return x.lower >= y.lower and x.upper >= y.upper


def strictly_better(x: Interval, y: Interval) -> bool:
    """Weakly better and not equal."""
    return weakly_better(x, y) and x != y


def parse_interval(text: str) -> Interval:
    """Parse ``[p, q]`` with rational endpoints."""
    match = _INTERVAL_RE.match(text.strip())
    if not match:
        raise ValueError(f"not an interval literal: {text!r}")
    return Interval(parse_scalar(match.group(1)), parse_scalar(match.group(2)))


def format_interval(value: Interval) -> str:
    return f"[{value.lower}, {value.upper}]"
