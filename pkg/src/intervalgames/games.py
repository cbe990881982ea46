"""Classical and interval cooperative games over a fixed player set.

Players carry labels 1..n.  A coalition is an ``int`` bitmask in which bit
i-1 stands for player i, so the empty coalition is 0 and the grand
coalition is ``(1 << n) - 1``.  Characteristic functions are stored densely
as a tuple of length ``2**n`` indexed by mask, which keeps every check a
flat array scan.
"""

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from .errors import GameFormatError
from .numerics import Interval, ZERO_INTERVAL, format_scalar, parse_interval, parse_scalar

Coalition = int

MAX_PLAYERS = 16

FAMILY_KINDS = ("sel-superadditive", "interval-superadditive", "sel-convex")


def coalition(players: Iterable[int]) -> int:
    """Bitmask for an iterable of 1-based player labels."""
    mask = 0
    for p in players:
        if not isinstance(p, int) or isinstance(p, bool) or not 1 <= p <= MAX_PLAYERS:
            raise ValueError(f"invalid player label: {p!r}")
        mask |= 1 << (p - 1)
    return mask


def members(mask: int) -> tuple[int, ...]:
    """Sorted 1-based player labels of a coalition mask."""
    if mask < 0:
        raise ValueError(f"invalid coalition mask: {mask}")
    return tuple(i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1)


def grand_coalition(n: int) -> int:
    return (1 << n) - 1


def _check_n(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_PLAYERS:
        raise ValueError(f"player count must be between 1 and {MAX_PLAYERS}, got {n!r}")


def _as_mask(s, n: int) -> int:
    if isinstance(s, int) and not isinstance(s, bool):
        mask = s
    else:
        mask = coalition(s)
    if not 0 <= mask < (1 << n):
        raise ValueError(f"coalition {s!r} is not a subset of the {n}-player grand coalition")
    return mask


@dataclass(frozen=True, repr=False)
class ClassicalGame:
    """Characteristic function with one exact rational worth per coalition."""

    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        _check_n(self.n)
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} worths, got {len(vals)}")
        if vals[0] != 0:
            raise ValueError("the empty coalition must be worth 0")
        object.__setattr__(self, "values", vals)

    def __repr__(self):
        return f"ClassicalGame(n={self.n})"

    def worth(self, s) -> Fraction:
        """Worth of a coalition given as a mask or an iterable of players."""
        return self.values[_as_mask(s, self.n)]

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int], object]) -> "ClassicalGame":
        _check_n(n)
        return cls(n, tuple(Fraction(fn(m)) if m else Fraction(0) for m in range(1 << n)))

    @classmethod
    def from_map(cls, n: int, worth: Mapping) -> "ClassicalGame":
        """Build from a map keyed by player iterables; all nonempty coalitions required."""
        _check_n(n)
        values: list = [None] * (1 << n)
        values[0] = Fraction(0)
        for key, val in worth.items():
            mask = _as_mask(key, n)
            if mask == 0:
                if Fraction(val) != 0:
                    raise ValueError("the empty coalition must be worth 0")
                continue
            if values[mask] is not None:
                raise ValueError(f"coalition {members(mask)} given twice")
            values[mask] = Fraction(val)
        for m in range(1, 1 << n):
            if values[m] is None:
                raise ValueError(f"missing worth for coalition {members(m)}")
        return cls(n, tuple(values))


def _as_interval(value) -> Interval:
    if isinstance(value, Interval):
        return value
    if isinstance(value, (tuple, list)) and len(value) == 2:
        return Interval(value[0], value[1])
    return Interval(value)


@dataclass(frozen=True, repr=False)
class IntervalGame:
    """Characteristic function assigning each coalition a rational interval."""

    n: int
    values: tuple[Interval, ...]

    def __post_init__(self):
        _check_n(self.n)
        vals = tuple(_as_interval(v) for v in self.values)
        if len(vals) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} worth intervals, got {len(vals)}")
        if vals[0] != ZERO_INTERVAL:
            raise ValueError("the empty coalition must be worth [0, 0]")
        object.__setattr__(self, "values", vals)

    def __repr__(self):
        return f"IntervalGame(n={self.n})"

    def worth(self, s) -> Interval:
        return self.values[_as_mask(s, self.n)]

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int], object]) -> "IntervalGame":
        _check_n(n)
        return cls(n, tuple(_as_interval(fn(m)) if m else ZERO_INTERVAL for m in range(1 << n)))

    @classmethod
    def from_map(cls, n: int, worth: Mapping) -> "IntervalGame":
        """Build from a map keyed by player iterables; all nonempty coalitions required."""
        _check_n(n)
        values: list = [None] * (1 << n)
        values[0] = ZERO_INTERVAL
        for key, val in worth.items():
            mask = _as_mask(key, n)
            if mask == 0:
                if _as_interval(val) != ZERO_INTERVAL:
                    raise ValueError("the empty coalition must be worth [0, 0]")
                continue
            if values[mask] is not None:
                raise ValueError(f"coalition {members(mask)} given twice")
            values[mask] = _as_interval(val)
        for m in range(1, 1 << n):
            if values[m] is None:
                raise ValueError(f"missing worth for coalition {members(m)}")
        return cls(n, tuple(values))


def border_games(w: IntervalGame) -> tuple[ClassicalGame, ClassicalGame]:
    """The lower and upper border games of an interval game."""
    lower = ClassicalGame(w.n, tuple(iv.lower for iv in w.values))
    upper = ClassicalGame(w.n, tuple(iv.upper for iv in w.values))
    return lower, upper


def length_game(w: IntervalGame) -> ClassicalGame:
    """Pointwise interval widths as a classical game."""
    return ClassicalGame(w.n, tuple(iv.width for iv in w.values))


def is_selection(v: ClassicalGame, w: IntervalGame) -> bool:
    """Whether v picks a worth inside w's interval for every coalition."""
    if v.n != w.n:
        raise ValueError(f"player counts differ: {v.n} vs {w.n}")
    return all(v.values[m] in w.values[m] for m in range(1 << w.n))


def embed_classical(v: ClassicalGame) -> IntervalGame:
    """Degenerate interval game whose only selection is v."""
    return IntervalGame(v.n, tuple(Interval(x) for x in v.values))


def to_classical(w: IntervalGame) -> ClassicalGame:
    """Collapse a fully degenerate interval game to its unique selection."""
    for m in range(1 << w.n):
        if not w.values[m].degenerate:
            raise ValueError(f"coalition {members(m)} has a nondegenerate worth {w.values[m]}")
    return ClassicalGame(w.n, tuple(iv.lower for iv in w.values))


def truncate_grand(w: IntervalGame) -> IntervalGame:
    """Replace the grand coalition's worth by its degenerate lower endpoint."""
    grand = grand_coalition(w.n)
    vals = list(w.values)
    vals[grand] = Interval(vals[grand].lower)
    return IntervalGame(w.n, tuple(vals))


def family(kind: str, n: int) -> IntervalGame:
    """Named game families used as separating examples between game classes.

    ``sel-superadditive``       w(S) = [2|S| - 2, 2|S| - 1]
    ``interval-superadditive``  w(S) = [0, |S|]
    ``sel-convex``              w(S) = [2**|S| - 2, 2**|S| - 1]

    each for nonempty S, with w(empty) = [0, 0]; requires n >= 2.
    """
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family kind {kind!r}; expected one of {FAMILY_KINDS}")
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"family games need at least 2 players, got {n!r}")
    _check_n(n)
    if kind == "sel-superadditive":
        fn = lambda m: Interval(2 * m.bit_count() - 2, 2 * m.bit_count() - 1)
    elif kind == "interval-superadditive":
        fn = lambda m: Interval(0, m.bit_count())
    else:
        fn = lambda m: Interval(2 ** m.bit_count() - 2, 2 ** m.bit_count() - 1)
    return IntervalGame.from_function(n, fn)


def parse_game(text: str) -> IntervalGame:
    """Parse the line-oriented game format.

    The first significant line is ``players <n>``; every following line is
    ``<i,j,k> <worth>`` with comma-separated 1-based players and the worth
    written as ``[lo, hi]`` or as a bare rational (meaning a degenerate
    interval).  ``#`` starts a comment, blank lines are skipped, the empty
    coalition is implied as [0, 0], and every nonempty coalition must
    appear exactly once.
    """
    n = None
    values: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "players":
                raise GameFormatError(f"line {lineno}: expected 'players <n>' header, got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise GameFormatError(f"line {lineno}: invalid player count {parts[1]!r}") from None
            if not 1 <= n <= MAX_PLAYERS:
                raise GameFormatError(
                    f"line {lineno}: player count must be between 1 and {MAX_PLAYERS}, got {n}"
                )
            values = [None] * (1 << n)
            values[0] = ZERO_INTERVAL
            continue
        if line.startswith("players"):
            raise GameFormatError(f"line {lineno}: duplicate 'players' header")
        parts = line.split(None, 1)
        if len(parts) != 2:
            raise GameFormatError(f"line {lineno}: expected '<coalition> <worth>', got {line!r}")
        mask = _parse_coalition_token(parts[0], n, lineno)
        worth_text = parts[1].strip()
        try:
            if worth_text.startswith("["):
                iv = parse_interval(worth_text)
            else:
                iv = Interval(parse_scalar(worth_text))
        except ValueError as exc:
            raise GameFormatError(f"line {lineno}: {exc}") from None
        if values[mask] is not None:
            raise GameFormatError(f"line {lineno}: coalition {parts[0]} given twice")
        values[mask] = iv
    if n is None:
        raise GameFormatError("empty input: missing 'players <n>' header")
    for m in range(1, 1 << n):
        if values[m] is None:
            missing = ",".join(str(p) for p in members(m))
            raise GameFormatError(f"missing worth for coalition {missing}")
    return IntervalGame(n, tuple(values))


def _parse_coalition_token(token: str, n: int, lineno: int) -> int:
    labels = []
    for piece in token.split(","):
        try:
            labels.append(int(piece))
        except ValueError:
            raise GameFormatError(f"line {lineno}: invalid player label {piece!r}") from None
    if not labels:
        raise GameFormatError(f"line {lineno}: empty coalition")
    try:
        mask = coalition(labels)
    except ValueError as exc:
        raise GameFormatError(f"line {lineno}: {exc}") from None
    if mask >= 1 << n:
        raise GameFormatError(f"line {lineno}: coalition {token} mentions a player beyond {n}")
    if len(set(labels)) != len(labels):
        raise GameFormatError(f"line {lineno}: coalition {token} repeats a player")
    return mask


def format_game(w: IntervalGame) -> str:
    """Canonical text for an interval game: header plus one line per coalition
    in bitmask order.  ``parse_game(format_game(w))`` reproduces w."""
    lines = [f"players {w.n}"]
    for m in range(1, 1 << w.n):
        label = ",".join(str(p) for p in members(m))
        iv = w.values[m]
        lines.append(f"{label} [{format_scalar(iv.lower)}, {format_scalar(iv.upper)}]")
    return "\n".join(lines) + "\n"
