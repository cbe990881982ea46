"""Solution concepts for classical and interval games.

Classical side: imputations, core membership, core nonemptiness (decided by
exact linear feasibility).  Interval side, three competing readings of
"solution" coexist and all are implemented:

* selection-based point solutions: a payoff vector counts when some
  selection of the interval game accepts it (selection imputations and the
  selection core SC).  Both have closed forms because a selection is free
  to pick each coalition's worth independently: the best case for a fixed
  vector is every proper coalition at its lower endpoint and the grand
  coalition at the vector's own total.  The closed forms are validated
  against endpoint-enumeration oracles in the test suite.
* interval-valued payoffs: vectors of intervals compared with the
  weakly-better order (interval imputations, interval core).
* points generated by the interval core: x belongs when it can be fattened
  into an interval payoff vector lying in the interval core, i.e. when
  nonnegative slack vectors l, u exist with x - l efficient for the lower
  border game, x + u efficient for the upper one, and both shifted vectors
  coalition-rational for their respective borders.  The l-rows and u-rows
  share no variables, so feasibility splits into two independent systems;
  we solve the halves and re-verify the assembled witness against the
  joint system.

The coincidence question asks whether the generated set equals SC.  The
generated set is the projection of a polyhedron (the joint system with x
free) and hence convex, and it is always contained in SC, so equality
holds exactly when every vertex of the SC polytope is generated.  Vertices
are enumerated exactly and checked in lexicographic order; the first
failure is returned as the counterexample.

Strong concepts quantify universally instead: a strong imputation / strong
core member must be accepted by every selection.  Efficiency across all
selections forces a degenerate grand-coalition interval, after which the
worst case per coalition is its upper endpoint.
"""

from dataclasses import dataclass
from fractions import Fraction

from .classes import ORACLE_MAX_PLAYERS
from .errors import BudgetExceededError
from .games import (
    ClassicalGame,
    IntervalGame,
    _as_interval,
    border_games,
    grand_coalition,
)
from .lpcore import LinearSystem, enumerate_vertices, feasible, satisfies
from .numerics import Interval, Scalar, weakly_better


@dataclass(frozen=True)
class GeneratedCoreWitness:
    """Nonnegative slack pair certifying generated-core membership of a point.

    ``l`` is how far each payoff may sink and still cover the lower border
    game; ``u`` is how far it may rise to cover the upper one.  The interval
    vector ``[x_i - l_i, x_i + u_i]`` then lies in the interval core.
    """

    l: tuple[Scalar, ...]
    u: tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "l", tuple(Fraction(v) for v in self.l))
        object.__setattr__(self, "u", tuple(Fraction(v) for v in self.u))
        if len(self.l) != len(self.u):
            raise ValueError("slack vectors must have equal length")
        if any(v < 0 for v in self.l) or any(v < 0 for v in self.u):
            raise ValueError("slack vectors must be nonnegative")

    def interval_payoff(self, x) -> tuple[Interval, ...]:
        """The interval payoff vector this witness wraps around ``x``."""
        point = _payoff(x, len(self.l))
        return tuple(
            Interval(xi - li, xi + ui) for xi, li, ui in zip(point, self.l, self.u)
        )


@dataclass(frozen=True)
class CoincidenceVerdict:
    """Outcome of the coincidence decision between SC and the generated set.

    When not coincident, ``counterexample`` is a selection-core point that
    no interval-core element generates.
    """

    coincident: bool
    counterexample: tuple[Scalar, ...] | None = None


def _payoff(x, n: int) -> tuple[Fraction, ...]:
    point = tuple(Fraction(v) for v in x)
    if len(point) != n:
        raise ValueError(f"payoff vector has {len(point)} entries, expected {n}")
    return point


def _interval_payoff(entries, n: int) -> tuple[Interval, ...]:
    payoff = tuple(_as_interval(e) for e in entries)
    if len(payoff) != n:
        raise ValueError(f"interval payoff has {len(payoff)} entries, expected {n}")
    return payoff


def _coalition_sums(x: tuple[Fraction, ...]) -> list[Fraction]:
    """sums[m] = total payoff of the coalition with bitmask m."""
    sums = [Fraction(0)] * (1 << len(x))
    for m in range(1, len(sums)):
        low = m & -m
        sums[m] = sums[m ^ low] + x[low.bit_length() - 1]
    return sums


def _indicator(mask: int, n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1) if mask >> i & 1 else Fraction(0) for i in range(n))


# ---------------------------------------------------------------------------
# classical game solutions


def is_imputation(v: ClassicalGame, x) -> bool:
    """Efficiency plus individual rationality, checked exactly."""
    point = _payoff(x, v.n)
    if sum(point) != v.worth(grand_coalition(v.n)):
        return False
    return all(point[i] >= v.worth(1 << i) for i in range(v.n))


def is_core_member(v: ClassicalGame, x) -> bool:
    """Efficient and no coalition can improve on its summed payoff."""
    point = _payoff(x, v.n)
    sums = _coalition_sums(point)
    full = grand_coalition(v.n)
    if sums[full] != v.worth(full):
        return False
    return all(sums[m] >= v.worth(m) for m in range(1, full))


def core_system(v: ClassicalGame) -> LinearSystem:
    """Core of a classical game as an exact linear system over payoffs."""
    n = v.n
    full = grand_coalition(n)
    ones = tuple(Fraction(1) for _ in range(n))
    rows = [(_indicator(m, n), v.worth(m)) for m in range(1, full)]
    return LinearSystem(
        dim=n,
        equalities=((ones, v.worth(full)),),
        inequalities=tuple(rows),
    )


def core_witness(v: ClassicalGame) -> tuple[Fraction, ...] | None:
    ok, point = feasible(core_system(v))
    return point if ok else None


def core_nonempty(v: ClassicalGame) -> bool:
    return core_witness(v) is not None


# ---------------------------------------------------------------------------
# selection-based point solutions


def is_selection_imputation(w: IntervalGame, x) -> bool:
    """Some selection accepts x as an imputation.

    Closed form: the total must fit inside the grand coalition's interval
    and each payoff must clear its singleton's lower endpoint, since a
    selection may set the grand worth to the total and every singleton to
    its own minimum.
    """
    point = _payoff(x, w.n)
    total = sum(point)
    grand = w.worth(grand_coalition(w.n))
    if not (grand.lower <= total <= grand.upper):
        return False
    return all(point[i] >= w.worth(1 << i).lower for i in range(w.n))


def is_selection_core_member(w: IntervalGame, x) -> bool:
    """Some selection puts x in its core (x lies in the SC polytope)."""
    point = _payoff(x, w.n)
    sums = _coalition_sums(point)
    full = grand_coalition(w.n)
    grand = w.worth(full)
    if not (grand.lower <= sums[full] <= grand.upper):
        return False
    return all(sums[m] >= w.worth(m).lower for m in range(1, full))


def selection_core_witness(w: IntervalGame, x) -> IntervalGame | None:
    """A sub-game of w each of whose selections has x in its core.

    Construction: pin the grand coalition at the total of x and cap every
    other coalition at what x pays it; any selection of the result is a
    selection of w that accepts x.
    """
    point = _payoff(x, w.n)
    if not is_selection_core_member(w, point):
        return None
    sums = _coalition_sums(point)
    full = grand_coalition(w.n)
    total = sums[full]

    def worth(m: int) -> Interval:
        if m == full:
            return Interval(total)
        original = w.worth(m)
        return Interval(original.lower, min(sums[m], original.upper))

    return IntervalGame.from_function(w.n, worth)


def verify_selection_core_witness(w: IntervalGame, x, s: IntervalGame) -> bool:
    """Pure re-check of a witness sub-game: containment plus worst-case core."""
    point = _payoff(x, w.n)
    if s.n != w.n:
        return False
    full = grand_coalition(w.n)
    if any(s.worth(m) not in w.worth(m) for m in range(1, full + 1)):
        return False
    if not s.worth(full).degenerate:
        return False
    _, worst = border_games(s)
    return is_core_member(worst, point)


def selection_core_system(w: IntervalGame) -> LinearSystem:
    """The SC polytope over payoff vectors, as inequality rows."""
    n = w.n
    full = grand_coalition(n)
    ones = tuple(Fraction(1) for _ in range(n))
    grand = w.worth(full)
    rows = [(ones, grand.lower), (tuple(-c for c in ones), -grand.upper)]
    for m in range(1, full):
        rows.append((_indicator(m, n), w.worth(m).lower))
    return LinearSystem(dim=n, inequalities=tuple(rows))


# ---------------------------------------------------------------------------
# interval-valued payoff solutions


def is_interval_imputation(w: IntervalGame, payoff) -> bool:
    """Interval payoffs summing exactly to w(N), each weakly above its singleton."""
    entries = _interval_payoff(payoff, w.n)
    total = Interval(0)
    for p in entries:
        total = total + p
    if total != w.worth(grand_coalition(w.n)):
        return False
    return all(weakly_better(entries[i], w.worth(1 << i)) for i in range(w.n))


def is_interval_core_member(w: IntervalGame, payoff) -> bool:
    entries = _interval_payoff(payoff, w.n)
    if not is_interval_imputation(w, entries):
        return False
    full = grand_coalition(w.n)
    for m in range(1, full):
        total = Interval(0)
        for i in range(w.n):
            if m >> i & 1:
                total = total + entries[i]
        if not weakly_better(total, w.worth(m)):
            return False
    return True


# ---------------------------------------------------------------------------
# points generated by the interval core


def _lower_system(w: IntervalGame, sums: list[Fraction]) -> LinearSystem:
    """Feasibility of the sink slacks l: x - l must sit in the lower border core."""
    n = w.n
    full = grand_coalition(n)
    ones = tuple(Fraction(1) for _ in range(n))
    rows = []
    for m in range(1, full + 1):
        coeffs = tuple(-c for c in _indicator(m, n))
        rows.append((coeffs, w.worth(m).lower - sums[m]))
    return LinearSystem(
        dim=n,
        equalities=((ones, sums[full] - w.worth(full).lower),),
        inequalities=tuple(rows),
        nonneg=frozenset(range(n)),
    )


def _upper_system(w: IntervalGame, sums: list[Fraction]) -> LinearSystem:
    """Feasibility of the rise slacks u: x + u must sit in the upper border core."""
    n = w.n
    full = grand_coalition(n)
    ones = tuple(Fraction(1) for _ in range(n))
    rows = []
    for m in range(1, full + 1):
        rows.append((_indicator(m, n), w.worth(m).upper - sums[m]))
    return LinearSystem(
        dim=n,
        equalities=((ones, w.worth(full).upper - sums[full]),),
        inequalities=tuple(rows),
        nonneg=frozenset(range(n)),
    )


def generated_core_system(w: IntervalGame, x) -> LinearSystem:
    """Joint system over (l, u) certifying that x is generated by the interval core.

    Kept as a single 2n-variable system for verification; the solver-facing
    path uses the two independent halves.
    """
    point = _payoff(x, w.n)
    sums = _coalition_sums(point)
    n = w.n
    full = grand_coalition(n)
    zero = tuple(Fraction(0) for _ in range(n))
    ones = tuple(Fraction(1) for _ in range(n))
    eqs = (
        (ones + zero, sums[full] - w.worth(full).lower),
        (zero + ones, w.worth(full).upper - sums[full]),
    )
    rows = []
    for m in range(1, full + 1):
        ind = _indicator(m, n)
        rows.append((tuple(-c for c in ind) + zero, w.worth(m).lower - sums[m]))
    for m in range(1, full + 1):
        ind = _indicator(m, n)
        rows.append((zero + ind, w.worth(m).upper - sums[m]))
    return LinearSystem(
        dim=2 * n,
        equalities=eqs,
        inequalities=tuple(rows),
        nonneg=frozenset(range(2 * n)),
    )


def generated_core_witness(w: IntervalGame, x) -> GeneratedCoreWitness | None:
    """Feasible slack pair for x, or None.

    The lower and upper halves are solved separately (they share no
    variables) and the assembled witness is re-verified against the joint
    system.
    """
    point = _payoff(x, w.n)
    sums = _coalition_sums(point)
    ok, l = feasible(_lower_system(w, sums))
    if not ok:
        return None
    ok, u = feasible(_upper_system(w, sums))
    if not ok:
        return None
    if not satisfies(generated_core_system(w, point), l + u):
        raise AssertionError("internal error: assembled witness failed the joint system")
    return GeneratedCoreWitness(l=l, u=u)


def is_generated_core_member(w: IntervalGame, x) -> bool:
    return generated_core_witness(w, x) is not None


def generated_core_diagnosis(w: IntervalGame, x) -> dict[str, bool]:
    """Which half of the membership system is feasible for x, for reporting."""
    point = _payoff(x, w.n)
    sums = _coalition_sums(point)
    lower_ok, _ = feasible(_lower_system(w, sums))
    upper_ok, _ = feasible(_upper_system(w, sums))
    return {"lower_feasible": lower_ok, "upper_feasible": upper_ok}


def core_coincidence(w: IntervalGame, budget: int = 6) -> CoincidenceVerdict:
    """Decide whether the generated set fills the whole SC polytope.

    The generated set is convex (projection of the joint slack polyhedron)
    and contained in SC, so equality holds iff every SC vertex is
    generated.  Vertices are visited in lexicographic order and the first
    failure is reported; an empty SC is vacuously coincident.  The budget
    caps the player count because vertex enumeration is exponential.
    """
    if w.n > budget:
        raise BudgetExceededError(
            f"coincidence needs vertex enumeration; {w.n} players exceeds budget {budget}"
        )
    for vertex in enumerate_vertices(selection_core_system(w)):
        if not is_generated_core_member(w, vertex):
            return CoincidenceVerdict(coincident=False, counterexample=vertex)
    return CoincidenceVerdict(coincident=True)


# ---------------------------------------------------------------------------
# strong imputation and strong core


def is_strong_imputation(w: IntervalGame, x) -> bool:
    """x is an imputation of every selection.

    Efficiency under every choice of grand worth forces w(N) degenerate;
    individual rationality must survive each singleton's upper endpoint.
    """
    point = _payoff(x, w.n)
    grand = w.worth(grand_coalition(w.n))
    if not grand.degenerate or sum(point) != grand.lower:
        return False
    return all(point[i] >= w.worth(1 << i).upper for i in range(w.n))


def is_strong_core_member(w: IntervalGame, x) -> bool:
    """x is in the core of every selection (worst case: upper endpoints)."""
    point = _payoff(x, w.n)
    full = grand_coalition(w.n)
    grand = w.worth(full)
    if not grand.degenerate:
        return False
    sums = _coalition_sums(point)
    if sums[full] != grand.lower:
        return False
    return all(sums[m] >= w.worth(m).upper for m in range(1, full))


def strong_core_system(w: IntervalGame) -> LinearSystem:
    """The strong core as a linear system; infeasible when w(N) is non-degenerate."""
    n = w.n
    full = grand_coalition(n)
    ones = tuple(Fraction(1) for _ in range(n))
    grand = w.worth(full)
    rows = [(_indicator(m, n), w.worth(m).upper) for m in range(1, full)]
    return LinearSystem(
        dim=n,
        equalities=((ones, grand.lower), (ones, grand.upper)),
        inequalities=tuple(rows),
    )


def strong_core_witness(w: IntervalGame) -> tuple[Fraction, ...] | None:
    """A strong core member when one exists: any core point of the upper border."""
    full = grand_coalition(w.n)
    if not w.worth(full).degenerate:
        return None
    _, upper = border_games(w)
    return core_witness(upper)


def strong_core_nonempty(w: IntervalGame) -> bool:
    return strong_core_witness(w) is not None


def is_strongly_balanced(w: IntervalGame) -> bool:
    """Every selection has a nonempty core.

    Decided on the single worst selection: upper endpoints everywhere
    except the grand coalition at its lower endpoint.  A core point of that
    game, with any grand surplus handed to one player, is a core point of
    every other selection, and the worst selection is itself a selection.
    """
    full = grand_coalition(w.n)
    lower, upper = border_games(w)
    worst = ClassicalGame.from_function(
        w.n, lambda m: lower.worth(m) if m == full else upper.worth(m)
    )
    return core_nonempty(worst)


# ---------------------------------------------------------------------------
# brute-force oracles (small n), used to validate the closed forms


def _candidate_selections(w: IntervalGame, total: Fraction):
    """Endpoint selections, with the grand worth also allowed at the given total."""
    n = w.n
    full = grand_coalition(n)
    proper = list(range(1, full))
    grand = w.worth(full)
    grand_choices = [grand.lower]
    if grand.upper != grand.lower:
        grand_choices.append(grand.upper)
    if grand.lower < total < grand.upper:
        grand_choices.append(total)
    for pick in range(1 << len(proper)):
        values = [Fraction(0)] * (full + 1)
        for k, m in enumerate(proper):
            worth = w.worth(m)
            values[m] = worth.upper if pick >> k & 1 else worth.lower
        for g in grand_choices:
            values[full] = g
            yield ClassicalGame(n=n, values=tuple(values))


def _selection_oracle(w: IntervalGame, x, accept) -> bool:
    if w.n > ORACLE_MAX_PLAYERS:
        raise BudgetExceededError(
            f"selection oracle enumerates endpoint games; {w.n} players exceeds {ORACLE_MAX_PLAYERS}"
        )
    point = _payoff(x, w.n)
    total = sum(point)
    return any(accept(v, point) for v in _candidate_selections(w, total))


def selection_imputation_oracle(w: IntervalGame, x) -> bool:
    """Exhaustive check that some candidate selection accepts x as an imputation."""
    return _selection_oracle(w, x, is_imputation)


def selection_core_oracle(w: IntervalGame, x) -> bool:
    """Exhaustive check that some candidate selection has x in its core."""
    return _selection_oracle(w, x, is_core_member)
