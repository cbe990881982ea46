"""Exact tools for cooperative interval games.

Characteristic functions map coalitions to closed rational intervals; the
package classifies such games (border-game, weakly-better, and
selection-based classes), decides point and interval solution concepts
(imputations, cores, the selection core, payoffs generated by the interval
core, strong imputation and strong core), and answers the coincidence
question between the generated set and the selection core.  All arithmetic
is exact via ``fractions.Fraction``.
"""

from .classes import (
    ORACLE_MAX_PLAYERS,
    SELECTION_CONVEX_VARIANTS,
    ClassicalProperty,
    IntervalClass,
    SelectionClass,
    check_classical,
    check_interval_class,
    check_selection_class,
    check_selection_convex_variant,
    selection_class_oracle,
)
from .errors import BudgetExceededError, GameFormatError
from .games import (
    FAMILY_KINDS,
    MAX_PLAYERS,
    ClassicalGame,
    Coalition,
    IntervalGame,
    border_games,
    coalition,
    embed_classical,
    family,
    format_game,
    grand_coalition,
    is_selection,
    length_game,
    members,
    parse_game,
    to_classical,
    truncate_grand,
)
from .lpcore import (
    InfeasibleSystemError,
    LinearSystem,
    UnboundedRegionError,
    enumerate_vertices,
    feasible,
    maximize,
    satisfies,
)
from .numerics import (
    ZERO_INTERVAL,
    Interval,
    Scalar,
    format_interval,
    format_scalar,
    parse_interval,
    parse_scalar,
    strictly_better,
    weakly_better,
)
from .solutions import (
    CoincidenceVerdict,
    GeneratedCoreWitness,
    core_coincidence,
    core_nonempty,
    core_system,
    core_witness,
    generated_core_diagnosis,
    generated_core_system,
    generated_core_witness,
    is_core_member,
    is_generated_core_member,
    is_imputation,
    is_interval_core_member,
    is_interval_imputation,
    is_selection_core_member,
    is_selection_imputation,
    is_strong_core_member,
    is_strong_imputation,
    is_strongly_balanced,
    selection_core_oracle,
    selection_core_system,
    selection_core_witness,
    selection_imputation_oracle,
    strong_core_nonempty,
    strong_core_system,
    strong_core_witness,
    verify_selection_core_witness,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ClassicalGame",
    "ClassicalProperty",
    "Coalition",
    "CoincidenceVerdict",
    "FAMILY_KINDS",
    "GameFormatError",
    "GeneratedCoreWitness",
    "InfeasibleSystemError",
    "Interval",
    "IntervalClass",
    "IntervalGame",
    "LinearSystem",
    "MAX_PLAYERS",
    "ORACLE_MAX_PLAYERS",
    "SELECTION_CONVEX_VARIANTS",
    "Scalar",
    "SelectionClass",
    "UnboundedRegionError",
    "ZERO_INTERVAL",
    "border_games",
    "check_classical",
    "check_interval_class",
    "check_selection_class",
    "check_selection_convex_variant",
    "coalition",
    "core_coincidence",
    "core_nonempty",
    "core_system",
    "core_witness",
    "embed_classical",
    "enumerate_vertices",
    "family",
    "feasible",
    "format_game",
    "format_interval",
    "format_scalar",
    "generated_core_diagnosis",
    "generated_core_system",
    "generated_core_witness",
    "grand_coalition",
    "is_core_member",
    "is_generated_core_member",
    "is_imputation",
    "is_interval_core_member",
    "is_interval_imputation",
    "is_selection",
    "is_selection_core_member",
    "is_selection_imputation",
    "is_strong_core_member",
    "is_strong_imputation",
    "is_strongly_balanced",
    "length_game",
    "maximize",
    "members",
    "parse_game",
    "parse_interval",
    "parse_scalar",
    "satisfies",
    "selection_class_oracle",
    "selection_core_oracle",
    "selection_core_system",
    "selection_core_witness",
    "selection_imputation_oracle",
    "strictly_better",
    "strong_core_nonempty",
    "strong_core_system",
    "strong_core_witness",
    "to_classical",
    "truncate_grand",
    "verify_selection_core_witness",
    "weakly_better",
    "__version__",
]
