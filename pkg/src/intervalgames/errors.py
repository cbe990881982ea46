"""Shared exception types."""


class GameFormatError(ValueError):
    """Malformed game text, payoff text, or an entry violating an invariant."""


class BudgetExceededError(RuntimeError):
    """The requested computation exceeds the configured player budget."""
