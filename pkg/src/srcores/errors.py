"""Exception types shared across the package."""


class UniverseMismatchError(ValueError):
    """Two objects over different variable universes were combined."""


class ParseError(ValueError):
    """Malformed .ideal or .graph input."""


class BudgetExceededError(RuntimeError):
    """An enumeration outgrew its configured budget.

    Signals desk-scale overflow, not a mathematical failure; callers may
    retry with a larger budget.
    """


class InvalidCollapseError(ValueError):
    """A collapse step violated its preconditions."""


class InternalError(RuntimeError):
    """A collapse-plan producer reached a state its theory forbids.

    Raising this indicates a bug in the producer, never bad user input.
    """
