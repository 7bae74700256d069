"""Exception types shared across the package.

The CLI maps these onto exit codes: validation and schema problems are user
input errors (exit 2), size budget overruns are exit 3, and internal check
failures (a computed object violating an identity the mathematics guarantees)
are exit 4.
"""


class TateJoinError(Exception):
    """Base class for errors raised by this package."""


class GroupError(TateJoinError):
    """A multiplication table or generator set does not define a group."""


class SchemaError(TateJoinError):
    """A JSON input file does not match the documented schema."""


class ResolutionError(TateJoinError):
    """A chain complex fails d∘d = 0, augmentation, or exactness checks."""


class SizeBudgetError(TateJoinError):
    """Constructing the requested object would exceed the size budget."""

    def __init__(self, message: str, needed: int, budget: int):
        super().__init__(message)
        self.needed = needed
        self.budget = budget


class InternalCheckError(TateJoinError):
    """A self-check on a computed value failed; indicates a bug, not bad input."""
