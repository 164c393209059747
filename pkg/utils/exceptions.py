"""
Exception hierarchy for the toolkit.
"""
from typing import Optional


class DesarguesError(Exception):
    """Base class for all toolkit errors."""


class InputError(DesarguesError):
    """Malformed or inconsistent user input."""


class ShapeMismatchError(InputError):
    """Matrix shapes, ambient dimensions or ground sets do not agree."""


class UsageError(InputError):
    """Command-line arguments rejected by the parser."""


class SingularMatrixError(DesarguesError):
    """A matrix expected to be invertible is singular."""


class NonFiniteError(DesarguesError):
    """An exact value does not fit in a finite double."""


class PreconditionError(DesarguesError):
    """A documented precondition of an operation was violated."""


class InvalidConfigError(DesarguesError):
    """A Desargues configuration violates one of its invariants."""

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class DegenerateConfigError(DesarguesError):
    """Derived lines or points of a configuration have the wrong dimension."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"degenerate configuration at index {index}: {reason}")
        self.index = index
        self.reason = reason


class ZeroProbabilityOutcome(DesarguesError):
    """The 'yes' outcome of a measurement has zero probability."""

    def __init__(self, stage: str, probability: float, label: Optional[str] = None):
        where = f" ({label})" if label else ""
        super().__init__(
            f"{stage}: outcome probability {probability:.3e}{where} is below the collapse threshold"
        )
        self.stage = stage
        self.probability = probability
        self.label = label


class GeneratorExhaustedError(DesarguesError):
    """A seeded generator failed to produce a valid instance within its attempt budget."""
