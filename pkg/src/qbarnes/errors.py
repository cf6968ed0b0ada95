"""Error taxonomy shared by the library and the CLI.

Each class maps to a fixed CLI exit code so scripted callers can branch on
failure kind without parsing messages.
"""
from __future__ import annotations


class QBarnesError(Exception):
    """Base class. `parameter` names the offending input when known."""

    exit_code = 1

    def __init__(self, message: str, *, parameter: str | None = None):
        super().__init__(message)
        self.parameter = parameter


class PreconditionError(QBarnesError):
    """A documented precondition on the inputs is violated."""

    exit_code = 2


class ExponentAlignmentError(PreconditionError):
    """Fractional argument w/f incompatible with the q-base exponent.

    Evaluating q^(w/f) would require a radical; callers must supply a base
    whose exponent f divides.
    """


class PoleError(QBarnesError):
    """Evaluation hit a pole (a vanishing denominator factor)."""

    exit_code = 3


class BudgetError(QBarnesError):
    """A point-count budget would be exceeded; nothing was computed."""

    exit_code = 4


class PrecisionExhaustedError(QBarnesError):
    """Ultrametric cancellation consumed every tracked p-adic digit."""

    exit_code = 5


class InternalError(QBarnesError):
    """An internal invariant broke; always a bug, never a usage error."""

    exit_code = 1
