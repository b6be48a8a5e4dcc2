"""Exception hierarchy shared by every arskit module."""

from __future__ import annotations


class ArsError(Exception):
    """Base class; ``kind`` is the machine-readable tag printed by the CLI."""

    kind = "error"


class DuplicateName(ArsError):
    kind = "duplicate-name"


class UnknownName(ArsError):
    kind = "unknown-name"


class IndexOutOfRange(ArsError):
    kind = "index-out-of-range"


class CapacityExceeded(ArsError):
    kind = "capacity-exceeded"


class MalformedLasso(ArsError):
    kind = "malformed-lasso"


class PreconditionFailed(ArsError):
    """A theorem-backed procedure was called outside its hypotheses.

    ``condition`` names the violated hypothesis (``"SN"``, ``"WCR"``, ...) and
    ``element`` the index of the offending element, when there is one.
    """

    kind = "precondition-failed"

    def __init__(self, condition: str, message: str, element: int | None = None, evidence=None):
        super().__init__(f"{condition}: {message}")
        self.condition = condition
        self.element = element
        self.evidence = evidence


class FuelExhausted(ArsError):
    kind = "fuel-exhausted"

    def __init__(self, message: str, last=None, steps: int = 0):
        super().__init__(message)
        self.last = last
        self.steps = steps


class NegativeIndex(ArsError):
    kind = "negative-index"


class ParseError(ArsError):
    kind = "parse-error"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnboundName(ArsError):
    kind = "unbound-name"
