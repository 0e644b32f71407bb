"""Exception hierarchy.

DomainError subclasses map to CLI exit code 2; UsageError to exit code 1.
Each carries enough structure to serialize into the JSON error envelope.
"""

from __future__ import annotations


class NewtonMuError(Exception):
    """Base class for all package errors."""

    kind = "error"

    def payload(self) -> dict:
        return {"type": self.kind, "message": str(self)}


class UsageError(NewtonMuError):
    """Malformed invocation (bad flags, unparsable arguments)."""

    kind = "usage"


class DomainError(NewtonMuError):
    """Input is well-formed but outside the mathematical domain."""

    kind = "domain"


class ParseError(UsageError):
    """Polynomial text rejected; carries the offending position."""

    kind = "parse"

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position

    def payload(self) -> dict:
        out = super().payload()
        if self.position is not None:
            out["position"] = self.position
        return out


class NotConvenientError(DomainError):
    """Support misses some coordinate axis where convenience is required."""

    kind = "not-convenient"

    def __init__(self, message: str, missing_axes: tuple[int, ...] = ()):
        super().__init__(message)
        self.missing_axes = tuple(missing_axes)

    def payload(self) -> dict:
        out = super().payload()
        out["missing_axes"] = [i + 1 for i in self.missing_axes]
        return out


class NotQuasiConvenientError(DomainError):
    kind = "not-quasi-convenient"


class ContainmentError(DomainError):
    """A required region containment (Y inside X) does not hold or cannot be checked."""

    kind = "containment"


class InvalidRegionError(DomainError):
    """Simplex list fails region validation (duplicates, gross overlap, bad vertices)."""

    kind = "invalid-region"


class GuardrailError(DomainError):
    """Desk-scale guardrail exceeded (dimension or support size)."""

    kind = "guardrail"


def _plain_coord(value):
    return value if isinstance(value, int) else str(value)


class DecompositionError(DomainError):
    """Difference region is not decomposable under the requested constraints."""

    kind = "decomposition"

    def __init__(self, message: str, pieces: list | None = None):
        super().__init__(message)
        self.pieces = pieces

    def payload(self) -> dict:
        out = super().payload()
        if self.pieces is not None:
            out["pieces"] = [
                [[_plain_coord(c) for c in vertex] for vertex in piece]
                for piece in self.pieces
            ]
        return out


class StabilizationError(DomainError):
    """An iterative computation failed to stabilize under its cap."""

    kind = "stabilization"


class FormulaMismatchError(DomainError):
    """A checked identity disagreed with the direct definition (hard error)."""

    kind = "formula-mismatch"

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = dict(details or {})

    def payload(self) -> dict:
        out = super().payload()
        if self.details:
            out["details"] = {k: _plain_coord(v) if not isinstance(v, (bool, str)) else v for k, v in self.details.items()}
        return out
