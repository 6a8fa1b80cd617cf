"""Error taxonomy.

Two families matter to callers.  PreconditionViolated and its subclasses mean
the input does not satisfy a documented requirement; the caller can fix the
input.  InternalError and the other invariant breaches mean a guaranteed
construction step failed, which is a bug in this library, never the input's
fault.  The CLI maps the first family to exit code 2 and the second to 3.
"""

from __future__ import annotations


class TricutError(Exception):
    """Base class for every error raised by this package."""


class PreconditionViolated(TricutError):
    """Input violates a documented precondition."""


class VerticalLine(PreconditionViolated):
    """A vertical line has no point dual (slope is undefined)."""


class MissingColor(PreconditionViolated):
    """Input does not contain at least one element of each required color."""


class NotSimple(PreconditionViolated):
    """Line arrangement is not simple.  `witness` holds the offending indices."""

    def __init__(self, witness: tuple[int, ...], message: str = ""):
        self.witness = witness
        super().__init__(message or f"arrangement is not simple, witness lines {witness}")


class UnboundedFace(PreconditionViolated):
    """Completeness is only defined for bounded faces."""


class NotPseudomanifold(PreconditionViolated):
    """Simplicial input is not a closed pseudomanifold."""


class DegenerateApex(PreconditionViolated):
    """Apex sees two points at equal slope, or a point at infinite slope."""


class BoundaryPoint(PreconditionViolated):
    """A query point lies exactly on an arc endpoint."""


class OnBoundary(PreconditionViolated):
    """A query point lies exactly on a region boundary."""


class EndpointOnLine(PreconditionViolated):
    """A segment endpoint lies exactly on one of the lines being counted."""


class GenerationFailed(TricutError):
    """Instance generator could not produce a valid instance."""


class OriginOnCurve(TricutError):
    """Winding number is undefined because the curve passes through the origin."""


class MixedParity(TricutError):
    """Good-simplex counts are neither all even nor all odd."""


class NoCutFound(TricutError):
    """No valid cut profile exists; breaches the halving guarantee."""


class InternalError(TricutError):
    """A step the theory guarantees did not hold.  Always a library bug.

    Instances carry an optional `trace` payload (a JSON-serializable dict)
    describing the failing state.  A global counter records every
    construction, so test suites can assert none were raised.
    """

    count = 0

    def __init__(self, message: str, trace: dict | None = None):
        InternalError.count += 1
        self.trace = trace or {}
        super().__init__(message)
