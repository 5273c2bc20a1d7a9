"""Domain-error hierarchy shared by the whole toolkit.

Every error a library operation can raise on bad input derives from
HedgehogError, so callers (CLI, service) can map "domain error" to a
single exit code / HTTP status.
"""

from __future__ import annotations


class HedgehogError(Exception):
    """Base class for all domain errors raised by this package."""


class EmptyInput(HedgehogError):
    """A nonempty collection was required."""


class NotDirected(HedgehogError):
    """Two non-apex points of the input lie on distinct spines."""


class UniverseMismatch(HedgehogError):
    """Operands belong to different spine universes, or a spine index is invalid."""


class NotTotallyBounded(HedgehogError):
    """No finite ball cover exists (countably infinite universe)."""


class NotInClosure(HedgehogError):
    """The target point is not in the closure of the set."""


class PreconditionViolated(HedgehogError):
    """A stated precondition failed (candidate without apex, wrong universe, ...)."""


class NotCompactOpen(HedgehogError):
    """A stream element failed the compact-openness classification."""


class NoSubcoverWithinBound(HedgehogError):
    """The consumed prefix of the stream never covered the space."""

    def __init__(self, message: str, consumed: int, residual=None):
        super().__init__(message)
        self.consumed = consumed
        self.residual = residual


class LengthMismatch(HedgehogError):
    """Parallel sequences have different lengths."""


class UnboundedMetric(HedgehogError):
    """A metric bounded by 1 was required."""


class EmptyDomain(HedgehogError):
    """The function to extend has an empty domain."""


class EmptyA(HedgehogError):
    """The subspace the extension starts from is empty."""


class SpineOutOfUniverse(HedgehogError):
    """A map hits a spine index outside the target universe."""


class InvalidMetric(HedgehogError):
    """The distance table violates the metric axioms."""


class NotACover(HedgehogError):
    """The union of the supplied sets is not the whole space."""


class CoverageNotReachedWithinMaxLevel(HedgehogError):
    """The refinement did not cover the space within the level budget."""

    def __init__(self, message: str, residue):
        super().__init__(message)
        self.residue = residue


class NotDiscreteFamily(HedgehogError):
    """Members of one level overlap or sit closer than the level gap."""


class NotDisjoint(HedgehogError):
    """The family members are not pairwise disjoint."""


class PremiseViolated(HedgehogError):
    """The separation premise U_n disjoint from V_n fails."""


class NotInImage(HedgehogError):
    """The pair is not in the image of the real-line embedding."""
