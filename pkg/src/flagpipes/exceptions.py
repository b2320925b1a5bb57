"""Error taxonomy for the flagpipes library.

Every anticipated failure raises a subclass of :class:`DomainError`, which is
itself a ``ValueError`` so generic callers need no special handling.  The CLI
maps any ``DomainError`` to exit code 1 (usage errors exit 2).
"""

from __future__ import annotations

__all__ = [
    "DomainError",
    "SizeMismatchError",
    "NotComparableError",
    "MalformedDreamError",
    "GuardExceededError",
    "EmptyChoiceError",
    "NotUnblockedError",
    "NotACoverError",
    "EmbeddingDomainError",
    "RankDeficientError",
    "NotGeneralizedPermutationError",
]


class DomainError(ValueError):
    """Base class for all domain failures raised by flagpipes."""


class SizeMismatchError(DomainError):
    """Two objects that must share a ground-set size do not."""


class NotComparableError(DomainError):
    """A pair (u, v) is not below/above in Bruhat order as required."""


class MalformedDreamError(DomainError):
    """A tile grid violates the structural pipe-dream invariants."""


class GuardExceededError(DomainError):
    """An enumeration guard was hit; see POSITROID_MAX_N to override."""


class EmptyChoiceError(DomainError):
    """A choice set that must be nonempty is empty."""


class NotUnblockedError(DomainError):
    """A requested column is not unblocked; carries the offending column."""

    def __init__(self, column: int, message: str | None = None):
        self.column = column
        super().__init__(message or f"column {column} is not unblocked")


class NotACoverError(DomainError):
    """A pair of positroids is not an elementary quotient cover."""


class EmbeddingDomainError(DomainError):
    """A basis set is not in the image of the cover-embedding map.

    ``reason`` is one of ``"zero-not-in-lexmin"`` (element 0 missing from the
    lexicographically minimal basis) or ``"no-zero-free-basis"`` (every basis
    contains 0).
    """

    def __init__(self, reason: str, message: str | None = None):
        self.reason = reason
        super().__init__(message or reason)


class RankDeficientError(DomainError):
    """A matrix whose top rows must be full rank is rank deficient."""


class NotGeneralizedPermutationError(DomainError):
    """A matrix is not a generalized permutation matrix as required."""
