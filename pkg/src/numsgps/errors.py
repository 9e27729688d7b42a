"""Domain exceptions.

The CLI reports these by class name with exit status 1, so the names are
part of the public surface.
"""


class SemigroupError(Exception):
    """Base class for all domain errors raised by this package."""


class InfiniteComplement(SemigroupError):
    """Generators share a common factor, so the complement is infinite."""


class NotClosed(SemigroupError):
    """A prescribed gap set whose complement is not closed under addition."""


class EmptySemigroupComplement(SemigroupError):
    """Operation undefined on the full monoid (no gaps)."""


class GenusTooSmall(SemigroupError):
    """Sumset certificate requested for genus 0 or 1, where it is vacuous."""


class MalformedGapSet(SemigroupError):
    """A sequence/genus pair that does not describe a valid gap set."""


class NotPFSemigroup(SemigroupError):
    """Decomposition requested for a semigroup without the PF gap profile."""


class NotPFShape(SemigroupError):
    """Schubert index without the zero-prefix/step structure of a PF family."""


class PasteConditionViolated(SemigroupError):
    """Paste join value too large for the head sequence's final entry."""


class PreconditionUnverified(SemigroupError):
    """Paste input sequence fails its own sufficient-bound conditions."""
