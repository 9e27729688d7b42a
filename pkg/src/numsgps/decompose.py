"""Irreducible stair-block decomposition of PF-profile semigroups.

Every semigroup with the PF gap profile is the intersection of one
*stair block* per pseudo-Frobenius number f: the semigroup with gaps
``{1..gi-1, f}`` where ``gi = (f+1)/2`` for odd f and ``(f+2)/2`` for
even f. Each block is irreducible (symmetric for odd f, pseudo-symmetric
for even f) and has multiplicity equal to its genus.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core
from .core import Semigroup
from .errors import EmptySemigroupComplement, NotPFSemigroup
from .pfseq import pf_failure_reason

__all__ = ["StairBlock", "stair_block", "decompose_pf", "is_irreducible"]


@dataclass(frozen=True)
class StairBlock:
    genus: int
    parity: str  # "odd" or "even", the flavour of the single large gap
    semigroup: Semigroup

    @property
    def frobenius(self) -> int:
        return self.semigroup.frobenius


def stair_block(f: int) -> StairBlock:
    """Block whose only gap beyond an initial run is exactly ``f``."""
    if f < 1:
        raise ValueError("the large gap must be a positive integer")
    gi = (f + 1) // 2 if f % 2 else (f + 2) // 2
    gaps = tuple(range(1, gi)) + (f,)
    return StairBlock(gi, "odd" if f % 2 else "even", core.from_gaps(gaps))


def decompose_pf(s: Semigroup) -> tuple[StairBlock, ...]:
    """One block per pseudo-Frobenius number, by increasing large gap.

    The intersection of the blocks' semigroups recovers ``s`` exactly.
    """
    if s.is_natural:
        raise EmptySemigroupComplement("the full monoid has no gaps")
    reason = pf_failure_reason(s)
    if reason is not None:
        raise NotPFSemigroup(reason)
    return tuple(stair_block(f) for f in s.pf)


def is_irreducible(s: Semigroup) -> bool:
    """Maximality among semigroups sharing the Frobenius number.

    Equivalent to being symmetric (odd Frobenius, genus (f+1)/2) or
    pseudo-symmetric (even Frobenius, genus (f+2)/2); cross-checked
    against brute-force cover search in the test suite.
    """
    if s.is_natural:
        raise EmptySemigroupComplement("the full monoid has no gaps")
    f = s.frobenius
    target = (f + 1) // 2 if f % 2 else (f + 2) // 2
    return s.genus == target
