"""n-fold gap sumsets and the sumset-size test for non-Weierstrass semigroups.

A semigroup of genus g whose n-fold gap sumset has more than
(2n-1)(g-1) elements cannot be a Weierstrass semigroup. The test is
one-directional: a negative report certifies nothing.

Genus 0 and 1 are rejected rather than reported: at genus 1 the raw
inequality is satisfied vacuously by the unique semigroup, which *is*
Weierstrass, so a certificate there would be misleading.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Semigroup
from .errors import EmptySemigroupComplement, GenusTooSmall

__all__ = ["SumsetReport", "gap_sumset", "buchweitz_test"]


@dataclass(frozen=True)
class SumsetReport:
    n: int
    cardinality: int
    threshold: int
    is_buchweitz: bool


def gap_sumset(s: Semigroup, n: int) -> list[int]:
    """All sums of exactly n gaps of ``s``, sorted and duplicate-free."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if s.is_natural:
        raise EmptySemigroupComplement("the full monoid has no gaps")
    gapbits = 0
    for x in s.gaps:
        gapbits |= 1 << x
    acc = gapbits
    for _ in range(n - 1):
        new = 0
        for x in s.gaps:
            new |= acc << x
        acc = new
    out = []
    while acc:
        low = acc & -acc
        out.append(low.bit_length() - 1)
        acc ^= low
    return out


def buchweitz_test(s: Semigroup, n: int) -> SumsetReport:
    """Compare the n-fold gap sumset size against (2n-1)(genus-1)."""
    if n < 2:
        raise ValueError("the certificate needs n >= 2")
    if s.genus <= 1:
        raise GenusTooSmall(f"genus {s.genus} is below the test's range")
    cardinality = len(gap_sumset(s, n))
    threshold = (2 * n - 1) * (s.genus - 1)
    return SumsetReport(n, cardinality, threshold, cardinality > threshold)
