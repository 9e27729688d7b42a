"""Shared brute-force oracles, deliberately independent of the library's
bitset code paths."""

from __future__ import annotations

import itertools

import pytest

from numsgps import Semigroup, from_gaps


def is_valid_gap_set(gaps) -> bool:
    """Closure of the complement, checked over nonzero members below c."""
    if not gaps:
        return True
    c = gaps[-1] + 1
    gapbits = 0
    for x in gaps:
        gapbits |= 1 << x
    mem = ((1 << c) - 1) & ~gapbits & ~1
    mm = mem
    while mm:
        low = mm & -mm
        x = low.bit_length() - 1
        mm ^= low
        if (mem << x) & gapbits:
            return False
    return True


def brute_gap_sets(genus) -> list[tuple[int, ...]]:
    """All genus-g gap sets by exhaustive subset search of {1..2g-1}."""
    if genus == 0:
        return [()]
    return [c for c in itertools.combinations(range(1, 2 * genus), genus)
            if is_valid_gap_set(c)]


def brute_sumset(gaps, n) -> list[int]:
    return sorted({sum(c) for c in
                   itertools.combinations_with_replacement(gaps, n)})


def brute_pf(s: Semigroup) -> tuple[int, ...]:
    """Pseudo-Frobenius numbers by double loop over gaps and members."""
    members = [h for h in s.members_below(s.conductor) if h]
    return tuple(x for x in s.gaps if all(x + h in s for h in members))


def closure_holds(s: Semigroup, limit=None) -> bool:
    """Exhaustive x + y membership check up to 2 * conductor."""
    limit = 2 * s.conductor if limit is None else limit
    members = list(s.members_below(limit))
    for i, x in enumerate(members):
        if x == 0:
            continue
        for y in members[i:]:
            if x + y > limit:
                break
            if x + y not in s:
                return False
    return True


def kunz_count(genus) -> int:
    """Count semigroups of one genus via multiplicity-residue coordinates.

    A semigroup of multiplicity m is a tuple (x_1..x_{m-1}) of positive
    integers with x_i + x_j >= x_{i+j} (i+j <= m-1) and
    x_i + x_j + 1 >= x_{i+j-m} (i+j >= m+1); its genus is sum(x_i).
    Completely independent of the tree walk and of the bitset code.
    """
    if genus == 0:
        return 1
    total = 0
    for m in range(2, genus + 2):
        parts = m - 1
        x = [0] * (parts + 1)

        def place(k, remaining):
            if k > parts:
                return 1 if remaining == 0 else 0
            hi = remaining - (parts - k)
            if hi < 1:
                return 0
            for i in range(1, k // 2 + 1):
                cap = x[i] + x[k - i]
                if cap < hi:
                    hi = cap
            lo = 1
            for i in range(max(1, m + 1 - k), k):
                need = x[i + k - m] - x[i] - 1
                if need > lo:
                    lo = need
            got = 0
            for v in range(lo, hi + 1):
                if 2 * k >= m + 1 and 2 * v + 1 < x[2 * k - m]:
                    continue
                x[k] = v
                got += place(k + 1, remaining - v)
            x[k] = 0
            return got

        total += place(1, genus)
    return total


@pytest.fixture(scope="session")
def small_semigroups():
    """Every semigroup of genus <= 8, built from brute-force gap sets."""
    out = []
    for g in range(9):
        out.extend(from_gaps(c) for c in brute_gap_sets(g))
    return out
