"""Numerical semigroups as immutable membership bitsets.

A numerical semigroup is a cofinite additive submonoid of the non-negative
integers. A :class:`Semigroup` stores membership for ``0..conductor-1`` as
bits of a Python int (bit ``i`` set = ``i`` is a member); every integer at
or above the conductor is implicitly a member. All classical invariants,
including the pseudo-Frobenius set, are computed once at construction, so
instances are immutable and safe to share between threads.

The full monoid (empty gap set) is represented with conductor 0. Its
Frobenius number is reported as -1 and its type as 0; both conventions are
local to this package and documented here rather than inferred.

Textual encodings used by the CLI and golden files:
``gens:5,7,11,13`` and ``gaps:1,2,3,4,6,8,9`` (comma-separated decimal,
no spaces).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator

from .errors import EmptySemigroupComplement, InfiniteComplement, NotClosed

__all__ = [
    "Semigroup",
    "Invariants",
    "from_generators",
    "from_gaps",
    "invariants",
    "pseudo_frobenius",
    "minimal_generators",
    "intersect",
    "schubert_index",
    "parse_int_list",
    "parse_label",
    "gaps_label",
    "gens_label",
]

_INT_LIST = re.compile(r"\d+(,\d+)*")


def _iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Semigroup:
    """Canonical numerical semigroup; construct via the module functions."""

    __slots__ = ("_bits", "conductor", "genus", "multiplicity", "frobenius",
                 "gaps", "pf", "type")

    def __init__(self, members_bits: int, conductor: int):
        # Normalise: trim the window to the true conductor (largest gap + 1).
        comp = ~members_bits & ((1 << conductor) - 1) if conductor > 0 else 0
        if comp == 0:
            bits, conductor = 0, 0
        else:
            conductor = comp.bit_length()
            bits = members_bits & ((1 << conductor) - 1)
            if not bits & 1:
                raise ValueError("0 must be a member")
        self._bits = bits
        self.conductor = conductor
        self.frobenius = conductor - 1
        self.gaps = tuple(_iter_bits(comp & ((1 << conductor) - 1)))
        self.genus = len(self.gaps)
        if conductor == 0:
            self.multiplicity = 1
        else:
            nonzero = bits & ~1
            self.multiplicity = (nonzero & -nonzero).bit_length() - 1 if nonzero else conductor
        self.pf = self._compute_pf()
        self.type = len(self.pf)

    def _compute_pf(self) -> tuple[int, ...]:
        # x is pseudo-Frobenius iff no nonzero member h < c - x has x + h a gap;
        # sums reaching the conductor are members automatically.
        bits, c = self._bits, self.conductor
        if c == 0:
            return ()
        memnz = bits & ~1
        out = []
        for x in self.gaps:
            if (memnz & ~(bits >> x) & ((1 << (c - x)) - 1)) == 0:
                out.append(x)
        return tuple(out)

    @property
    def is_natural(self) -> bool:
        """True for the full monoid (empty gap set)."""
        return self.conductor == 0

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        return x >= self.conductor or bool((self._bits >> x) & 1)

    def members_below(self, stop: int) -> Iterator[int]:
        """Members in ``[0, stop)`` in increasing order."""
        for x in range(min(stop, self.conductor)):
            if (self._bits >> x) & 1:
                yield x
        yield from range(self.conductor, stop)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Semigroup)
                and self.conductor == other.conductor
                and self._bits == other._bits)

    def __hash__(self) -> int:
        return hash((self.conductor, self._bits))

    def __repr__(self) -> str:
        if self.genus <= 12:
            return f"Semigroup(gaps={self.gaps!r})"
        return (f"<Semigroup genus={self.genus} mult={self.multiplicity} "
                f"frobenius={self.frobenius}>")


@dataclass(frozen=True)
class Invariants:
    multiplicity: int
    genus: int
    frobenius: int
    conductor: int
    type: int


def from_generators(gens: Iterable[int]) -> Semigroup:
    """Smallest numerical semigroup containing the given generators.

    Duplicates are dropped silently. Raises :class:`InfiniteComplement`
    when the generators share a common factor.
    """
    g = sorted({int(x) for x in gens})
    if not g:
        raise ValueError("need at least one generator")
    if g[0] < 1:
        raise ValueError("generators must be positive")
    if reduce(math.gcd, g) != 1:
        raise InfiniteComplement(f"gcd of {g} is not 1")
    m = g[0]
    size = g[0] * g[-1] + g[-1] + 1
    run = (1 << m) - 1
    while True:
        mask = (1 << size) - 1
        members = 1
        while True:
            new = members
            for x in g:
                new |= (new << x) & mask
            if new == members:
                break
            members = new
        # m consecutive members imply everything beyond is a member
        for c in range(size - m + 1):
            if (members >> c) & run == run:
                return Semigroup(members & ((1 << (c + 1)) - 1), c + 1)
        size *= 2


def from_gaps(gaps: Iterable[int]) -> Semigroup:
    """Semigroup whose gap set is exactly the given strictly increasing list.

    Raises :class:`NotClosed` if the complement is not closed under
    addition; unsorted or non-positive input is rejected outright.
    """
    gl = [int(x) for x in gaps]
    if not gl:
        return Semigroup(0, 0)
    if gl[0] < 1 or any(a >= b for a, b in zip(gl, gl[1:])):
        raise ValueError("gaps must be strictly increasing positive integers")
    c = gl[-1] + 1
    gapbits = 0
    for x in gl:
        gapbits |= 1 << x
    bits = ((1 << c) - 1) & ~gapbits
    nonzero = bits & ~1
    for x in _iter_bits(nonzero):
        bad = (nonzero << x) & gapbits
        if bad:
            s = (bad & -bad).bit_length() - 1
            raise NotClosed(f"{x} + {s - x} = {s} is listed as a gap")
    return Semigroup(bits, c)


def invariants(s: Semigroup) -> Invariants:
    """Multiplicity, genus, Frobenius number, conductor and type of ``s``."""
    return Invariants(s.multiplicity, s.genus, s.frobenius, s.conductor, s.type)


def pseudo_frobenius(s: Semigroup) -> tuple[int, ...]:
    """Gaps x with x + h a member for every nonzero member h, ascending."""
    if s.is_natural:
        raise EmptySemigroupComplement("the full monoid has no gaps")
    return s.pf


def minimal_generators(s: Semigroup) -> tuple[int, ...]:
    """Members not expressible as a sum of two nonzero members, ascending."""
    if s.is_natural:
        return (1,)
    c, bound = s.conductor, s.frobenius + s.multiplicity
    ext = s._bits | (((1 << (bound + 1)) - 1) ^ ((1 << c) - 1))
    extnz = ext & ~1
    decomposable = 0
    for v in _iter_bits(extnz):
        decomposable |= extnz << v
        if 2 * v > bound:
            break
    return tuple(_iter_bits(extnz & ~decomposable & ((1 << (bound + 1)) - 1)))


def intersect(a: Semigroup, b: Semigroup) -> Semigroup:
    """Intersection; its gap set is the union of the two gap sets."""
    c = max(a.conductor, b.conductor)
    full = (1 << c) - 1
    abits = a._bits | (full ^ ((1 << a.conductor) - 1))
    bbits = b._bits | (full ^ ((1 << b.conductor) - 1))
    return Semigroup(abits & bbits, c)


def schubert_index(s: Semigroup) -> tuple[int, ...]:
    """Tuple (l_1 - 1, l_2 - 2, ...) over the ordered gaps; () for no gaps."""
    return tuple(l - j for j, l in enumerate(s.gaps, 1))


def parse_int_list(text: str) -> tuple[int, ...]:
    """Strict comma-separated decimal list; no spaces, no signs."""
    if not _INT_LIST.fullmatch(text):
        raise ValueError(f"expected comma-separated decimals, got {text!r}")
    return tuple(int(x) for x in text.split(","))


def parse_label(text: str) -> Semigroup:
    """Build a semigroup from a ``gens:...`` or ``gaps:...`` encoding."""
    if text.startswith("gens:"):
        return from_generators(parse_int_list(text[5:]))
    if text.startswith("gaps:"):
        body = text[5:]
        return from_gaps(parse_int_list(body) if body else ())
    raise ValueError(f"expected a gens:/gaps: prefix, got {text!r}")


def gaps_label(s: Semigroup) -> str:
    return "gaps:" + ",".join(map(str, s.gaps))


def gens_label(s: Semigroup) -> str:
    return "gens:" + ",".join(map(str, minimal_generators(s)))
