"""Pseudo-Frobenius gap profiles and the difference-sequence family.

A semigroup has the *PF profile* when its gap set is exactly
``{1..g-t}`` plus its pseudo-Frobenius set, with every pseudo-Frobenius
number above the multiplicity. Such semigroups are described by a tuple
of positive differences ``diffs = (d_1, ..., d_{t-1})``: with
``m = g - t + 1`` the large gaps sit at ``2m - a_i`` where the *offsets*
``a_1 > ... > a_t = 1`` are the suffix sums of ``diffs`` plus one.

Two checks are exposed for a difference sequence:

* :func:`sufficient_bound` — a closed-form genus bound. If the distinct
  pairwise offset sums number more than ``3(t-1)``, every genus from
  ``2*sum(diffs) + t + 1`` on gives a semigroup with the PF profile whose
  doubled gap set passes the pair-sumset test. The bound is sufficient,
  not minimal: smaller genera may work and must be checked directly.
* :func:`verify_sequence` — the direct oracle: build the gap set for one
  genus and run the PF and sumset predicates on it.

:func:`paste` splices two sequences that satisfy the sufficient
conditions around a join value ``k`` smaller than the head's final entry;
the result works for every genus at or past the sum of the two input
genera plus ``2k - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import core
from .buchweitz import buchweitz_test
from .core import Semigroup
from .errors import (
    EmptySemigroupComplement,
    MalformedGapSet,
    NotPFShape,
    PasteConditionViolated,
    PreconditionUnverified,
)

__all__ = [
    "SequenceVerdict",
    "diffs_to_offsets",
    "offsets_to_diffs",
    "build_pf_semigroup",
    "is_pf_semigroup",
    "pf_failure_reason",
    "sufficient_bound",
    "verify_sequence",
    "verify_window",
    "reverse",
    "paste",
    "paste_unchecked",
    "diffs_from_schubert",
    "parse_seq_label",
    "seq_label",
]


@dataclass(frozen=True)
class SequenceVerdict:
    """Outcome of checking one difference sequence.

    ``bound`` is the smallest genus certified by the sufficient
    conditions, present iff ``pair_sums > 3*(t-1)``. ``checked`` holds
    (genus, ok) pairs from direct per-genus verification.
    """

    diffs: tuple[int, ...]
    pair_sums: int
    bound: int | None
    checked: tuple[tuple[int, bool], ...] = ()

    @property
    def t(self) -> int:
        return len(self.diffs) + 1


def _validated(diffs) -> tuple[int, ...]:
    d = tuple(int(x) for x in diffs)
    if any(x < 1 for x in d):
        raise ValueError("difference entries must be positive integers")
    return d


def diffs_to_offsets(diffs) -> tuple[int, ...]:
    """Suffix sums plus one: strictly decreasing offsets ending at 1."""
    d = _validated(diffs)
    out = [1]
    for x in reversed(d):
        out.append(out[-1] + x)
    return tuple(reversed(out))


def offsets_to_diffs(offsets) -> tuple[int, ...]:
    """Inverse of :func:`diffs_to_offsets`."""
    a = tuple(int(x) for x in offsets)
    if not a or a[-1] != 1 or any(p <= q for p, q in zip(a, a[1:])):
        raise ValueError("offsets must be strictly decreasing and end at 1")
    return tuple(p - q for p, q in zip(a, a[1:]))


def build_pf_semigroup(diffs, genus: int) -> Semigroup:
    """Gap set {1..g-t} plus {2m - a_i} for the offsets of ``diffs``."""
    offs = diffs_to_offsets(diffs)
    t = len(offs)
    if genus < t:
        raise MalformedGapSet(f"genus {genus} below the type {t}")
    m = genus - t + 1
    if 2 * m - offs[0] <= genus - t:
        raise MalformedGapSet(
            f"offset {offs[0]} collides with the initial gap run at genus {genus}")
    gaps = tuple(range(1, genus - t + 1)) + tuple(2 * m - a for a in offs)
    return core.from_gaps(gaps)


def pf_failure_reason(s: Semigroup) -> str | None:
    """None when ``s`` has the PF profile, else a human-readable witness."""
    low = min(s.pf)
    if low <= s.multiplicity:
        return (f"smallest pseudo-Frobenius number {low} does not exceed "
                f"the multiplicity {s.multiplicity}")
    head = s.genus - s.type
    expected = set(range(1, head + 1)).union(s.pf)
    for x in s.gaps:
        if x not in expected:
            return f"gap {x} not in {{1..{head}}} u PF"
    for x in sorted(expected):
        if x not in set(s.gaps):
            return f"{x} should be a gap but is a member"
    return None


def is_pf_semigroup(s: Semigroup) -> bool:
    """Whether the gap set is {1..g-t} plus PF with min PF > multiplicity."""
    if s.is_natural:
        raise EmptySemigroupComplement("the full monoid has no gaps")
    return pf_failure_reason(s) is None


def sufficient_bound(diffs) -> SequenceVerdict:
    """Closed-form genus bound for a difference sequence (type >= 2 only)."""
    offs = diffs_to_offsets(diffs)
    t = len(offs)
    if t < 2:
        raise ValueError("the bound needs at least one difference (type >= 2)")
    sums = {a + b for a in offs for b in offs}
    total = offs[0] - 1  # equals sum(diffs)
    bound = 2 * total + t + 1 if len(sums) > 3 * (t - 1) else None
    return SequenceVerdict(diffs=tuple(diffs), pair_sums=len(sums), bound=bound)


def verify_sequence(diffs, genus: int) -> bool:
    """Direct oracle: build the gap set and test both defining predicates."""
    s = build_pf_semigroup(diffs, genus)
    if not is_pf_semigroup(s):
        return False
    return buchweitz_test(s, 2).is_buchweitz


def verify_window(diffs, g_lo: int, g_hi: int) -> tuple[tuple[int, bool], ...]:
    """Run the direct oracle for every genus in [g_lo, g_hi]."""
    if g_lo > g_hi:
        raise ValueError("empty genus window")
    return tuple((g, verify_sequence(diffs, g)) for g in range(g_lo, g_hi + 1))


def checked_verdict(diffs, g_lo: int, g_hi: int) -> SequenceVerdict:
    """Sufficient-bound verdict augmented with direct checks on a window."""
    return replace(sufficient_bound(diffs), checked=verify_window(diffs, g_lo, g_hi))


def reverse(diffs) -> tuple[int, ...]:
    """Reversed sequence; it has the same pair-sum count and bound."""
    return tuple(reversed(_validated(diffs)))


def paste(head, head_genus: int, tail, tail_genus: int, k: int):
    """Splice ``head + (k,) + tail`` and return it with its genus bound.

    Both inputs must satisfy their own sufficient conditions at the given
    genera (else :class:`PreconditionUnverified`), and the head's final
    entry must exceed ``k`` (else :class:`PasteConditionViolated`); the
    counterexamples with final entry equal to ``k`` genuinely fail.
    Use :func:`paste_unchecked` to experiment without the guarantees.
    """
    head, tail = _validated(head), _validated(tail)
    if not head or not tail:
        raise ValueError("paste needs two sequences of type >= 2")
    if int(k) < 1:
        raise ValueError("k must be a positive integer")
    if head[-1] <= k:
        raise PasteConditionViolated(
            f"final head entry {head[-1]} must exceed the join value {k}")
    for name, d, g in (("head", head, head_genus), ("tail", tail, tail_genus)):
        verdict = sufficient_bound(d)
        if verdict.bound is None:
            raise PreconditionUnverified(
                f"{name} sequence {d} fails the pair-sum condition")
        if g < verdict.bound:
            raise PreconditionUnverified(
                f"{name} genus {g} is below its sufficient bound {verdict.bound}")
    return head + (int(k),) + tail, head_genus + tail_genus + 2 * int(k) - 1


def paste_unchecked(head, tail, k: int) -> tuple[int, ...]:
    """Splice without verifying either input; no genus guarantee attaches."""
    head, tail = _validated(head), _validated(tail)
    if int(k) < 1:
        raise ValueError("k must be a positive integer")
    return head + (int(k),) + tail


def diffs_from_schubert(alpha) -> tuple[int, ...]:
    """Difference sequence of the family member with Schubert index ``alpha``.

    The index must be weakly increasing with a zero prefix, and its last
    entry must equal ``g - 2t + 1`` for the type ``t`` implied by the
    first nonzero position; anything else raises :class:`NotPFShape`.
    """
    a = tuple(int(x) for x in alpha)
    if not a or any(x < 0 for x in a):
        raise NotPFShape("index must be a non-empty tuple of naturals")
    if any(p > q for p, q in zip(a, a[1:])):
        raise NotPFShape("index must be weakly increasing")
    g = len(a)
    fz = next((i for i, x in enumerate(a) if x), None)
    if fz is None:
        raise NotPFShape("all-zero index has no pseudo-Frobenius block")
    t = g - fz
    if a[-1] != g - 2 * t + 1:
        raise NotPFShape(
            f"last entry {a[-1]} inconsistent with type {t} at genus {g}")
    return tuple(a[i] - a[i - 1] + 1 for i in range(fz + 1, g))


def parse_seq_label(text: str) -> tuple[tuple[int, ...], int | None]:
    """Parse ``seq:1,4,3`` or ``seq:1,4,3@22`` into (diffs, genus-or-None)."""
    if not text.startswith("seq:"):
        raise ValueError(f"expected a seq: prefix, got {text!r}")
    body = text[4:]
    genus = None
    if "@" in body:
        body, _, tail = body.partition("@")
        genus = int(tail)
    return _validated(core.parse_int_list(body)), genus


def seq_label(diffs, genus: int | None = None) -> str:
    body = "seq:" + ",".join(map(str, diffs))
    return body if genus is None else f"{body}@{genus}"
