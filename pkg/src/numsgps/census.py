"""Per-genus census of numerical semigroups.

Counts, for each genus, all numerical semigroups (``ns``), those passing
the pair-sumset non-Weierstrass test (``b2s``) and the PF-profile subset
of those (``b2pfs``). The heavy lifting runs in a kernel selected at
import: the compiled extension when available, otherwise the pure-Python
twin. Set ``NUMSGPS_BACKEND=python`` (or ``compiled``) to force one.

Counts are bit-exact reproducible for any thread count; both kernels sum
per-genus tallies over disjoint subtrees.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterator

from . import _census_py
from .core import Semigroup

__all__ = [
    "BACKEND",
    "MAX_GENUS",
    "CensusRow",
    "enumerate_genus",
    "iter_semigroups",
    "census_row",
    "census_range",
    "rows_to_csv",
    "default_threads",
]

_choice = os.environ.get("NUMSGPS_BACKEND", "").strip().lower()
if _choice in ("py", "python"):
    _kernel = _census_py
elif _choice in ("c", "compiled", "ext"):
    from . import _census_core as _kernel  # noqa: F401  (fails loudly if absent)
else:
    try:
        from . import _census_core as _kernel
    except ImportError:
        _kernel = _census_py

BACKEND: str = _kernel.NAME
MAX_GENUS: int = 64


@dataclass(frozen=True)
class CensusRow:
    genus: int
    ns: int
    b2s: int
    b2pfs: int

    def __post_init__(self):
        if not 0 <= self.b2pfs <= self.b2s <= self.ns:
            raise ValueError(f"inconsistent counts in {self!r}")


def default_threads() -> int:
    """Thread count from NUMSGPS_THREADS, defaulting to 1."""
    raw = os.environ.get("NUMSGPS_THREADS", "").strip()
    if raw:
        n = int(raw)
        if n < 1:
            raise ValueError("NUMSGPS_THREADS must be >= 1")
        return n
    return 1


def _node_semigroup(node) -> Semigroup:
    mem, c, _m, _genus, _gens = node
    return Semigroup(mem & ((1 << c) - 1), c) if c else Semigroup(0, 0)


def enumerate_genus(genus: int, visitor: Callable[[Semigroup], None] | None = None) -> int:
    """Visit every numerical semigroup of the given genus exactly once.

    Pure-Python tree walk; returns the count. Order is deterministic.
    """
    if genus < 0:
        raise ValueError("genus must be >= 0")
    count = 0
    for node in _census_py.iter_nodes(genus):
        count += 1
        if visitor is not None:
            visitor(_node_semigroup(node))
    return count


def iter_semigroups(max_genus: int) -> Iterator[Semigroup]:
    """Every numerical semigroup of genus at most ``max_genus``."""
    if max_genus < 0:
        raise ValueError("genus must be >= 0")
    for node in _census_py.iter_all_nodes(max_genus):
        yield _node_semigroup(node)


def census_range(g_lo: int, g_hi: int, threads: int | None = None) -> list[CensusRow]:
    """Census rows for every genus in [g_lo, g_hi], in order."""
    if g_lo < 2 or g_hi < g_lo:
        raise ValueError("need 2 <= g_lo <= g_hi")
    if g_hi > MAX_GENUS:
        raise ValueError(f"census supports genus <= {MAX_GENUS}")
    if threads is None:
        threads = default_threads()
    counts = _kernel.census_counts(g_lo, g_hi, threads)
    return [CensusRow(g, *counts[g - g_lo]) for g in range(g_lo, g_hi + 1)]


def census_row(genus: int, threads: int | None = None) -> CensusRow:
    """Census counts for a single genus (>= 2)."""
    return census_range(genus, genus, threads)[0]


def rows_to_csv(rows) -> str:
    """CSV with the exact header ``genus,ns,b2s,b2pfs`` and one row each."""
    lines = ["genus,ns,b2s,b2pfs"]
    lines.extend(f"{r.genus},{r.ns},{r.b2s},{r.b2pfs}" for r in rows)
    return "\n".join(lines) + "\n"
