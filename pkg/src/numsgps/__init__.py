"""Exact computation with numerical semigroups.

Membership bitsets with classical invariants, n-fold gap sumsets and the
non-Weierstrass certificate they yield, pseudo-Frobenius gap profiles
described by difference sequences (with a pasting operation that grows
them), irreducible stair-block decompositions, and a per-genus census
engine with a compiled kernel and a pure-Python fallback.
"""

from .buchweitz import SumsetReport, buchweitz_test, gap_sumset
from .census import (
    CensusRow,
    census_range,
    census_row,
    enumerate_genus,
    iter_semigroups,
    rows_to_csv,
)
from .core import (
    Invariants,
    Semigroup,
    from_gaps,
    from_generators,
    gaps_label,
    gens_label,
    intersect,
    invariants,
    minimal_generators,
    parse_int_list,
    parse_label,
    pseudo_frobenius,
    schubert_index,
)
from .decompose import StairBlock, decompose_pf, is_irreducible, stair_block
from .errors import (
    EmptySemigroupComplement,
    GenusTooSmall,
    InfiniteComplement,
    MalformedGapSet,
    NotClosed,
    NotPFSemigroup,
    NotPFShape,
    PasteConditionViolated,
    PreconditionUnverified,
    SemigroupError,
)
from .pfseq import (
    SequenceVerdict,
    build_pf_semigroup,
    diffs_from_schubert,
    diffs_to_offsets,
    is_pf_semigroup,
    offsets_to_diffs,
    paste,
    paste_unchecked,
    pf_failure_reason,
    reverse,
    sufficient_bound,
    verify_sequence,
    verify_window,
)

__version__ = "0.1.0"
