"""Pure-Python census kernel.

Bit-for-bit twin of the compiled kernel in ``_census_core``; selected by
``numsgps.census`` when the extension is missing or explicitly requested.

The semigroup tree is walked depth-first from the full monoid. A node is
``(mem, c, m, genus, gens)`` where ``mem`` is an int bitset of membership
over a fixed window with every bit at or above the conductor ``c`` set,
``m`` is the multiplicity and ``gens`` the minimal generators above the
Frobenius number, ascending. The children of a node drop one such
generator x each; the child's generator list is the parent's tail after x
plus possibly ``x + m``, which stays minimal exactly when it has no
two-member decomposition avoiding x. Dropping the multiplicity itself
only happens along the spine of gap sets ``{1..g}`` and bumps m by one.

Counting is deterministic for any thread count: per-genus tallies are
sums over disjoint subtrees.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

NAME = "python"
MAX_GENUS = 64
_PAR_CUT = 12  # genus at which subtrees are handed to worker processes


def _root(width: int):
    return ((1 << width) - 1, 0, 1, 0, (1,))


def _children(mem, c, m, genus, gens):
    out = []
    for i, x in enumerate(gens):
        cmem = mem & ~(1 << x)
        if x == m:
            mu = m + 1
            out.append((cmem, x + 1, mu, genus + 1, tuple(range(mu, 2 * mu))))
            continue
        # x + m stays a minimal generator unless it splits as v + (z - v)
        z = x + m
        v = m
        minimal = True
        while 2 * v <= z:
            if (cmem >> v) & 1 and (cmem >> (z - v)) & 1:
                minimal = False
                break
            v += 1
        tail = gens[i + 1:]
        out.append((cmem, x + 1, m, genus + 1, tail + (z,) if minimal else tail))
    return out


def _pair_sumset_size(mem, c):
    gaps = ~mem & ((1 << c) - 1)
    acc = 0
    gw = gaps
    while gw:
        low = gw & -gw
        acc |= gaps << (low.bit_length() - 1)
        gw ^= low
    return acc.bit_count()


def _is_pf(mem, c, m):
    # PF profile: every gap above m absorbs all nonzero members, none below does
    memnz = mem & ((1 << c) - 1) & ~1
    gw = ~mem & ((1 << c) - 1)
    while gw:
        low = gw & -gw
        x = low.bit_length() - 1
        gw ^= low
        viol = memnz & ~(mem >> x) & ((1 << (c - x)) - 1)
        if (viol == 0) != (x > m):
            return False
    return True


def walk_counts(seeds, g_lo, g_hi):
    """Per-genus (ns, b2s, b2pfs) tallies over the subtrees rooted at seeds."""
    ns = [0] * (g_hi + 1)
    b2 = [0] * (g_hi + 1)
    bp = [0] * (g_hi + 1)
    stack = list(seeds)
    while stack:
        node = stack.pop()
        mem, c, m, genus, gens = node
        if genus >= g_lo:
            ns[genus] += 1
            if genus >= 2 and _pair_sumset_size(mem, c) > 3 * (genus - 1):
                b2[genus] += 1
                if _is_pf(mem, c, m):
                    bp[genus] += 1
        if genus < g_hi:
            stack.extend(_children(*node))
    return ns, b2, bp


def _walk_args(args):
    return walk_counts(*args)


def census_counts(g_lo: int, g_hi: int, threads: int = 1):
    """List of (ns, b2s, b2pfs) tuples for each genus in [g_lo, g_hi]."""
    if g_lo < 0 or g_hi < g_lo:
        raise ValueError("need 0 <= g_lo <= g_hi")
    width = 4 * g_hi + 8
    root = _root(width)
    if threads <= 1 or g_hi <= _PAR_CUT + 1:
        ns, b2, bp = walk_counts([root], g_lo, g_hi)
    else:
        cut = min(_PAR_CUT, g_hi - 1)
        ns = [0] * (g_hi + 1)
        b2 = [0] * (g_hi + 1)
        bp = [0] * (g_hi + 1)
        seeds = []
        stack = [root]
        while stack:
            node = stack.pop()
            mem, c, m, genus, gens = node
            if genus == cut:
                seeds.append(node)
                continue
            if genus >= g_lo:
                ns[genus] += 1
                if genus >= 2 and _pair_sumset_size(mem, c) > 3 * (genus - 1):
                    b2[genus] += 1
                    if _is_pf(mem, c, m):
                        bp[genus] += 1
            stack.extend(_children(*node))
        chunks = [seeds[i::threads] for i in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(_walk_args, [(ch, g_lo, g_hi) for ch in chunks if ch])
        for pns, pb2, pbp in parts:
            for g in range(g_hi + 1):
                ns[g] += pns[g]
                b2[g] += pb2[g]
                bp[g] += pbp[g]
    return [(ns[g], b2[g], bp[g]) for g in range(g_lo, g_hi + 1)]


def iter_nodes(target_genus: int):
    """Yield every tree node of exactly the target genus, depth-first."""
    width = 4 * target_genus + 8
    stack = [_root(width)]
    while stack:
        node = stack.pop()
        if node[3] == target_genus:
            yield node
            continue
        stack.extend(_children(*node))


def iter_all_nodes(max_genus: int):
    """Yield every tree node of genus at most ``max_genus``, depth-first."""
    width = 4 * max_genus + 8
    stack = [_root(width)]
    while stack:
        node = stack.pop()
        yield node
        if node[3] < max_genus:
            stack.extend(_children(*node))
