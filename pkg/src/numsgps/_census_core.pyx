# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled census kernel.

Bit-for-bit twin of ``numsgps._census_py`` (see its docstring for the
tree walk); membership lives in a fixed 256-bit window with every bit at
or above the conductor set, so a child is the parent with one bit
cleared. The walk releases the GIL, so ``threads > 1`` fans subtrees out
to real OS threads; tallies are summed per genus, which keeps the counts
deterministic for any scheduling.
"""

import threading
from array import array

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64

NAME = "compiled"
MAX_GENUS = 64

cdef enum:
    NWORDS = 4
    GENS_CAP = 80
    MAX_SEEDS = 2048
    PAR_CUT = 12
    NGMAX = 65  # MAX_GENUS + 1

cdef struct Node:
    u64 mem[NWORDS]
    int c
    int m
    int genus
    int ngens
    unsigned short gens[GENS_CAP]


cdef inline bint getbit(const u64* w, int i) noexcept nogil:
    return (w[i >> 6] >> (i & 63)) & 1


cdef inline void clearbit(u64* w, int i) noexcept nogil:
    w[i >> 6] &= ~((<u64>1) << (i & 63))


cdef inline u64 lowmask(int n) noexcept nogil:
    # bits [0, n) set; n in [0, 64]
    if n >= 64:
        return <u64>0 - 1
    return ((<u64>1) << n) - 1


cdef inline u64 window(const u64* w, int s, int i) noexcept nogil:
    # word i of (w >> s); callers keep s + 64*i + 64 inside the bitmap
    cdef int q = s >> 6
    cdef int b = s & 63
    if b == 0:
        return w[q + i]
    return (w[q + i] >> b) | (w[q + i + 1] << (64 - b))


cdef void make_child(const Node* p, int gi, Node* ch) noexcept nogil:
    cdef int x = p.gens[gi]
    cdef int m = p.m
    cdef int z, v, j, n
    cdef bint split
    memcpy(ch.mem, p.mem, sizeof(ch.mem))
    clearbit(ch.mem, x)
    ch.c = x + 1
    ch.genus = p.genus + 1
    if x == m:
        ch.m = m + 1
        n = 0
        for v in range(m + 1, 2 * m + 2):
            ch.gens[n] = <unsigned short>v
            n += 1
        ch.ngens = n
        return
    ch.m = m
    n = 0
    for j in range(gi + 1, p.ngens):
        ch.gens[n] = p.gens[j]
        n += 1
    # x + m stays a minimal generator unless it splits as v + (z - v)
    z = x + m
    split = False
    v = m
    while 2 * v <= z:
        if getbit(ch.mem, v) and getbit(ch.mem, z - v):
            split = True
            break
        v += 1
    if not split:
        ch.gens[n] = <unsigned short>z
        n += 1
    ch.ngens = n


cdef int pair_sumset_size(const Node* nd) noexcept nogil:
    cdef u64 g0, g1, s0, s1
    cdef u64 acc[NWORDS]
    cdef int c = nd.c, b, i, total
    if c <= 64:
        g0 = (~nd.mem[0]) & lowmask(c)
        g1 = 0
    else:
        g0 = ~nd.mem[0]
        g1 = (~nd.mem[1]) & lowmask(c - 64)
    for i in range(NWORDS):
        acc[i] = 0
    s0 = g0
    s1 = g1
    while s0:
        b = __builtin_ctzll(s0)
        s0 &= s0 - 1
        if b == 0:
            acc[0] |= g0
            acc[1] |= g1
        else:
            acc[0] |= g0 << b
            acc[1] |= (g0 >> (64 - b)) | (g1 << b)
            acc[2] |= g1 >> (64 - b)
    while s1:
        b = __builtin_ctzll(s1)
        s1 &= s1 - 1
        if b == 0:
            acc[1] |= g0
            acc[2] |= g1
        else:
            acc[1] |= g0 << b
            acc[2] |= (g0 >> (64 - b)) | (g1 << b)
            acc[3] |= g1 >> (64 - b)
    total = 0
    for i in range(NWORDS):
        total += __builtin_popcountll(acc[i])
    return total


cdef bint node_is_pf(const Node* nd) noexcept nogil:
    # PF profile: every gap above m absorbs all nonzero members, none below does
    cdef int c = nd.c, m = nd.m, x, hw
    cdef u64 gw0, gw1, mz0, mz1, v0, v1
    if c <= 64:
        gw0 = (~nd.mem[0]) & lowmask(c)
        gw1 = 0
        mz0 = nd.mem[0] & lowmask(c) & ~(<u64>1)
        mz1 = 0
    else:
        gw0 = ~nd.mem[0]
        gw1 = (~nd.mem[1]) & lowmask(c - 64)
        mz0 = nd.mem[0] & ~(<u64>1)
        mz1 = nd.mem[1] & lowmask(c - 64)
    while gw0 or gw1:
        if gw0:
            x = __builtin_ctzll(gw0)
            gw0 &= gw0 - 1
        else:
            x = 64 + __builtin_ctzll(gw1)
            gw1 &= gw1 - 1
        v0 = mz0 & ~window(nd.mem, x, 0)
        v1 = mz1 & ~window(nd.mem, x, 1)
        hw = c - x
        if hw >= 64:
            v1 &= lowmask(hw - 64)
        else:
            v0 &= lowmask(hw)
            v1 = 0
        if ((v0 | v1) == 0) != (x > m):
            return False
    return True


cdef inline void tally(const Node* nd, int g_lo,
                       long long* ns, long long* b2, long long* bp) noexcept nogil:
    if nd.genus < g_lo:
        return
    ns[nd.genus] += 1
    if nd.genus >= 2 and pair_sumset_size(nd) > 3 * (nd.genus - 1):
        b2[nd.genus] += 1
        if node_is_pf(nd):
            bp[nd.genus] += 1


cdef void walk(Node* nd, int g_lo, int g_hi,
               long long* ns, long long* b2, long long* bp) noexcept nogil:
    cdef Node ch
    cdef int i
    tally(nd, g_lo, ns, b2, bp)
    if nd.genus >= g_hi:
        return
    for i in range(nd.ngens):
        make_child(nd, i, &ch)
        walk(&ch, g_lo, g_hi, ns, b2, bp)


cdef void init_root(Node* nd) noexcept nogil:
    memset(nd.mem, 0xFF, sizeof(nd.mem))
    nd.c = 0
    nd.m = 1
    nd.genus = 0
    nd.ngens = 1
    nd.gens[0] = 1


cdef int collect(Node* nd, int cut, int g_lo, Node* seeds, int* nseeds,
                 long long* ns, long long* b2, long long* bp) noexcept nogil:
    cdef Node ch
    cdef int i
    if nd.genus == cut:
        if nseeds[0] >= MAX_SEEDS:
            return -1
        seeds[nseeds[0]] = nd[0]
        nseeds[0] += 1
        return 0
    tally(nd, g_lo, ns, b2, bp)
    for i in range(nd.ngens):
        make_child(nd, i, &ch)
        if collect(&ch, cut, g_lo, seeds, nseeds, ns, b2, bp) < 0:
            return -1
    return 0


def _run_seeds(size_t seeds_addr, int nseeds, int start, int step,
               int g_lo, int g_hi, long long[::1] out):
    """Walk seeds start, start+step, ... into a per-thread tally buffer."""
    cdef Node* seeds = <Node*>seeds_addr
    cdef Node nd
    cdef int i
    cdef long long* ns = &out[0]
    cdef long long* b2 = &out[g_hi + 1]
    cdef long long* bp = &out[2 * (g_hi + 1)]
    with nogil:
        i = start
        while i < nseeds:
            nd = seeds[i]
            walk(&nd, g_lo, g_hi, ns, b2, bp)
            i += step


def census_counts(int g_lo, int g_hi, int threads=1):
    """List of (ns, b2s, b2pfs) tuples for each genus in [g_lo, g_hi]."""
    if g_lo < 0 or g_hi < g_lo:
        raise ValueError("need 0 <= g_lo <= g_hi")
    if g_hi > MAX_GENUS:
        raise ValueError(f"compiled kernel supports genus <= {MAX_GENUS}")
    cdef long long ns[NGMAX]
    cdef long long b2[NGMAX]
    cdef long long bp[NGMAX]
    memset(ns, 0, NGMAX * sizeof(long long))
    memset(b2, 0, NGMAX * sizeof(long long))
    memset(bp, 0, NGMAX * sizeof(long long))
    cdef Node root
    init_root(&root)
    cdef Node* seeds = NULL
    cdef int nseeds = 0
    cdef int cut, rc, g, k
    cdef int width = g_hi + 1
    if threads <= 1 or g_hi <= PAR_CUT + 1:
        with nogil:
            walk(&root, g_lo, g_hi, ns, b2, bp)
        return [(ns[g], b2[g], bp[g]) for g in range(g_lo, g_hi + 1)]
    cut = PAR_CUT if PAR_CUT < g_hi - 1 else g_hi - 1
    seeds = <Node*>malloc(MAX_SEEDS * sizeof(Node))
    if seeds == NULL:
        raise MemoryError()
    try:
        with nogil:
            rc = collect(&root, cut, g_lo, seeds, &nseeds, ns, b2, bp)
        if rc < 0:  # seed overflow cannot happen at PAR_CUT, but stay safe
            memset(ns, 0, NGMAX * sizeof(long long))
            memset(b2, 0, NGMAX * sizeof(long long))
            memset(bp, 0, NGMAX * sizeof(long long))
            with nogil:
                walk(&root, g_lo, g_hi, ns, b2, bp)
            return [(ns[g], b2[g], bp[g]) for g in range(g_lo, g_hi + 1)]
        bufs = [array("q", [0] * (3 * width)) for _ in range(threads)]
        workers = [
            threading.Thread(
                target=_run_seeds,
                args=(<size_t>seeds, nseeds, k, threads, g_lo, g_hi, bufs[k]),
            )
            for k in range(threads)
        ]
        for t in workers:
            t.start()
        for t in workers:
            t.join()
        for buf in bufs:
            for g in range(width):
                ns[g] += buf[g]
                b2[g] += buf[width + g]
                bp[g] += buf[2 * width + g]
    finally:
        free(seeds)
    return [(ns[g], b2[g], bp[g]) for g in range(g_lo, g_hi + 1)]
