# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Native Redelmeier enumeration of fixed hexagonal polyominoes.

Mirrors ``hexpoly._pykernels.tally`` exactly, including the search order
and the branch partitioning, so both backends give identical tables.
"""
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport calloc, free

cdef enum:
    MAXN = 31

cdef extern from * nogil:
    int __builtin_popcountll(unsigned long long)
    int __builtin_ctzll(unsigned long long)
    int __builtin_clzll(unsigned long long)


cdef struct Search:
    int n
    int width
    int offset
    int split_depth
    int nparts
    int part
    int64_t split_index
    char *seen
    uint64_t colmask[MAXN + 1]
    int64_t *hist  # (n + 1) x (n + 2), row = area, column = level code


cdef inline int level_code(Search *s) noexcept nogil:
    """Minimal cheesy level of the current polyomino, or n + 1 if none."""
    cdef int c = 0, level = 0, comps, gap
    cdef uint64_t m, prev = 0, low, lower, upper, shadow
    while c < s.n:
        m = s.colmask[c]
        if m == 0:
            break
        comps = __builtin_popcountll(m & ~(m << 1))
        if comps > 2 or (c == 0 and comps != 1):
            return s.n + 1
        low = m & (~m + 1)
        lower = m & ~(m + low)
        upper = m ^ lower
        if c > 0:
            shadow = prev | (prev >> 1)
            if (lower & shadow) == 0:
                return s.n + 1
            if upper and (upper & shadow) == 0:
                return s.n + 1
        if upper:
            gap = __builtin_ctzll(upper) - (63 - __builtin_clzll(lower)) - 1
            if gap > level:
                level = gap
        prev = m
        c += 1
    return level


cdef void grow(Search *s, int *untried, int nuntried, int depth) noexcept nogil:
    cdef int i, k, cell, col, row, nc, nr, nnew
    cdef int nbc[6]
    cdef int nbr[6]
    cdef int *stack = untried + nuntried
    cdef int nstack
    cdef bint counted
    while nuntried > 0:
        nuntried -= 1
        cell = untried[nuntried]
        col = cell // s.width
        row = cell % s.width - s.offset

        counted = True
        if depth + 1 == s.split_depth:
            counted = (s.split_index % s.nparts) == s.part
            s.split_index += 1
            if not counted:
                continue
        elif depth + 1 < s.split_depth:
            counted = s.part == 0

        s.colmask[col] |= (<uint64_t>1) << (row + s.offset)
        if counted:
            s.hist[(depth + 1) * (s.n + 2) + level_code(s)] += 1

        if depth + 1 < s.n:
            # new neighbours go on top of a copy of the remaining untried stack
            for i in range(nuntried):
                stack[i] = untried[i]
            nstack = nuntried
            nbc[0] = col;     nbr[0] = row + 1
            nbc[1] = col;     nbr[1] = row - 1
            nbc[2] = col + 1; nbr[2] = row
            nbc[3] = col + 1; nbr[3] = row - 1
            nbc[4] = col - 1; nbr[4] = row
            nbc[5] = col - 1; nbr[5] = row + 1
            nnew = 0
            for k in range(6):
                nc = nbc[k]
                nr = nbr[k]
                if nc < 0 or (nc == 0 and nr < 0) or nc >= s.n:
                    continue
                if nr <= -s.n or nr >= s.n:
                    continue
                i = nc * s.width + nr + s.offset
                if s.seen[i]:
                    continue
                s.seen[i] = 1
                stack[nstack] = i
                nstack += 1
                nnew += 1
            grow(s, stack, nstack, depth + 1)
            for k in range(nnew):
                s.seen[stack[nstack - 1 - k]] = 0

        s.colmask[col] &= ~((<uint64_t>1) << (row + s.offset))


def tally(int n, int split_depth=0, int nparts=1, int part=0):
    """Histogram ``hist[area][level]`` over all fixed polyominoes of area <= n.

    ``level`` is the minimal cheesy level (0 = column-convex) or ``n + 1``
    for polyominoes that are cheesy at no level.  With ``nparts > 1`` only
    the subtrees rooted at search nodes of depth ``split_depth`` whose
    index is ``part`` modulo ``nparts`` are explored.
    """
    if n < 1 or n > MAXN:
        raise ValueError(f"native kernel supports 1 <= n <= {MAXN}")
    if not (0 <= part < nparts):
        raise ValueError("need 0 <= part < nparts")
    cdef Search s
    cdef int ncells, i
    cdef int *untried
    s.n = n
    s.offset = n
    s.width = 2 * n + 1
    s.split_depth = split_depth if nparts > 1 else 0
    s.nparts = nparts
    s.part = part
    s.split_index = 0
    for i in range(MAXN + 1):
        s.colmask[i] = 0
    ncells = n * s.width
    s.seen = <char *> calloc(ncells, sizeof(char))
    s.hist = <int64_t *> calloc((n + 1) * (n + 2), sizeof(int64_t))
    # each level pushes at most 5 new cells on top of a copy of its parent
    untried = <int *> calloc((n + 1) * (5 * n + 8), sizeof(int))
    if s.seen == NULL or s.hist == NULL or untried == NULL:
        free(s.seen); free(s.hist); free(untried)
        raise MemoryError()
    try:
        root = 0 * s.width + 0 + s.offset
        s.seen[root] = 1
        untried[0] = root
        with nogil:
            grow(&s, untried, 1, 0)
        return [[s.hist[a * (n + 2) + k] for k in range(n + 2)] for a in range(n + 1)]
    finally:
        free(s.seen)
        free(s.hist)
        free(untried)
