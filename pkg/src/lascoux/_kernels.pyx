# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ``_kernels_py`` for masks below 2**63."""

from collections import deque

from lascoux._kernels_py import ResourceLimit

ctypedef unsigned long long u64

cdef enum:
    MAXCOLS = 64
    MAXROWS = 64


cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _bitlen(u64 x) nogil:
    if x == 0:
        return 0
    return 64 - __builtin_clzll(x)


cdef list _successors(tuple kcols, tuple gcols, bint k_theoretic):
    cdef int ncols = len(kcols)
    cdef u64 k[MAXCOLS]
    cdef u64 g[MAXCOLS]
    cdef u64 occ[MAXCOLS]
    cdef u64 top = 0, bit, free, dest, between
    cdef int c, r, nrows
    cdef list out = []
    if ncols > MAXCOLS:
        raise OverflowError("too many columns for compiled kernel")
    for c in range(ncols):
        k[c] = kcols[c]
        g[c] = gcols[c]
        occ[c] = k[c] | g[c]
        top |= occ[c]
    nrows = _bitlen(top)
    for r in range(1, nrows + 1):
        bit = (<u64>1) << (r - 1)
        c = ncols - 1
        while c >= 0 and not (occ[c] & bit):
            c -= 1
        if c < 0 or (g[c] & bit):
            continue
        free = (~occ[c]) & (bit - 1)
        if free == 0:
            continue
        dest = (<u64>1) << (_bitlen(free) - 1)
        between = (bit - 1) & ~((dest << 1) - 1)
        if g[c] & between:
            continue
        nk = kcols[:c] + ((k[c] & ~bit) | dest,) + kcols[c + 1:]
        out.append((nk, gcols))
        if k_theoretic:
            ng = gcols[:c] + (g[c] | bit,) + gcols[c + 1:]
            out.append((nk, ng))
    return out


def successors(kcols, gcols, k_theoretic):
    return _successors(tuple(kcols), tuple(gcols), k_theoretic)


def closure(kcols, gcols, k_theoretic, cap):
    cdef tuple start = (tuple(kcols), tuple(gcols))
    cdef set seen = {start}
    cdef Py_ssize_t limit = cap
    queue = deque([start])
    pop = queue.popleft
    push = queue.append
    cdef bint kt = k_theoretic
    while queue:
        kk, gg = pop()
        for nxt in _successors(kk, gg, kt):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > limit:
                    raise ResourceLimit(f"closure exceeded {cap} states")
                push(nxt)
    return seen


def label_columns(kcols, content):
    cdef int ncols = len(content)
    cdef int c, r, idx, j, navail, nfill, i
    cdef u64 col
    cdef int avail[MAXROWS]
    cdef int nxt_row[MAXROWS + 2]
    cdef int cur_row[MAXROWS + 2]
    cdef int filled[MAXROWS]
    if len(kcols) != ncols:
        return None
    if ncols > MAXCOLS:
        raise OverflowError("too many columns for compiled kernel")
    out = [()] * ncols
    for j in range(MAXROWS + 2):
        nxt_row[j] = 0
    for c in range(ncols - 1, -1, -1):
        col = kcols[c]
        allowed = content[c]
        navail = len(allowed)
        if navail > MAXROWS:
            raise OverflowError("too many rows for compiled kernel")
        if __builtin_popcountll(col) != navail:
            return None
        for j in range(navail):
            avail[j] = allowed[j]
            if avail[j] < 1 or avail[j] > MAXROWS:
                raise OverflowError("label out of compiled range")
        for j in range(MAXROWS + 2):
            cur_row[j] = 0
        nfill = 0
        r = 0
        while col:
            r += 1
            if not (col & 1):
                col >>= 1
                continue
            col >>= 1
            idx = -1
            for j in range(navail):
                if nxt_row[avail[j]] <= r:
                    idx = j
                    break
            if idx < 0:
                return None
            i = avail[idx]
            if i < r:
                return None
            for j in range(idx, navail - 1):
                avail[j] = avail[j + 1]
            navail -= 1
            filled[nfill] = i
            nfill += 1
            cur_row[i] = r
        out[c] = tuple([filled[j] for j in range(nfill)])
        for j in range(MAXROWS + 2):
            nxt_row[j] = cur_row[j]
    return tuple(out)
