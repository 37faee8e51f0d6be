"""Pure-Python kernels: Kohnert successor generation, closure, labeling.

Diagrams are tuples of column bitmasks: bit ``r - 1`` of ``cols[c - 1]`` is
set iff the cell ``(c, r)`` is occupied. A diagram pair is the two tuples
``(kohnert_cols, ghost_cols)`` of equal length.
"""

from collections import deque


class ResourceLimit(RuntimeError):
    """Closure enumeration exceeded its state cap."""


def successors(kcols, gcols, k_theoretic):
    """All pairs reachable by one (K-)Kohnert move."""
    out = []
    ncols = len(kcols)
    occ = [k | g for k, g in zip(kcols, gcols)]
    top = 0
    for o in occ:
        top |= o
    for r in range(1, top.bit_length() + 1):
        bit = 1 << (r - 1)
        c = ncols - 1
        while c >= 0 and not occ[c] & bit:
            c -= 1
        if c < 0 or gcols[c] & bit:
            continue
        free = ~occ[c] & (bit - 1)
        if not free:
            continue
        dest = 1 << (free.bit_length() - 1)
        between = (bit - 1) & ~((dest << 1) - 1)
        if gcols[c] & between:
            continue
        nk = kcols[:c] + ((kcols[c] & ~bit) | dest,) + kcols[c + 1:]
        out.append((nk, gcols))
        if k_theoretic:
            ng = gcols[:c] + (gcols[c] | bit,) + gcols[c + 1:]
            out.append((nk, ng))
    return out


def closure(kcols, gcols, k_theoretic, cap):
    start = (tuple(kcols), tuple(gcols))
    seen = {start}
    queue = deque([start])
    while queue:
        k, g = queue.popleft()
        for nxt in successors(k, g, k_theoretic):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise ResourceLimit(f"closure exceeded {cap} states")
                queue.append(nxt)
    return seen


def label_columns(kcols, content):
    """Kohnert labeling of a ghost-free diagram.

    ``content[c]`` is the ascending tuple of numbers allowed in column
    ``c + 1``. Returns, per column, the numbers in ascending row order, or
    ``None`` when the algorithm terminates early.
    """
    ncols = len(content)
    if len(kcols) != ncols:
        return None
    out = [()] * ncols
    nxt = {}
    for c in range(ncols - 1, -1, -1):
        col = kcols[c]
        avail = list(content[c])
        if bin(col).count("1") != len(avail):
            return None
        filled = []
        pos = {}
        r = 0
        while col:
            r += 1
            if not col & 1:
                col >>= 1
                continue
            col >>= 1
            for idx, i in enumerate(avail):
                if nxt.get(i, 0) <= r:
                    break
            else:
                return None
            if i < r:
                return None
            del avail[idx]
            filled.append(i)
            pos[i] = r
        out[c] = tuple(filled)
        nxt = pos
    return tuple(out)
