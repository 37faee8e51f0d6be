"""The raise/drop operators on KD(alpha) and their batch versions.

``sharp(d, g)`` raises a first-column cell into row ``g``; ``flat(d, k)``
drops one into row ``k``. Both return an :class:`OpResult` carrying the row
the cell came from (resp. went to), or ``None`` when undefined. Ghost cells
outside column 1 are carried along untouched; only the Kohnert cells take
part in KD(alpha) membership.

A ``trace`` list, when given, receives one record per elementary step.
"""

from typing import NamedTuple

from lascoux.compositions import bar, big_m_of, support
from lascoux.diagrams import DiagramPair, join_first_column, split_first_column
from lascoux.labeling import column_content, in_kd, label_raw


class OpResult(NamedTuple):
    diagram: DiagramPair
    partner: int


def _move(d, c, src, dst):
    """Move the Kohnert cell ``(c, src)`` to ``(c, dst)``."""
    if src == dst:
        return d
    kcols = list(d.kcols)
    gcols = list(d.gcols)
    sbit, dbit = 1 << (src - 1), 1 << (dst - 1)
    if not kcols[c - 1] & sbit:
        raise ValueError(f"no Kohnert cell at {(c, src)}")
    if (kcols[c - 1] | gcols[c - 1]) & dbit:
        raise ValueError(f"cell {(c, dst)} is occupied")
    kcols[c - 1] = (kcols[c - 1] & ~sbit) | dbit
    return DiagramPair._raw(tuple(kcols), tuple(gcols))


def _first_column(d):
    return d.column(1)[0] if d.ncols else ()


def _record(trace, op, index, result, before, depth):
    if trace is not None:
        trace.append(
            {
                "op": op,
                "g_or_k": index,
                "partner": None if result is None else result.partner,
                "depth": depth,
                "before": before.to_json(),
                "after": None if result is None else result.diagram.to_json(),
            }
        )


def _require_kd(d, alpha):
    if not in_kd(d, alpha):
        raise ValueError(f"{d!r} is not in KD({alpha})")


def sharp_defined(d, g, alpha):
    """``|[g, n] & supp(alpha)| > |(g, n] & K1|``."""
    k1 = _first_column(d)
    return sum(1 for i in support(alpha) if i >= g) > sum(1 for r in k1 if r > g)


def flat_defined(d, k, alpha):
    """``k in K1`` or ``|K1 & (k, n]| > |K2 & (k, n]|``."""
    k1 = _first_column(d)
    k2 = d.column(2)[0]
    return k in k1 or sum(1 for r in k1 if r > k) > sum(1 for r in k2 if r > k)


def sharp_search(d, g, alpha):
    """Raise operator by direct search: the largest ``k <= g`` that keeps KD(alpha)."""
    alpha = tuple(alpha)
    _require_kd(d, alpha)
    for k in sorted((r for r in _first_column(d) if r <= g), reverse=True):
        cand = _move(d, 1, k, g)
        if in_kd(cand, alpha):
            return OpResult(cand, k)
    return None


def sharp_algorithm(d, g, alpha):
    """The label-driven raise; returns ``(D', k, filling)`` or ``None``.

    ``filling`` maps ``(column, row)`` to the number the algorithm leaves
    there; it equals the labeling of ``D'``.
    """
    alpha = tuple(alpha)
    kohnert = d.without_ghosts()
    labels = label_raw(kohnert.kcols, alpha)
    if labels is None:
        raise ValueError(f"{d!r} is not in KD({alpha})")
    if len(alpha) < g or not sharp_defined(d, g, alpha):
        return None
    filling = {}
    for c, nums in enumerate(labels, 1):
        rows, _ = kohnert.column(c)
        filling.update({(c, r): i for r, i in zip(rows, nums)})
    col1 = {r: i for (c, r), i in filling.items() if c == 1}
    k = max(r for r, i in col1.items() if r <= g and i >= g)
    m = col1.pop(k)
    col1[g] = m
    col2 = {i: r for (c, r), i in filling.items() if c == 2}
    while True:
        row_m = next(r for r, i in col1.items() if i == m)
        bad = [
            (u, r) for r, u in col1.items()
            if u < m and r > row_m and not col2.get(u, 0) > row_m
        ]
        if not bad:
            break
        u, row_u = min(bad)
        col1[row_u], col1[row_m] = m, u
    filling = {cell: i for cell, i in filling.items() if cell[0] != 1}
    filling.update({(1, r): i for r, i in col1.items()})
    return _move(d, 1, k, g), k, filling


def sharp(d, g, alpha, trace=None, depth=0):
    """Raise into row ``g`` of column 1; partner is the source row."""
    out = sharp_algorithm(d, g, alpha)
    result = None if out is None else OpResult(out[0], out[1])
    _record(trace, "sharp", g, result, d, depth)
    return result


def flat(d, k, alpha, trace=None, depth=0):
    """Drop into row ``k`` of column 1; partner is the source row."""
    alpha = tuple(alpha)
    _require_kd(d, alpha)
    result = None
    k1 = _first_column(d)
    if k in k1:
        result = OpResult(d, k)
    elif k <= len(alpha) and not (d.gcols and d.gcols[0] >> (k - 1) & 1):
        for g in sorted(r for r in k1 if r > k):
            cand = _move(d, 1, g, k)
            if in_kd(cand, alpha):
                result = OpResult(cand, g)
                break
    _record(trace, "flat", k, result, d, depth)
    return result


def _split_cells(cells):
    first = sorted(r for c, r in cells if c == 1)
    rest = [(c - 1, r) for c, r in cells if c >= 2]
    return first, rest


def _strip(d):
    return d.without_ghosts(), d.ghosts


def _restore(k, ghosts):
    if k.kohnert & ghosts:
        raise ValueError("operator moved a cell onto a ghost")
    return DiagramPair.from_cells(k.kohnert, ghosts)


def sharp_batch_direct(d, g_cells, alpha):
    """Raise into every cell of ``g_cells``: columns right to left, rows bottom-up."""
    alpha = tuple(alpha)
    k, ghosts = _strip(d)
    _require_kd(k, alpha)
    for c, r in sorted(g_cells, key=lambda cell: (-cell[0], cell[1])):
        rows = k.column(c)[0]
        for src in sorted((x for x in rows if x <= r), reverse=True):
            cand = _move(k, c, src, r)
            if in_kd(cand, alpha):
                k = cand
                break
        else:
            return None
    return _restore(k, ghosts)


def _sharp_batch_rec(k, g_cells, alpha, trace, depth):
    if not k.kohnert:
        return k if not g_cells else None
    k1, _, rest = split_first_column(k)
    g1, g_rest = _split_cells(g_cells)
    inner = _sharp_batch_rec(rest, g_rest, bar(big_m_of(alpha, k1)), trace, depth + 1)
    if inner is None:
        return None
    cur = join_first_column(k1, (), inner)
    for g in g1:
        res = sharp(cur, g, alpha, trace, depth)
        if res is None:
            return None
        cur = res.diagram
    return cur


def sharp_batch(d, g_cells, alpha, trace=None):
    """Same map as :func:`sharp_batch_direct`, computed column by column."""
    alpha = tuple(alpha)
    k, ghosts = _strip(d)
    _require_kd(k, alpha)
    out = _sharp_batch_rec(k, list(g_cells), alpha, trace, 0)
    return None if out is None else _restore(out, ghosts)


def flat_batch_direct(d, e_cells, alpha):
    """Drop into every cell of ``e_cells``: columns left to right, rows top-down."""
    alpha = tuple(alpha)
    k, ghosts = _strip(d)
    _require_kd(k, alpha)
    for c, r in sorted(e_cells, key=lambda cell: (cell[0], -cell[1])):
        rows = k.column(c)[0]
        for src in sorted(x for x in rows if x >= r):
            cand = _move(k, c, src, r)
            if in_kd(cand, alpha):
                k = cand
                break
        else:
            return None
    return _restore(k, ghosts)


def _flat_batch_rec(k, e_cells, alpha, trace, depth):
    if not k.kohnert:
        return k if not e_cells else None
    e1, e_rest = _split_cells(e_cells)
    cur = k
    for e in reversed(e1):
        res = flat(cur, e, alpha, trace, depth)
        if res is None:
            return None
        cur = res.diagram
    k1, _, rest = split_first_column(cur)
    inner = _flat_batch_rec(rest, e_rest, bar(big_m_of(alpha, k1)), trace, depth + 1)
    if inner is None:
        return None
    return join_first_column(k1, (), inner)


def flat_batch(d, e_cells, alpha, trace=None):
    """Same map as :func:`flat_batch_direct`, computed column by column."""
    alpha = tuple(alpha)
    k, ghosts = _strip(d)
    _require_kd(k, alpha)
    out = _flat_batch_rec(k, list(e_cells), alpha, trace, 0)
    return None if out is None else _restore(out, ghosts)


__all__ = [
    "OpResult",
    "column_content",
    "flat",
    "flat_batch",
    "flat_batch_direct",
    "flat_defined",
    "sharp",
    "sharp_algorithm",
    "sharp_batch",
    "sharp_batch_direct",
    "sharp_defined",
    "sharp_search",
]
