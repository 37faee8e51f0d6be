"""Reverse set-valued tableaux, left keys and membership in RSVT(alpha).

Tableaux use English convention: ``boxes[i][j]`` is the box in row ``i``
(top row first) and column ``j``; each box is a tuple of positive integers
sorted decreasingly. A reverse semistandard tableau is a tableau whose boxes
are all singletons.
"""

from functools import lru_cache
from itertools import combinations

from lascoux.compositions import (
    KeyTableau,
    bar,
    big_m_of,
    key_tableau,
    partition_of,
    subset_leq,
    support,
    triangle_fold,
)
from lascoux.diagrams import DiagramPair, split_first_column


class Rsvt:
    """A reverse set-valued tableau."""

    __slots__ = ("boxes",)

    def __init__(self, boxes):
        rows = []
        for row in boxes:
            out = []
            for box in row:
                b = tuple(sorted(set(box), reverse=True))
                if len(b) != len(box) and isinstance(box, (list, tuple)):
                    raise ValueError(f"box {box} repeats an entry")
                out.append(b)
            rows.append(tuple(out))
        self.boxes = tuple(rows)
        self._check()

    @classmethod
    def from_rows(cls, rows):
        """Single-valued tableau from rows of ints."""
        return cls([[(v,) for v in row] for row in rows])

    @classmethod
    def from_columns(cls, columns):
        """``columns[j]`` lists the boxes of column ``j`` top to bottom."""
        height = max((len(c) for c in columns), default=0)
        rows = [[col[i] for col in columns if len(col) > i] for i in range(height)]
        return cls(rows)

    def _check(self):
        shape = self.shape
        if any(a < b for a, b in zip(shape, shape[1:])) or any(s == 0 for s in shape):
            raise ValueError(f"rows {shape} do not form a partition")
        for i, row in enumerate(self.boxes):
            for j, box in enumerate(row):
                if not box or box[-1] < 1:
                    raise ValueError(f"box ({i}, {j}) must be a non-empty set of positive ints")
                if j + 1 < len(row) and box[-1] < row[j + 1][0]:
                    raise ValueError(f"row condition fails right of box ({i}, {j})")
                if i + 1 < len(self.boxes) and j < len(self.boxes[i + 1]):
                    if box[-1] <= self.boxes[i + 1][j][0]:
                        raise ValueError(f"column condition fails below box ({i}, {j})")

    @property
    def shape(self):
        return tuple(len(row) for row in self.boxes)

    @property
    def columns(self):
        width = len(self.boxes[0]) if self.boxes else 0
        return tuple(
            tuple(row[j] for row in self.boxes if len(row) > j) for j in range(width)
        )

    def is_rssyt(self):
        return all(len(box) == 1 for row in self.boxes for box in row)

    def entries(self):
        return [v for row in self.boxes for box in row for v in box]

    def wt(self, n=None):
        vals = self.entries()
        n = max(vals, default=0) if n is None else n
        w = [0] * n
        for v in vals:
            w[v - 1] += 1
        return tuple(w)

    @property
    def ex(self):
        return sum(len(box) - 1 for row in self.boxes for box in row)

    def __eq__(self, other):
        return isinstance(other, Rsvt) and self.boxes == other.boxes

    def __hash__(self):
        return hash(self.boxes)

    def __repr__(self):
        return f"Rsvt({[[list(b) for b in row] for row in self.boxes]})"

    def to_json(self):
        return {"shape": list(self.shape), "boxes": [[list(b) for b in row] for row in self.boxes]}

    @classmethod
    def from_json(cls, obj):
        t = cls(obj["boxes"])
        if "shape" in obj and list(t.shape) != list(obj["shape"]):
            raise ValueError("shape does not match boxes")
        return t

    def render(self):
        compact = all(v <= 9 for v in self.entries())
        cells = [
            ["".join(map(str, b)) if compact else ",".join(map(str, b)) for b in row]
            for row in self.boxes
        ]
        width = max((len(c) for row in cells for c in row), default=0)
        return "\n".join(" ".join(c.ljust(width) for c in row).rstrip() for row in cells)


def leading_tableau(t):
    """Keep only the largest number of each box."""
    return Rsvt([[(box[0],) for box in row] for row in t.boxes])


def left_key(t):
    """Key tableau whose column k is ``C1 <| ... <| Ck`` over L(t)."""
    cols = [tuple(box[0] for box in col) for col in t.columns]
    return KeyTableau([triangle_fold(cols[: k + 1]) for k in range(len(cols))])


def in_rsvt_set(t, alpha):
    """Membership in RSVT(alpha) by the left-key definition."""
    if t.shape != partition_of(alpha):
        return False
    return left_key(t).leq(key_tableau(alpha))


def encode(t):
    """Tableau to the diagram pair (leading cells, extra cells)."""
    lead, extra = [], []
    for c, col in enumerate(t.columns, 1):
        for box in col:
            lead.append((c, box[0]))
            extra.extend((c, v) for v in box[1:])
    return DiagramPair.from_cells(lead, extra)


def decode(p):
    """Inverse of :func:`encode`; ``None`` when ``p`` is not an image."""
    columns = []
    for c in range(1, p.ncols + 1):
        leads, extras = p.column(c)
        leads = sorted(leads, reverse=True)
        if not leads:
            return None
        boxes = [[v] for v in leads]
        for r in extras:
            below = [i for i, v in enumerate(leads) if v > r]
            if not below:
                return None
            boxes[below[-1]].append(r)
        columns.append([tuple(b) for b in boxes])
    try:
        t = Rsvt.from_columns(columns)
    except ValueError:
        return None
    if [len(c) for c in t.columns] != [len(c) for c in columns]:
        return None
    return t


def conjugate(shape):
    return tuple(sum(1 for s in shape if s > j) for j in range(shape[0] if shape else 0))


def rssyt_of_shape(shape, n):
    """All reverse semistandard tableaux of ``shape`` with entries in [n]."""
    heights = conjugate(shape)
    out = []

    def extend(cols):
        j = len(cols)
        if j == len(heights):
            out.append(Rsvt.from_columns([[(v,) for v in col] for col in cols]))
            return
        h = heights[j]
        for col in combinations(range(n, 0, -1), h):
            if j and any(col[i] > cols[-1][i] for i in range(h)):
                continue
            extend(cols + [col])

    extend([])
    return out


def rssyt_set(alpha):
    """RSSYT(alpha) by brute force over tableaux with entries in [n]."""
    n = len(alpha)
    key = key_tableau(alpha)
    return [t for t in rssyt_of_shape(partition_of(alpha), n) if left_key(t).leq(key)]


def extra_slots(lead):
    """Per box, the values an extra number may take given the leading tableau."""
    rows = lead.boxes
    slots = []
    for i, row in enumerate(rows):
        for j, box in enumerate(row):
            lo = 1
            if j + 1 < len(row):
                lo = max(lo, row[j + 1][0])
            if i + 1 < len(rows) and j < len(rows[i + 1]):
                lo = max(lo, rows[i + 1][j][0] + 1)
            slots.append(((i, j), tuple(range(lo, box[0]))))
    return slots


def rsvt_set(alpha, max_excess=None):
    """RSVT(alpha) restricted to excess <= max_excess (all when ``None``)."""
    out = []
    for lead in rssyt_set(alpha):
        slots = extra_slots(lead)
        budget = max_excess if max_excess is not None else sum(len(v) for _, v in slots)

        def fill(idx, boxes, left):
            if idx == len(slots):
                out.append(Rsvt(boxes))
                return
            (i, j), values = slots[idx]
            for size in range(min(left, len(values)) + 1):
                for extra in combinations(values, size):
                    new = [list(r) for r in boxes]
                    new[i][j] = boxes[i][j] + extra
                    fill(idx + 1, new, left - size)

        fill(0, [list(r) for r in lead.boxes], budget)
    return out


def max_possible_excess(alpha):
    """Largest excess over RSVT(alpha), from the per-box extra slots."""
    return max((sum(len(v) for _, v in extra_slots(lead)) for lead in rssyt_set(alpha)), default=0)


def _count_above(s, x, strict):
    return sum(1 for y in s if (y > x if strict else y >= x))


@lru_cache(maxsize=1 << 18)
def in_rsvt_set_recursive(p, alpha):
    """Membership of the pair ``(L1, E1, t)`` in RSVT(alpha), column by column."""
    alpha = tuple(alpha)
    n = len(alpha)
    if p.is_empty():
        return not any(alpha)
    l1, e1, t = split_first_column(p)
    if any(r > n for r in l1 + e1):
        return False
    supp = support(alpha)
    if not subset_leq(l1, supp):
        return False
    l1_next = t.column(1)[0]
    for e in e1:
        if _count_above(l1, e, True) <= _count_above(l1_next, e, True):
            return False
    return in_rsvt_set_recursive(t, bar(big_m_of(alpha, l1)))


@lru_cache(maxsize=1 << 18)
def in_kkd_set_recursive(d, alpha):
    """Membership of the pair ``(K1, G1, d)`` in KKD(alpha), column by column."""
    alpha = tuple(alpha)
    n = len(alpha)
    if d.is_empty():
        return not any(alpha)
    k1, g1, rest = split_first_column(d)
    if any(r > n for r in k1 + g1):
        return False
    supp = support(alpha)
    if not subset_leq(k1, supp):
        return False
    for g in g1:
        if _count_above(supp, g, False) <= _count_above(k1, g, False):
            return False
    return in_kkd_set_recursive(rest, bar(big_m_of(alpha, k1)))
