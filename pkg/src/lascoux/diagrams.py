"""Diagram pairs, (K-)Kohnert moves and their closures KD(alpha), KKD(alpha).

Cells are ``(column, row)`` with both counted from 1; rows run bottom-up.
A :class:`DiagramPair` stores each of its two diagrams as a tuple of column
bitmasks, which keeps pairs hashable and cheap to compare.
"""

from functools import lru_cache

from lascoux import kernels

DEFAULT_CAP = 10**6
ResourceLimit = kernels.ResourceLimit


def _bits(mask):
    r = 0
    while mask:
        r += 1
        if mask & 1:
            yield r
        mask >>= 1


def _trim(kcols, gcols):
    n = max(len(kcols), len(gcols))
    k = list(kcols) + [0] * (n - len(kcols))
    g = list(gcols) + [0] * (n - len(gcols))
    while k and not k[-1] and not g[-1]:
        k.pop()
        g.pop()
    return tuple(k), tuple(g)


class DiagramPair:
    """A pair (Kohnert cells, ghost cells) of disjoint diagrams.

    The same type doubles as the diagram-pair image ``(L, E)`` of a reverse
    set-valued tableau, with leading cells in the first slot.
    """

    __slots__ = ("kcols", "gcols", "_hash")

    def __init__(self, kcols=(), gcols=()):
        kcols, gcols = _trim(kcols, gcols)
        if any(k & g for k, g in zip(kcols, gcols)):
            raise ValueError("Kohnert and ghost cells overlap")
        if any(m < 0 for m in kcols + gcols):
            raise ValueError("negative column mask")
        self.kcols = kcols
        self.gcols = gcols
        self._hash = hash((kcols, gcols))

    @classmethod
    def _raw(cls, kcols, gcols):
        # Trusted constructor for kernel output (already trimmed and disjoint).
        obj = cls.__new__(cls)
        obj.kcols = kcols
        obj.gcols = gcols
        obj._hash = hash((kcols, gcols))
        return obj

    @classmethod
    def from_cells(cls, kohnert=(), ghosts=()):
        def masks(cells):
            cols = []
            for c, r in cells:
                if c < 1 or r < 1:
                    raise ValueError(f"cell {(c, r)} outside the positive quadrant")
                while len(cols) < c:
                    cols.append(0)
                bit = 1 << (r - 1)
                if cols[c - 1] & bit:
                    raise ValueError(f"duplicate cell {(c, r)}")
                cols[c - 1] |= bit
            return cols

        return cls(masks(kohnert), masks(ghosts))

    @property
    def kohnert(self):
        return frozenset((c, r) for c, m in enumerate(self.kcols, 1) for r in _bits(m))

    @property
    def ghosts(self):
        return frozenset((c, r) for c, m in enumerate(self.gcols, 1) for r in _bits(m))

    @property
    def ncols(self):
        return len(self.kcols)

    @property
    def max_row(self):
        top = 0
        for k, g in zip(self.kcols, self.gcols):
            top |= k | g
        return top.bit_length()

    def column(self, c):
        """Row sets (Kohnert, ghost) of column ``c``."""
        if c > self.ncols:
            return (), ()
        return tuple(_bits(self.kcols[c - 1])), tuple(_bits(self.gcols[c - 1]))

    def is_empty(self):
        return not self.kcols

    def wt(self, n=None):
        n = self.max_row if n is None else n
        w = [0] * n
        for k, g in zip(self.kcols, self.gcols):
            for r in _bits(k | g):
                w[r - 1] += 1
        return tuple(w)

    @property
    def ex(self):
        return sum(bin(g).count("1") for g in self.gcols)

    @property
    def size(self):
        return sum(bin(k).count("1") for k in self.kcols) + self.ex

    def without_ghosts(self):
        return DiagramPair._raw(*_trim(self.kcols, ()))

    def sort_key(self):
        return (self.ex, tuple(sorted(self.kohnert)), tuple(sorted(self.ghosts)))

    def __eq__(self, other):
        return (
            isinstance(other, DiagramPair)
            and self.kcols == other.kcols
            and self.gcols == other.gcols
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"DiagramPair(kohnert={sorted(self.kohnert)}, ghosts={sorted(self.ghosts)})"

    def to_json(self):
        return {
            "kohnert": [list(c) for c in sorted(self.kohnert)],
            "ghosts": [list(c) for c in sorted(self.ghosts)],
        }

    @classmethod
    def from_json(cls, obj):
        return cls.from_cells(
            [tuple(c) for c in obj.get("kohnert", [])], [tuple(c) for c in obj.get("ghosts", [])]
        )

    def render(self, rows=None, ghost="X"):
        """ASCII art: top row first, ``.`` Kohnert cell, ``X`` ghost."""
        rows = self.max_row if rows is None else rows
        lines = []
        for r in range(rows, 0, -1):
            bit = 1 << (r - 1)
            line = ""
            for k, g in zip(self.kcols, self.gcols):
                line += "." if k & bit else ghost if g & bit else " "
            lines.append(line.rstrip())
        return "\n".join(lines)


TableauPair = DiagramPair


def key_diagram(alpha):
    """``D_alpha``: ``alpha_i`` left-justified Kohnert cells on row ``i``."""
    top = max(alpha, default=0)
    cols = [0] * top
    for i, a in enumerate(alpha, 1):
        for c in range(a):
            cols[c] |= 1 << (i - 1)
    return DiagramPair(cols, [0] * top)


def kohnert_moves(d):
    if d.ghosts:
        raise ValueError("Kohnert moves act on ghost-free pairs")
    return {DiagramPair._raw(k, g) for k, g in kernels.successors(d.kcols, d.gcols, False)}


def k_kohnert_moves(d):
    return {DiagramPair._raw(k, g) for k, g in kernels.successors(d.kcols, d.gcols, True)}


KOHNERT = "kohnert"
K_KOHNERT = "k-kohnert"


@lru_cache(maxsize=2048)
def _closure_cached(alpha, mover, cap):
    start = key_diagram(alpha)
    states = kernels.closure(start.kcols, start.gcols, mover == K_KOHNERT, cap)
    n = len(alpha)
    limit = 1 << n
    out = []
    for k, g in states:
        if any(m >= limit for m in k + g):
            raise AssertionError(f"closure of {alpha} left rows 1..{n}")
        out.append(DiagramPair._raw(k, g))
    return frozenset(out)


def closure(alpha, mover=K_KOHNERT, cap=DEFAULT_CAP):
    """Fixed point of ``mover`` starting from ``key_diagram(alpha)``.

    ``mover`` is ``"kohnert"`` or ``"k-kohnert"``. Raises
    :class:`ResourceLimit` past ``cap`` states.
    """
    if mover not in (KOHNERT, K_KOHNERT):
        raise ValueError(f"unknown mover {mover!r}")
    return _closure_cached(tuple(alpha), mover, cap)


def kd(alpha, cap=DEFAULT_CAP):
    return closure(alpha, KOHNERT, cap)


def kkd(alpha, cap=DEFAULT_CAP):
    return closure(alpha, K_KOHNERT, cap)


def split_first_column(d):
    """``D -> (K1, G1, d)`` with ``d`` the remaining columns shifted left."""
    if d.is_empty():
        return (), (), d
    k1, g1 = d.column(1)
    return k1, g1, DiagramPair._raw(*_trim(d.kcols[1:], d.gcols[1:]))


def join_first_column(k1, g1, rest):
    km = sum(1 << (r - 1) for r in set(k1))
    gm = sum(1 << (r - 1) for r in set(g1))
    if km & gm:
        raise ValueError("first-column Kohnert and ghost rows overlap")
    return DiagramPair((km,) + rest.kcols, (gm,) + rest.gcols)


def canonical_order(pairs):
    return sorted(pairs, key=DiagramPair.sort_key)
