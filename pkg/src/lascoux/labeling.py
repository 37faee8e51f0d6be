"""Kohnert tableaux and the labeling algorithm certifying KD(alpha) membership."""

from functools import lru_cache

from lascoux import kernels
from lascoux.diagrams import DiagramPair


@lru_cache(maxsize=4096)
def column_content(alpha):
    """``S_c = {i : alpha_i >= c}`` ascending, for c = 1..max(alpha)."""
    top = max(alpha, default=0)
    return tuple(
        tuple(i for i, a in enumerate(alpha, 1) if a >= c) for c in range(1, top + 1)
    )


class KohnertTableau:
    """A filled diagram; ``filling`` maps ``(column, row)`` to a number."""

    __slots__ = ("content", "filling")

    def __init__(self, content, filling):
        self.content = tuple(content)
        self.filling = dict(filling)

    def column(self, c):
        """``{row: number}`` for column ``c``."""
        return {r: i for (cc, r), i in self.filling.items() if cc == c}

    def __eq__(self, other):
        return (
            isinstance(other, KohnertTableau)
            and self.content == other.content
            and self.filling == other.filling
        )

    __hash__ = None

    def __repr__(self):
        return f"KohnertTableau({self.content}, {dict(sorted(self.filling.items()))})"

    def render(self, rows=None):
        rows = rows or max((r for _, r in self.filling), default=0)
        ncols = max((c for c, _ in self.filling), default=0)
        width = max((len(str(i)) for i in self.filling.values()), default=1)
        lines = []
        for r in range(rows, 0, -1):
            cells = [str(self.filling.get((c, r), "")).rjust(width) or " " * width for c in range(1, ncols + 1)]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)


def label_raw(kcols, alpha):
    """Per-column labels in ascending row order, or ``None`` if not in KD(alpha)."""
    return kernels.label_columns(kcols, column_content(alpha))


def in_kd(d, alpha):
    """KD(alpha) membership of the Kohnert cells of ``d`` (ghosts ignored)."""
    kcols = d.kcols
    while kcols and not kcols[-1]:
        kcols = kcols[:-1]
    return label_raw(kcols, tuple(alpha)) is not None


def label(d, alpha):
    """``Label_alpha(d)``, or ``None`` when ``d`` is not in KD(alpha)."""
    if d.ghosts:
        raise ValueError("labeling acts on ghost-free pairs")
    alpha = tuple(alpha)
    cols = label_raw(d.kcols, alpha)
    if cols is None:
        return None
    filling = {}
    for c, nums in enumerate(cols, 1):
        rows, _ = d.column(c)
        filling.update({(c, r): i for r, i in zip(rows, nums)})
    return KohnertTableau(alpha, filling)


def unlabel(t):
    return DiagramPair.from_cells(t.filling.keys())


def validate_kt(t):
    """Check the four defining conditions of a Kohnert tableau."""
    content = column_content(t.content)
    ncols = max((c for c, _ in t.filling), default=0)
    if ncols > len(content):
        return False
    cols = [t.column(c) for c in range(1, len(content) + 1)]
    for c, col in enumerate(cols):
        nums = list(col.values())
        if sorted(nums) != list(content[c]):
            return False
    for (c, r), i in t.filling.items():
        if i < r:
            return False
    for c in range(len(cols)):
        here = {i: r for r, i in cols[c].items()}
        there = {i: r for r, i in cols[c + 1].items()} if c + 1 < len(cols) else {}
        for i, r in here.items():
            if i in there and there[i] > r:
                return False
        for i, ri in here.items():
            for j, rj in here.items():
                if i < j and rj < ri and not (i in there and there[i] > rj):
                    return False
    return True
