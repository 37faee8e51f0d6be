"""Weak compositions, key tableaux and the orders on them.

A weak composition is a plain tuple of non-negative ints; its length is the
ambient ``n``. Sets of row indices are sorted tuples. Functions that search
for an extremal composition return ``None`` when none exists.
"""

from collections import deque
from functools import lru_cache
from itertools import permutations


class SelectionFailed(ValueError):
    """The greedy column selection found no eligible entry."""


def parse_composition(text):
    """Parse ``"0,2,1"`` into ``(0, 2, 1)``; trailing zeros are kept."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"malformed composition: {text!r}")
    try:
        alpha = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed composition: {text!r}") from None
    if any(a < 0 for a in alpha):
        raise ValueError(f"negative entry in composition: {text!r}")
    return alpha


def format_composition(alpha):
    return ",".join(str(a) for a in alpha)


def pad(alpha, n):
    """Extend with trailing zeros to length ``n``."""
    alpha = tuple(alpha)
    if len(alpha) > n:
        raise ValueError(f"composition {alpha} longer than n={n}")
    return alpha + (0,) * (n - len(alpha))


def _common(gamma, alpha):
    n = max(len(gamma), len(alpha))
    return pad(gamma, n), pad(alpha, n)


def support(alpha):
    return tuple(i for i, a in enumerate(alpha, 1) if a > 0)


def indicator(s, n):
    s = set(s)
    return tuple(1 if i in s else 0 for i in range(1, n + 1))


def partition_of(alpha):
    """The partition obtained by sorting the positive entries decreasingly."""
    return tuple(sorted((a for a in alpha if a > 0), reverse=True))


def bar(gamma):
    """Decrease every positive entry by one."""
    return tuple(g - 1 if g > 0 else 0 for g in gamma)


def add(alpha, gamma):
    alpha, gamma = _common(alpha, gamma)
    return tuple(a + g for a, g in zip(alpha, gamma))


def key_columns(alpha):
    """Columns of ``key(alpha)``, each a tuple sorted decreasingly."""
    top = max(alpha, default=0)
    return tuple(
        tuple(i for i in range(len(alpha), 0, -1) if alpha[i - 1] >= j)
        for j in range(1, top + 1)
    )


class KeyTableau:
    """A key tableau, stored by columns (each strictly decreasing)."""

    __slots__ = ("columns",)

    def __init__(self, columns):
        self.columns = tuple(tuple(sorted(col, reverse=True)) for col in columns)

    @classmethod
    def of(cls, alpha):
        return cls(key_columns(alpha))

    @property
    def shape(self):
        """Row lengths of the (English) Young diagram."""
        if not self.columns:
            return ()
        return tuple(
            sum(1 for col in self.columns if len(col) > i) for i in range(len(self.columns[0]))
        )

    @property
    def rows(self):
        return tuple(
            tuple(col[i] for col in self.columns if len(col) > i) for i in range(len(self.shape))
        )

    def weight(self, n=None):
        n = n if n is not None else max((c[0] for c in self.columns if c), default=0)
        w = [0] * n
        for col in self.columns:
            for i in col:
                w[i - 1] += 1
        return tuple(w)

    def is_key(self):
        return all(set(b) <= set(a) for a, b in zip(self.columns, self.columns[1:]))

    def leq(self, other):
        """Same shape and entry-wise comparison."""
        if self.shape != other.shape:
            return False
        return all(x <= y for a, b in zip(self.columns, other.columns) for x, y in zip(a, b))

    def __eq__(self, other):
        return isinstance(other, KeyTableau) and self.columns == other.columns

    def __hash__(self):
        return hash(self.columns)

    def __repr__(self):
        return f"KeyTableau({[list(c) for c in self.columns]})"


def key_tableau(alpha):
    return KeyTableau.of(alpha)


def bruhat_leq(gamma, alpha):
    """``gamma <= alpha``: same key shape and key(gamma) <= key(alpha) entry-wise."""
    gamma, alpha = _common(gamma, alpha)
    return key_tableau(gamma).leq(key_tableau(alpha))


def subset_leq(s, s_prime):
    """Order on subsets of [n]: compare the j-th largest elements."""
    a = sorted(set(s), reverse=True)
    b = sorted(set(s_prime), reverse=True)
    return len(a) == len(b) and all(x <= y for x, y in zip(a, b))


def subset_leq_by_counts(s, s_prime):
    """Equivalent form: ``|[x, n] & S| <= |[x, n] & S'|`` for every x in S."""
    s, s_prime = set(s), set(s_prime)
    if len(s) != len(s_prime):
        return False
    return all(
        sum(1 for y in s if y >= x) <= sum(1 for y in s_prime if y >= x) for x in s
    )


def left_swaps(alpha):
    """Compositions obtained from ``alpha`` by one left swap."""
    out = []
    n = len(alpha)
    for i in range(n):
        for j in range(i + 1, n):
            if alpha[i] < alpha[j]:
                g = list(alpha)
                g[i], g[j] = g[j], g[i]
                out.append(tuple(g))
    return out


@lru_cache(maxsize=4096)
def left_swap_down_set(alpha):
    """Everything reachable from ``alpha`` by repeated left swaps."""
    seen = {alpha}
    queue = deque([alpha])
    while queue:
        for nxt in left_swaps(queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def left_swap_leq(gamma, alpha):
    gamma, alpha = _common(gamma, alpha)
    return gamma in left_swap_down_set(alpha)


def _extremal(alpha, s, indices):
    s = set(s)
    pending = []
    sigma = [0] * len(alpha)
    for i in indices:
        if alpha[i - 1] > 0:
            pending.append(alpha[i - 1])
        if i in s and pending:
            best = max(pending)
            pending.remove(best)
            sigma[i - 1] = best
    if pending:
        return None
    return tuple(sigma)


def m_of(alpha, s):
    """Least ``gamma >= alpha`` with ``supp(gamma) <= S``, or ``None``."""
    alpha = tuple(alpha)
    return _extremal(alpha, s, range(1, len(alpha) + 1))


def big_m_of(alpha, s):
    """Greatest ``gamma <= alpha`` with ``supp(gamma) <= S``, or ``None``."""
    alpha = tuple(alpha)
    return _extremal(alpha, s, range(len(alpha), 0, -1))


def triangle(c1, c2):
    """The column operator: greedy lift of ``c2`` into ``c1``.

    With ``c2 = {a_1 < ... < a_m}``, picks the smallest ``b_j`` in ``c1``
    with ``b_j >= a_j`` and ``b_j > b_{j-1}``.
    """
    pool = sorted(set(c1))
    chosen = []
    prev = 0
    for a in sorted(set(c2)):
        for b in pool:
            if b >= a and b > prev:
                break
        else:
            raise SelectionFailed(f"no entry of {sorted(set(c1))} covers {a}")
        chosen.append(b)
        prev = b
    return tuple(chosen)


def triangle_fold(columns):
    """``C1 <| (C2 <| (... <| Ck))`` for the given columns."""
    acc = tuple(sorted(set(columns[-1])))
    for col in reversed(columns[:-1]):
        acc = triangle(col, acc)
    return acc


def compositions_of_shape(alpha):
    """All weak compositions of the same length whose key has alpha's shape."""
    return sorted(set(permutations(alpha)))


def all_compositions(n, max_entry):
    """Every weak composition of length ``n`` with entries in [0, max_entry]."""
    if n == 0:
        return [()]
    out = []
    for head in all_compositions(n - 1, max_entry):
        for a in range(max_entry + 1):
            out.append(head + (a,))
    return out
