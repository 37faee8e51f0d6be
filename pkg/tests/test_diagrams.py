from collections import deque

import pytest
from hypothesis import given, strategies as st

from figures import A021, KD_021, KKD_021_GHOSTED, pair
from lascoux.compositions import all_compositions
from lascoux.diagrams import (
    DiagramPair,
    ResourceLimit,
    canonical_order,
    join_first_column,
    k_kohnert_moves,
    kd,
    key_diagram,
    kkd,
    kohnert_moves,
    split_first_column,
)


def naive_moves(kohnert, ghosts, k_theoretic):
    """Set-of-cells reference for one (K-)Kohnert move."""
    occupied = kohnert | ghosts
    out = set()
    for r in {r for _, r in occupied}:
        c = max(c for c, rr in occupied if rr == r)
        if (c, r) in ghosts:
            continue
        dest = next((x for x in range(r - 1, 0, -1) if (c, x) not in occupied), None)
        if dest is None:
            continue
        if any((c, x) in ghosts for x in range(dest + 1, r)):
            continue
        moved = (kohnert - {(c, r)}) | {(c, dest)}
        out.add((frozenset(moved), frozenset(ghosts)))
        if k_theoretic:
            out.add((frozenset(moved), frozenset(ghosts | {(c, r)})))
    return out


def naive_closure(alpha, k_theoretic):
    start = key_diagram(alpha)
    seed = (frozenset(start.kohnert), frozenset())
    seen, queue = {seed}, deque([seed])
    while queue:
        for nxt in naive_moves(*queue.popleft(), k_theoretic):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return {DiagramPair.from_cells(k, g) for k, g in seen}


def test_key_diagram():
    assert key_diagram((0, 2, 1)).kohnert == {(1, 2), (2, 2), (1, 3)}
    assert key_diagram((0, 0)).is_empty()
    assert key_diagram((1, 0, 1)).kohnert == {(1, 1), (1, 3)}


def test_kohnert_moves_examples():
    succ = kohnert_moves(key_diagram(A021))
    assert succ == {pair([(1, 2), (2, 2), (1, 1)]), pair([(1, 3), (1, 2), (2, 1)])}
    assert kohnert_moves(DiagramPair()) == set()
    assert kohnert_moves(pair([(1, 1)])) == set()
    with pytest.raises(ValueError):
        kohnert_moves(pair([(1, 2)], [(1, 1)]))


def test_ghost_blocks_and_is_never_moved():
    # ghost at (1,2) between (1,3) and the empty (1,1)
    d = pair([(1, 3)], [(1, 2)])
    assert k_kohnert_moves(d) == set()
    # the rightmost cell of row 2 is a ghost
    d = pair([(1, 2)], [(2, 2)])
    assert k_kohnert_moves(d) == set()
    assert k_kohnert_moves(pair([(1, 2)])) == {pair([(1, 1)]), pair([(1, 1)], [(1, 2)])}


def test_kd_kkd_021_match_figures():
    assert kd(A021) == set(KD_021)
    assert kkd(A021) == set(KD_021) | set(KKD_021_GHOSTED)
    assert len(kd(A021)) == 5 and len(kkd(A021)) == 11


def test_trivial_closures():
    assert kd((0, 0, 0)) == {DiagramPair()}
    assert kkd((0,)) == {DiagramPair()}


@pytest.mark.parametrize("alpha", all_compositions(3, 3) + all_compositions(4, 2))
def test_closure_matches_cell_set_reference(alpha):
    assert kd(alpha) == naive_closure(alpha, False)
    assert kkd(alpha) == naive_closure(alpha, True)


@pytest.mark.parametrize("alpha", all_compositions(3, 3))
def test_closure_invariants(alpha):
    counts = [sum(1 for a in alpha if a >= c) for c in range(1, max(alpha, default=0) + 1)]
    ghost_free = kd(alpha)
    for d in ghost_free:
        assert not d.ghosts and d.size == sum(alpha)
        assert [len(d.column(c)[0]) for c in range(1, len(counts) + 1)] == counts
    full = kkd(alpha)
    assert ghost_free <= full
    for d in full:
        assert d.without_ghosts() in ghost_free
        assert d.max_row <= len(alpha)


def test_cap():
    with pytest.raises(ResourceLimit):
        kkd((0, 2, 1), cap=4)


def test_split_join():
    d = KKD_021_GHOSTED[-1]
    k1, g1, rest = split_first_column(d)
    assert (k1, g1) == ((1, 2), (3,))
    assert rest == pair([(1, 1)], [(1, 2)])
    assert join_first_column(k1, g1, rest) == d
    assert split_first_column(DiagramPair()) == ((), (), DiagramPair())
    k1, g1, rest = split_first_column(key_diagram(A021))
    assert (k1, g1, rest) == ((2, 3), (), pair([(1, 2)]))


def test_render_and_json():
    d = KKD_021_GHOSTED[-1]
    assert d.render(rows=3) == "X\n.X\n.."
    assert DiagramPair.from_json(d.to_json()) == d
    assert d.wt(3) == (2, 2, 1) and d.ex == 2
    with pytest.raises(ValueError):
        pair([(1, 1)], [(1, 1)])


def test_canonical_order_is_deterministic():
    a = canonical_order(kkd(A021))
    assert a == canonical_order(reversed(a))


cells = st.sets(st.tuples(st.integers(1, 4), st.integers(1, 5)), max_size=8)


@given(cells, cells)
def test_json_round_trip(k, g):
    d = DiagramPair.from_cells(k, g - k)
    assert DiagramPair.from_json(d.to_json()) == d
    k1, g1, rest = split_first_column(d)
    assert join_first_column(k1, g1, rest) == d
