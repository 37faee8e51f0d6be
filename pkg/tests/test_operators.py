from itertools import combinations

import pytest

from figures import A021, A_SHARP, D_SHARP, D_SHARP_AFTER, KD_021, LABEL_SHARP, LABEL_SHARP_AFTER, pair
from lemmas import LEMMAS
from lascoux.compositions import all_compositions
from lascoux.diagrams import DiagramPair, kd
from lascoux.labeling import label, validate_kt
from lascoux.operators import (
    flat,
    flat_batch,
    flat_batch_direct,
    flat_defined,
    sharp,
    sharp_algorithm,
    sharp_batch,
    sharp_batch_direct,
    sharp_defined,
    sharp_search,
)

SMALL = all_compositions(3, 3) + all_compositions(4, 2)


def test_sharp_example():
    res = sharp(D_SHARP, 3, A_SHARP)
    assert res == (D_SHARP_AFTER, 1)
    assert sharp_search(D_SHARP, 3, A_SHARP) == res
    new, k, filling = sharp_algorithm(D_SHARP, 3, A_SHARP)
    assert (new, k) == (D_SHARP_AFTER, 1)
    assert filling == LABEL_SHARP_AFTER == label(D_SHARP_AFTER, A_SHARP).filling


def test_flat_example():
    # dropping into row 1 after the raise returns the start and reports row 3
    assert flat(D_SHARP_AFTER, 1, A_SHARP) == (D_SHARP, 3)
    res = flat(D_SHARP_AFTER, 1, A_SHARP)
    assert label(res.diagram, A_SHARP).filling == LABEL_SHARP


def test_trivial_cases():
    d = KD_021[0]
    assert sharp(d, 3, A021) == (d, 3)
    assert flat(d, 2, A021) == (d, 2)
    with pytest.raises(ValueError):
        sharp_search(pair([(1, 2), (2, 1)]), 1, (2, 0))


def test_trace_records():
    trace = []
    sharp(D_SHARP, 3, A_SHARP, trace=trace)
    flat(D_SHARP_AFTER, 1, A_SHARP, trace=trace)
    assert [(t["op"], t["g_or_k"], t["partner"]) for t in trace] == [("sharp", 3, 1), ("flat", 1, 3)]
    assert set(trace[0]) == {"op", "g_or_k", "partner", "depth", "before", "after"}
    assert DiagramPair.from_json(trace[0]["after"]) == D_SHARP_AFTER


@pytest.mark.parametrize("alpha", SMALL + [(0, 0, 2, 1), A_SHARP])
def test_algorithm_matches_search(alpha):
    for d in kd(alpha):
        for g in range(1, len(alpha) + 1):
            got = sharp(d, g, alpha)
            assert got == sharp_search(d, g, alpha), (d, g)
            assert (got is not None) == sharp_defined(d, g, alpha)
            if got is not None:
                filling = sharp_algorithm(d, g, alpha)[2]
                assert filling == label(got.diagram, alpha).filling
                assert validate_kt(label(got.diagram, alpha))


@pytest.mark.parametrize("alpha", SMALL)
def test_flat_defined_predicate(alpha):
    for d in kd(alpha):
        for k in range(1, len(alpha) + 1):
            assert (flat(d, k, alpha) is not None) == flat_defined(d, k, alpha), (d, k)


def test_sharp_locality():
    # labels agree off column 1, and in column 1 outside rows [min(g, k), m]
    for alpha in SMALL:
        for d in kd(alpha):
            before = label(d, alpha).filling
            for g in range(1, len(alpha) + 1):
                res = sharp(d, g, alpha)
                if res is None or res.partner == g:
                    continue
                after = label(res.diagram, alpha).filling
                m = before[(1, res.partner)]
                lo = min(g, res.partner)
                for cell, i in before.items():
                    if cell[0] != 1 or not lo <= cell[1] <= m:
                        assert after.get(cell) == i


def test_sharp_batch_example():
    d = KD_021[3]
    g = [(1, 3), (2, 2)]
    want = pair([(1, 2), (1, 3), (2, 2)])
    assert sharp_batch_direct(d, g, A021) == want == sharp_batch(d, g, A021)
    assert sharp_batch(d, [], A021) == d


def test_flat_batch_example():
    d = KD_021[0]
    e = [(1, 1), (2, 1)]
    want = pair([(1, 1), (1, 2), (2, 1)])
    assert flat_batch_direct(d, e, A021) == want == flat_batch(d, e, A021)
    assert flat_batch(d, [], A021) == d


GRID = [(c, r) for c in (1, 2) for r in (1, 2, 3)]


def test_batch_direct_matches_recursive_021():
    for d in kd(A021):
        for size in range(3):
            for cells in combinations(GRID, size):
                assert sharp_batch_direct(d, cells, A021) == sharp_batch(d, cells, A021)
                assert flat_batch_direct(d, cells, A021) == flat_batch(d, cells, A021)


def test_batch_carries_ghosts():
    d = pair([(1, 2), (1, 1), (2, 1)], [(2, 2)])
    out = sharp_batch(d, [(1, 3)], A021)
    assert out.ghosts == {(2, 2)}
    assert out == sharp_batch_direct(d, [(1, 3)], A021)


@pytest.mark.parametrize("name", sorted(LEMMAS))
def test_lemma_small_sweep(name):
    count, bad = LEMMAS[name]([(4, 2)])
    assert count > 0 and not bad
