"""Checkers for the raise/drop operator lemmas.

Each ``check_*`` walks a family of instances, returning ``(instances, violations)``
where ``instances`` counts cases whose hypotheses held.
"""

from functools import lru_cache
from itertools import combinations

from lascoux import operators
from lascoux.compositions import all_compositions
from lascoux.diagrams import canonical_order, kd

# the operators are pure, so the checkers share one memo
sharp = lru_cache(maxsize=None)(operators.sharp)
flat = lru_cache(maxsize=None)(operators.flat)


def kd_family(specs):
    for n, top in specs:
        for alpha in all_compositions(n, top):
            if any(alpha):
                for d in canonical_order(kd(alpha)):
                    yield alpha, d


def check_inverses(specs):
    count, bad = 0, []
    for alpha, d in kd_family(specs):
        n = len(alpha)
        for g in range(1, n + 1):
            res = sharp(d, g, alpha)
            if res is None:
                continue
            count += 1
            back = flat(res.diagram, res.partner, alpha)
            if back != (d, g):
                bad.append(("sharp-flat", alpha, d, g))
        for k in range(1, n + 1):
            res = flat(d, k, alpha)
            if res is None:
                continue
            count += 1
            back = sharp(res.diagram, res.partner, alpha)
            if back != (d, k):
                bad.append(("flat-sharp", alpha, d, k))
    return count, bad


def _chain(op, d, a, b, alpha):
    first = op(d, a, alpha)
    if first is None:
        return None
    second = op(first.diagram, b, alpha)
    if second is None:
        return None
    return first, second


def check_sharp_commute_1(specs):
    count, bad = 0, []
    for alpha, d in kd_family(specs):
        for g1, g2 in combinations(range(1, len(alpha) + 1), 2):
            ch = _chain(sharp, d, g1, g2, alpha)
            if ch is None or not ch[0].partner > ch[1].partner:
                continue
            count += 1
            (_, k1), (final, k2) = ch
            swapped = _chain(sharp, d, g2, g1, alpha)
            if swapped is None or swapped[0].partner != k2 or swapped[1] != (final, k1):
                bad.append((alpha, d, g1, g2))
    return count, bad


def check_sharp_commute_2(specs):
    count, bad = 0, []
    for alpha, d in kd_family(specs):
        for g1, g2 in combinations(range(1, len(alpha) + 1), 2):
            ch = _chain(sharp, d, g2, g1, alpha)
            if ch is None or not ch[1].partner > ch[0].partner:
                continue
            count += 1
            (_, k2), (final, k1) = ch
            swapped = _chain(sharp, d, g1, g2, alpha)
            if swapped is None or swapped[0].partner != k1 or swapped[1] != (final, k2):
                bad.append((alpha, d, g1, g2))
    return count, bad


def check_flat_commute(specs):
    count, bad = 0, []
    for alpha, d in kd_family(specs):
        for k2, k1 in combinations(range(1, len(alpha) + 1), 2):
            ch = _chain(flat, d, k1, k2, alpha)
            if ch is None or not ch[0].partner < ch[1].partner:
                continue
            count += 1
            (_, g1), (final, g2) = ch
            swapped = _chain(flat, d, k2, k1, alpha)
            if swapped is None or swapped[0].partner != g2 or swapped[1] != (final, g1):
                bad.append((alpha, d, k1, k2))
    return count, bad


def _apply_all(op, d, indices, alpha):
    partners = []
    for i in indices:
        res = op(d, i, alpha)
        if res is None:
            return None, None
        d = res.diagram
        partners.append(res.partner)
    return d, partners


def check_flats_after_sharps(specs):
    count, bad = 0, []
    for alpha, d in kd_family(specs):
        n = len(alpha)
        k1 = set(d.column(1)[0])
        free = [g for g in range(2, n + 1) if g not in k1]
        for m in range(1, len(free) + 1):
            for gs in combinations(free, m):
                top, ks = _apply_all(sharp, d, gs, alpha)
                if top is None:
                    continue
                count += 1
                back, gs_back = _apply_all(flat, top, sorted(ks, reverse=True), alpha)
                if back != d or sorted(gs_back or ()) != list(gs):
                    bad.append((alpha, d, gs))
    return count, bad


def check_sharps_after_flats(specs):
    count, bad = 0, []
    for alpha, d in kd_family(specs):
        n = len(alpha)
        k1 = set(d.column(1)[0])
        free = [e for e in range(n - 1, 0, -1) if e not in k1]
        for m in range(1, len(free) + 1):
            for es in combinations(free, m):
                low, ks = _apply_all(flat, d, es, alpha)
                if low is None:
                    continue
                count += 1
                back, es_back = _apply_all(sharp, low, sorted(ks), alpha)
                if back != d or sorted(es_back or (), reverse=True) != list(es):
                    bad.append((alpha, d, es))
    return count, bad


LEMMAS = {
    "sharp and flat are inverses": check_inverses,
    "sharp commutation, first form": check_sharp_commute_1,
    "sharp commutation, second form": check_sharp_commute_2,
    "flat commutation": check_flat_commute,
    "flats undo a run of sharps": check_flats_after_sharps,
    "sharps undo a run of flats": check_sharps_after_flats,
}
