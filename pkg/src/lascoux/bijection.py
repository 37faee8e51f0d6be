"""The weight- and excess-preserving bijections between KKD(alpha) and RSVT(alpha).

``psi`` sends a K-Kohnert diagram pair to the diagram-pair image of a
reverse set-valued tableau; ``phi`` goes back. Each has a column-recursive
form (the default) and a direct form that runs the batch operators on the
whole diagram; the two are expected to agree everywhere.
"""

from dataclasses import asdict, dataclass, field

from lascoux.compositions import bar, big_m_of, format_composition
from lascoux.diagrams import DEFAULT_CAP, DiagramPair, canonical_order, join_first_column, kkd, split_first_column
from lascoux.operators import flat, flat_batch_direct, sharp, sharp_batch_direct
from lascoux.tableaux import Rsvt, encode, in_rsvt_set_recursive, in_kkd_set_recursive, rsvt_set


class NotMember(ValueError):
    """The input is outside the domain of the map."""


def _partners_ok(res, op, index):
    # Well-definedness is a theorem; a failure here is a bug, never an input error.
    if res is None:
        raise AssertionError(f"{op}_{index} undefined inside a proven-defined step")
    return res


def _psi(d, alpha, trace, depth):
    if d.is_empty():
        return d
    k1, g1, rest = split_first_column(d)
    t = _psi(rest, bar(big_m_of(alpha, k1)), trace, depth + 1)
    cur = join_first_column(k1, (), t)
    partners = []
    for g in sorted(g1):
        res = _partners_ok(sharp(cur, g, alpha, trace, depth), "sharp", g)
        cur = res.diagram
        partners.append(res.partner)
    return join_first_column(cur.column(1)[0], partners, t)


def psi(d, alpha, trace=None, check=True):
    """KKD(alpha) -> RSVT(alpha) as diagram pairs (leading, extra)."""
    alpha = tuple(alpha)
    if check and not in_kkd_set_recursive(d, alpha):
        raise NotMember(f"{d!r} is not in KKD({format_composition(alpha)})")
    return _psi(d, alpha, trace, 0)


def psi_direct(d, alpha):
    alpha = tuple(alpha)
    k = d.without_ghosts()
    lead = sharp_batch_direct(k, d.ghosts, alpha)
    if lead is None:
        raise NotMember(f"raise sequence undefined on {d!r}")
    return DiagramPair.from_cells(lead.kohnert, (d.kohnert | d.ghosts) - lead.kohnert)


def _phi(p, alpha, trace, depth):
    if p.is_empty():
        return p
    l1, e1, t = split_first_column(p)
    cur = join_first_column(l1, (), t)
    partners = []
    for e in sorted(e1, reverse=True):
        res = _partners_ok(flat(cur, e, alpha, trace, depth), "flat", e)
        cur = res.diagram
        partners.append(res.partner)
    l1_final = cur.column(1)[0]
    d = _phi(t, bar(big_m_of(alpha, l1_final)), trace, depth + 1)
    return join_first_column(l1_final, partners, d)


def _as_pair(t):
    return encode(t) if isinstance(t, Rsvt) else t


def phi(t, alpha, trace=None, check=True):
    """RSVT(alpha) -> KKD(alpha); accepts an :class:`Rsvt` or its pair."""
    alpha = tuple(alpha)
    p = _as_pair(t)
    if check and not in_rsvt_set_recursive(p, alpha):
        raise NotMember(f"{p!r} is not in RSVT({format_composition(alpha)})")
    return _phi(p, alpha, trace, 0)


def phi_direct(t, alpha):
    alpha = tuple(alpha)
    p = _as_pair(t)
    k = flat_batch_direct(p.without_ghosts(), p.ghosts, alpha)
    if k is None:
        raise NotMember(f"drop sequence undefined on {p!r}")
    return DiagramPair.from_cells(k.kohnert, (p.kohnert | p.ghosts) - k.kohnert)


def psi_partners(d, alpha):
    """Partner rows returned by the first-column raises of ``psi``."""
    trace = []
    psi(d, alpha, trace=trace)
    return [(r["g_or_k"], r["partner"]) for r in trace if r["depth"] == 0]


@dataclass
class VerificationReport:
    alpha: tuple
    max_excess: object
    kkd_size: int = 0
    rsvt_size: int = 0
    phi_psi_identity: int = 0
    psi_phi_identity: int = 0
    psi_out_of_range: int = 0
    phi_out_of_range: int = 0
    direct_recursive_mismatches: int = 0
    weight_failures: int = 0
    excess_failures: int = 0
    max_excess_kkd: int = 0
    max_excess_rsvt: int = 0
    polynomials_equal: bool = False
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return (
            self.kkd_size == self.rsvt_size == self.phi_psi_identity == self.psi_phi_identity
            and not (self.psi_out_of_range or self.phi_out_of_range)
            and not (self.direct_recursive_mismatches or self.weight_failures or self.excess_failures)
            and self.polynomials_equal
        )

    def to_json(self):
        out = asdict(self)
        out["alpha"] = list(self.alpha)
        out["ok"] = self.ok
        return out


def verify_bijection(alpha, max_excess=None, direct=True, cap=DEFAULT_CAP):
    """Run both maps over KKD(alpha) and RSVT(alpha) and tally every check."""
    from lascoux.polynomials import Polynomial

    alpha = tuple(alpha)
    n = len(alpha)
    rep = VerificationReport(alpha, max_excess)
    diagrams = [d for d in canonical_order(kkd(alpha, cap)) if max_excess is None or d.ex <= max_excess]
    tableaux = canonical_order(encode(t) for t in rsvt_set(alpha, max_excess))
    dset, tset = set(diagrams), set(tableaux)
    rep.kkd_size, rep.rsvt_size = len(diagrams), len(tableaux)
    rep.max_excess_kkd = max((d.ex for d in diagrams), default=0)
    rep.max_excess_rsvt = max((t.ex for t in tableaux), default=0)

    def note(kind, obj):
        rep.failures.append({"kind": kind, "pair": obj.to_json()})

    for d in diagrams:
        t = psi(d, alpha, check=False)
        if t not in tset:
            rep.psi_out_of_range += 1
            note("psi_out_of_range", d)
        if t.wt(n) != d.wt(n):
            rep.weight_failures += 1
            note("psi_weight", d)
        if t.ex != d.ex:
            rep.excess_failures += 1
            note("psi_excess", d)
        if direct and psi_direct(d, alpha) != t:
            rep.direct_recursive_mismatches += 1
            note("psi_direct", d)
        if phi(t, alpha, check=False) == d:
            rep.phi_psi_identity += 1
    for t in tableaux:
        d = phi(t, alpha, check=False)
        if d not in dset:
            rep.phi_out_of_range += 1
            note("phi_out_of_range", t)
        if t.wt(n) != d.wt(n) or t.ex != d.ex:
            rep.weight_failures += t.wt(n) != d.wt(n)
            rep.excess_failures += t.ex != d.ex
            note("phi_weight_or_excess", t)
        if direct and phi_direct(t, alpha) != d:
            rep.direct_recursive_mismatches += 1
            note("phi_direct", t)
        if psi(d, alpha, check=False) == t:
            rep.psi_phi_identity += 1
    p_diag = Polynomial.from_pairs(diagrams, n)
    p_tab = Polynomial.from_pairs(tableaux, n)
    rep.polynomials_equal = p_diag == p_tab
    return rep
