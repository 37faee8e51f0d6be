"""Exact sparse polynomials in x_1..x_n and beta, and the generating-function routes.

Terms are keyed by ``(exponent tuple, beta degree)``; coefficients are Python
ints, so there is no overflow.
"""

from collections import Counter

from lascoux.diagrams import DEFAULT_CAP, kd, kkd
from lascoux.tableaux import encode, rssyt_set, rsvt_set


class RouteMismatch(ArithmeticError):
    """Two independent rules produced different polynomials."""


class Polynomial:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for (exps, b), coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has length != {n}")
            if coeff:
                key = (exps, b)
                self.terms[key] = self.terms.get(key, 0) + coeff
                if not self.terms[key]:
                    del self.terms[key]

    @classmethod
    def one(cls, n):
        return cls(n, {((0,) * n, 0): 1})

    @classmethod
    def monomial(cls, exps, beta=0, coeff=1):
        return cls(len(exps), {(tuple(exps), beta): coeff})

    @classmethod
    def from_pairs(cls, pairs, n):
        """Sum of ``beta^ex * x^wt`` over diagram pairs."""
        counts = Counter((p.wt(n), p.ex) for p in pairs)
        return cls(n, dict(counts))

    def _check(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("polynomials over different numbers of variables")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = Polynomial(self.n, self.terms)
        for key, c in other.terms.items():
            out.terms[key] = out.terms.get(key, 0) + c
            if not out.terms[key]:
                del out.terms[key]
        return out

    def __neg__(self):
        return Polynomial(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.n, {k: c * other for k, c in self.terms.items()})
        other = self._check(other)
        out = Counter()
        for (e1, b1), c1 in self.terms.items():
            for (e2, b2), c2 in other.terms.items():
                out[(tuple(x + y for x, y in zip(e1, e2)), b1 + b2)] += c1 * c2
        return Polynomial(self.n, dict(out))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def coefficient_sum(self):
        """Number of terms counted with multiplicity."""
        return sum(self.terms.values())

    @property
    def beta_degree(self):
        return max((b for _, b in self.terms), default=0)

    def beta_part(self, degree):
        return Polynomial(self.n, {k: c for k, c in self.terms.items() if k[1] == degree})

    def truncate(self, max_beta):
        return Polynomial(self.n, {k: c for k, c in self.terms.items() if k[1] <= max_beta})

    def specialize_beta(self, value):
        out = Counter()
        for (exps, b), c in self.terms.items():
            out[(exps, 0)] += c * value**b
        return Polynomial(self.n, dict(out))

    def evaluate(self, xs, beta):
        total = 0
        for (exps, b), c in self.terms.items():
            term = c * beta**b
            for x, e in zip(xs, exps):
                term *= x**e
            total += term
        return total

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], tuple(-e for e in kv[0][0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (exps, b), c in self.sorted_terms():
            factors = []
            if b:
                factors.append("b" if b == 1 else f"b^{b}")
            for i, e in enumerate(exps, 1):
                if e:
                    factors.append(f"x{i}" if e == 1 else f"x{i}^{e}")
            mono = "*".join(factors)
            if not mono:
                text = str(abs(c))
            elif abs(c) == 1:
                text = mono
            else:
                text = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + text)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[1:]

    def __repr__(self):
        return f"Polynomial({self.n}, {str(self)!r})"

    def to_json(self):
        return [
            {"coeff": c, "beta": b, "exps": list(exps)} for (exps, b), c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, items, n=None):
        items = list(items)
        if n is None:
            n = len(items[0]["exps"]) if items else 0
        return cls(n, {(tuple(t["exps"]), t["beta"]): t["coeff"] for t in items})


def key_polynomial_kd(alpha, cap=DEFAULT_CAP):
    return Polynomial.from_pairs(kd(alpha, cap), len(alpha))


def key_polynomial_rssyt(alpha):
    return Polynomial.from_pairs((encode(t) for t in rssyt_set(alpha)), len(alpha))


def lascoux_polynomial_kkd(alpha, max_excess=None, cap=DEFAULT_CAP):
    p = Polynomial.from_pairs(kkd(alpha, cap), len(alpha))
    return p if max_excess is None else p.truncate(max_excess)


def lascoux_polynomial_rsvt(alpha, max_excess=None):
    return Polynomial.from_pairs((encode(t) for t in rsvt_set(alpha, max_excess)), len(alpha))


def _agree(a, b, what, alpha):
    if a != b:
        raise RouteMismatch(f"{what} routes disagree for alpha={alpha}: {a} != {b}")
    return a


def key_polynomial(alpha, cap=DEFAULT_CAP):
    """Key polynomial, computed from KD(alpha) and from RSSYT(alpha)."""
    alpha = tuple(alpha)
    return _agree(key_polynomial_kd(alpha, cap), key_polynomial_rssyt(alpha), "key", alpha)


def lascoux_polynomial(alpha, max_excess=None, cap=DEFAULT_CAP):
    """Lascoux polynomial from KKD(alpha) and RSVT(alpha), truncated to beta^max_excess."""
    alpha = tuple(alpha)
    return _agree(
        lascoux_polynomial_kkd(alpha, max_excess, cap),
        lascoux_polynomial_rsvt(alpha, max_excess),
        "Lascoux",
        alpha,
    )


def specialize_beta(p, value):
    return p.specialize_beta(value)
