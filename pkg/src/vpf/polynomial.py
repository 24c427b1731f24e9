"""Sparse multivariate polynomials over an exact coefficient ring.

Coefficients may be ints, Fractions, or cyclotomic elements; anything
supporting +, * and comparison against 0 works.  Monomials are exponent
tuples; the zero polynomial has no terms.
"""

from fractions import Fraction


def _is_zero(c):
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return c == 0


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = terms or {}

    @classmethod
    def constant(cls, nvars, c):
        if _is_zero(c):
            return cls(nvars)
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, i, c=1):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): c})

    @classmethod
    def linear_form(cls, nvars, coeffs):
        t = {}
        for i, c in enumerate(coeffs):
            if not _is_zero(c):
                e = [0] * nvars
                e[i] = 1
                t[tuple(e)] = c
        return cls(nvars, t)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        assert self.nvars == other.nvars
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e)
            s = c if s is None else s + c
            if _is_zero(s):
                t.pop(e, None)
            else:
                t[e] = s
        return Poly(self.nvars, t)

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        assert self.nvars == other.nvars
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = t.get(e)
                s = c if s is None else s + c
                if _is_zero(s):
                    t.pop(e, None)
                else:
                    t[e] = s
        return Poly(self.nvars, t)

    __rmul__ = __mul__

    def scale(self, c):
        if _is_zero(c):
            return Poly(self.nvars)
        return Poly(self.nvars, {e: co * c for e, co in self.terms.items()})

    def pow(self, k):
        out = Poly.constant(self.nvars, 1 if not self.terms else _one_like(next(iter(self.terms.values()))))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self, var):
        t = {}
        for e, c in self.terms.items():
            if e[var]:
                ne = list(e)
                ne[var] -= 1
                t[tuple(ne)] = c * e[var]
        return Poly(self.nvars, t)

    def subst_zero(self, var):
        t = {e: c for e, c in self.terms.items() if e[var] == 0}
        return Poly(self.nvars, t)

    def map_coeffs(self, fn):
        t = {}
        for e, c in self.terms.items():
            v = fn(c)
            if not _is_zero(v):
                t[e] = v
        return Poly(self.nvars, t)

    def substitute(self, images):
        """Evaluate at a vector of Poly images (one per variable)."""
        nv = images[0].nvars
        out = Poly(nv)
        for e, c in self.terms.items():
            term = Poly.constant(nv, c)
            for i, p in enumerate(e):
                if p:
                    term = term * images[i].pow(p)
            out = out + term
        return out

    def evaluate(self, point):
        total = None
        for e, c in self.terms.items():
            v = c
            for i, p in enumerate(e):
                for _ in range(p):
                    v = v * point[i]
            total = v if total is None else total + v
        if total is None:
            return Fraction(0)
        return total

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def canonical_items(self):
        """(exponent, coefficient) pairs sorted by total degree then lex."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]))

    def __eq__(self, other):
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(self.canonical_items())))

    def __repr__(self):
        return "Poly(%d, %r)" % (self.nvars, self.terms)


def _one_like(c):
    if hasattr(c, "ctx"):
        return c.ctx.one()
    return Fraction(1)
