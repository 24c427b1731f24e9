"""Quasi-polynomials: one rational-coefficient polynomial per residue class
of a period lattice, plus the intermediate exponential-polynomial form
(finite sums of characters times polynomials) produced by the residue engine.
"""

from fractions import Fraction
from itertools import product
from math import lcm

from .polynomial import Poly


class NonRationalCoefficient(Exception):
    pass


class QuasiPolynomial:
    """Function on Z^n given by one polynomial per coset of prod_i (p_i Z)."""

    __slots__ = ("n", "periods", "cosets")

    def __init__(self, n, periods, cosets):
        self.n = n
        self.periods = tuple(periods)
        self.cosets = cosets

    @classmethod
    def constant(cls, n, value):
        return cls(n, (1,) * n, {(0,) * n: Poly.constant(n, Fraction(value))})

    def evaluate(self, h):
        key = tuple(int(x) % p for x, p in zip(h, self.periods))
        return Fraction(self.cosets[key].evaluate([Fraction(x) for x in h]))

    def total_degree(self):
        return max(p.total_degree() for p in self.cosets.values())

    def with_periods(self, periods):
        """Re-express over coarser (multiple) periods."""
        assert all(q % p == 0 for p, q in zip(self.periods, periods))
        cosets = {}
        for key in product(*[range(q) for q in periods]):
            src = tuple(k % p for k, p in zip(key, self.periods))
            cosets[key] = self.cosets[src]
        return QuasiPolynomial(self.n, periods, cosets)

    def minimized(self):
        """Shrink each coordinate period to the smallest divisor that still
        represents the same function."""
        periods = list(self.periods)
        cosets = dict(self.cosets)
        for i in range(self.n):
            changed = True
            while changed:
                changed = False
                for q in _proper_divisors(periods[i]):
                    if _period_works(cosets, periods, i, q):
                        newc = {}
                        for key, poly in cosets.items():
                            nk = key[:i] + (key[i] % q,) + key[i + 1:]
                            newc[nk] = poly
                        cosets = newc
                        periods[i] = q
                        changed = True
                        break
        return QuasiPolynomial(self.n, tuple(periods), cosets)

    def __eq__(self, other):
        if not isinstance(other, QuasiPolynomial) or self.n != other.n:
            return NotImplemented
        per = tuple(lcm(p, q) for p, q in zip(self.periods, other.periods))
        a = self.with_periods(per)
        b = other.with_periods(per)
        return a.cosets == b.cosets

    def __hash__(self):
        m = self.minimized()
        return hash((m.n, m.periods,
                     tuple(sorted((k, tuple(p.canonical_items()))
                                  for k, p in m.cosets.items()))))

    def __repr__(self):
        return "QuasiPolynomial(n=%d, periods=%r, %d cosets)" % (
            self.n, self.periods, len(self.cosets))


def _proper_divisors(p):
    return [q for q in range(1, p) if p % q == 0]


def _period_works(cosets, periods, i, q):
    for key, poly in cosets.items():
        red = key[:i] + (key[i] % q,) + key[i + 1:]
        if cosets[red] != poly:
            return False
    return True


class ExponentialPoly:
    """Sum over characters g of e^{2 pi i <g, h>} * P_g(h).

    The polynomials carry cyclotomic coefficients; materializing into a
    QuasiPolynomial resolves the characters into per-coset polynomials,
    which must come out rational.
    """

    __slots__ = ("n", "ctx", "parts")

    def __init__(self, n, ctx, parts=None):
        self.n = n
        self.ctx = ctx
        self.parts = dict(parts or {})   # gamma tuple (Fractions mod 1) -> Poly

    def add_part(self, gamma, poly):
        gamma = tuple(Fraction(x) % 1 for x in gamma)
        cur = self.parts.get(gamma)
        cur = poly if cur is None else cur + poly
        if cur.is_zero():
            self.parts.pop(gamma, None)
        else:
            self.parts[gamma] = cur

    def pullback(self, matrix):
        """Precompose with an integer matrix: h = M x."""
        rows = len(matrix)
        cols = len(matrix[0])
        assert rows == self.n
        # image of variable h_i is row i of M applied to x
        var_images = [Poly.linear_form(cols, [Fraction(c) for c in matrix[i]])
                      for i in range(rows)]
        out = ExponentialPoly(cols, self.ctx)
        for gamma, poly in self.parts.items():
            new_gamma = tuple(sum(Fraction(matrix[i][j]) * gamma[i] for i in range(rows)) % 1
                              for j in range(cols))
            out.add_part(new_gamma, poly.substitute(var_images))
        return out

    def to_quasipolynomial(self):
        periods = [1] * self.n
        for gamma in self.parts:
            for i, x in enumerate(gamma):
                periods[i] = lcm(periods[i], x.denominator)
        cosets = {}
        for key in product(*[range(p) for p in periods]):
            total = Poly(self.n)
            for gamma, poly in self.parts.items():
                theta = sum(g * k for g, k in zip(gamma, key)) % 1
                char = self.ctx.root_of_unity(theta)
                total = total + poly.scale(char)
            cosets[key] = total.map_coeffs(_require_rational)
        return QuasiPolynomial(self.n, tuple(periods), cosets).minimized()


def _require_rational(c):
    if hasattr(c, "rational_value"):
        if not c.is_rational():
            raise NonRationalCoefficient(repr(c))
        return c.rational_value()
    return Fraction(c)
